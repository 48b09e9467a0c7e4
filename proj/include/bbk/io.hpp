#pragma once

#include <memory>
#include <optional>
#include <set>
#include <variant>

#include "json.hpp"

#include "bbk/synthesis.hpp"

namespace bbk {

using json = nlohmann::json;

using RingDecl = std::variant<RationalField, PrimeField, ParamRing>;

inline RingDecl ring_decl_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "rational") return RationalField{};
    throw ParseError("unknown coefficient field '" + j.get<std::string>() + "'");
  }
  if (j.is_object()) {
    if (j.contains("prime")) {
      if (!j["prime"].is_number_unsigned() && !j["prime"].is_number_integer())
        throw ParseError("\"prime\" must be an integer");
      long long p = j["prime"].get<long long>();
      if (p < 2) throw ParseError("\"prime\" must be at least 2");
      return PrimeField(static_cast<std::uint64_t>(p));
    }
    if (j.contains("parameters")) {
      std::vector<std::string> names;
      for (const auto& n : j["parameters"]) {
        if (!n.is_string()) throw ParseError("parameter names must be strings");
        names.push_back(n.get<std::string>());
      }
      return ParamRing(std::move(names));
    }
  }
  throw ParseError("coefficient field must be \"rational\", {\"prime\": p} or {\"parameters\": [...]}");
}

inline json ring_decl_to_json(const RingDecl& decl) {
  if (std::holds_alternative<RationalField>(decl)) return "rational";
  if (const auto* p = std::get_if<PrimeField>(&decl))
    return json{{"prime", p->modulus()}};
  const auto& pr = std::get<ParamRing>(decl);
  return json{{"parameters", pr.names()}};
}

inline json term_to_json(const Term& t) {
  json a = json::array();
  for (int e : t.exponents()) a.push_back(e);
  return a;
}

inline Term term_from_json(const json& j, int expect_vars = -1) {
  if (!j.is_array()) throw ParseError("term must be an array of exponents");
  std::vector<int> e;
  for (const auto& v : j) {
    if (!v.is_number_integer() && !v.is_number_unsigned())
      throw ParseError("term exponents must be integers");
    e.push_back(v.get<int>());
  }
  if (expect_vars >= 0 && static_cast<int>(e.size()) != expect_vars)
    throw ParseError("term has " + std::to_string(e.size()) + " exponents, expected " +
                     std::to_string(expect_vars));
  return Term(std::move(e));
}

/// { "variables": ["x","y","z"], "complement_generators": [[1,1,0],[1,0,1]] }
inline std::pair<std::shared_ptr<const OrderIdeal>, std::vector<std::string>>
order_ideal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("complement_generators"))
    throw ParseError("order ideal document needs \"variables\" and \"complement_generators\"");
  std::vector<std::string> names;
  for (const auto& n : j["variables"]) {
    if (!n.is_string()) throw ParseError("variable names must be strings");
    names.push_back(n.get<std::string>());
  }
  int nv = static_cast<int>(names.size());
  std::vector<Term> gens;
  for (const auto& g : j["complement_generators"]) gens.push_back(term_from_json(g, nv));
  return {std::make_shared<OrderIdeal>(nv, std::move(gens)), std::move(names)};
}

inline json order_ideal_to_json(const OrderIdeal& oi,
                                const std::vector<std::string>& names) {
  json gens = json::array();
  for (const auto& g : oi.complement_generators()) gens.push_back(term_to_json(g));
  return json{{"variables", names}, {"complement_generators", gens}};
}

/// { "tie_break": "lex_asc" | "lex_desc" | {"5": [[3,2],[2,3]], ...} }
inline ReductionStructure structure_from_json(
    const json& j, std::shared_ptr<const OrderIdeal> oi) {
  if (!j.is_object() || !j.contains("tie_break"))
    throw ParseError("structure document needs \"tie_break\"");
  const json& tb = j["tie_break"];
  if (tb.is_string()) {
    if (tb.get<std::string>() == "lex_asc")
      return ReductionStructure(std::move(oi), TieBreak::kLexAsc);
    if (tb.get<std::string>() == "lex_desc")
      return ReductionStructure(std::move(oi), TieBreak::kLexDesc);
    throw ParseError("tie_break must be \"lex_asc\", \"lex_desc\" or explicit lists");
  }
  if (tb.is_object()) {
    std::map<int, std::vector<Term>> orders;
    int nv = oi->n_vars();
    for (auto it = tb.begin(); it != tb.end(); ++it) {
      int d;
      try {
        d = std::stoi(it.key());
      } catch (...) {
        throw ParseError("explicit tie_break keys must be degrees");
      }
      std::vector<Term> labels;
      for (const auto& t : it.value()) labels.push_back(term_from_json(t, nv));
      orders.emplace(d, std::move(labels));
    }
    return ReductionStructure(std::move(oi), TieBreak::kLexAsc, std::move(orders));
  }
  throw ParseError("bad tie_break value");
}

template <class R>
json poly_to_json(const R& ring, const Poly<R>& p) {
  json o = json::object();
  for (const auto& [t, v] : p.c) o[t.str()] = ring.str(v);
  return o;
}

template <class R>
Poly<R> poly_from_json(const R& ring, const json& j, int n_vars) {
  if (!j.is_object()) throw ParseError("polynomial must map exponent vectors to coefficients");
  Poly<R> p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Term t = parse_term(it.key());
    if (t.n_vars() != n_vars)
      throw ParseError("polynomial term " + it.key() + " has wrong ambient");
    if (!it.value().is_string())
      throw ParseError("coefficients must be strings; got " + it.value().dump());
    poly_add_term(ring, p, t, ring.parse(it.value().template get<std::string>()));
  }
  return p;
}

/// { "coefficient_field": ..., "polynomials": [ { "head": [3,2], "tail": {"[5,0]": "-1"} } ] }
/// Every border term of degree between mindeg(border) and the maximal head
/// degree must appear exactly once.
template <class R>
Prebasis<R> prebasis_from_json(const R& ring, const json& j,
                               std::shared_ptr<const OrderIdeal> oi) {
  if (!j.is_object() || !j.contains("polynomials"))
    throw ParseError("prebasis document needs \"polynomials\"");
  const json& polys = j["polynomials"];
  if (!polys.is_array()) throw ParseError("\"polynomials\" must be an array");

  int nv = oi->n_vars();
  auto mindeg = oi->border_min_degree();
  int dmax = mindeg ? *mindeg - 1 : -1;
  std::vector<std::pair<Term, json>> entries;
  for (const auto& pj : polys) {
    if (!pj.is_object() || !pj.contains("head"))
      throw ParseError("each prebasis polynomial needs a \"head\"");
    Term head = term_from_json(pj["head"], nv);
    if (oi->index(head) != 1)
      throw ParseError("head " + head.str() + " is not a border term");
    dmax = std::max(dmax, head.degree());
    entries.emplace_back(std::move(head), pj.contains("tail") ? pj["tail"] : json::object());
  }

  Prebasis<R> g(ring, oi, dmax);
  std::set<Term> seen;
  for (auto& [head, tail_doc] : entries) {
    if (!seen.insert(head).second)
      throw ParseError("duplicate prebasis head " + head.str());
    auto slice = oi->slice(head.degree());
    std::vector<typename R::Elem> coeffs(slice.size(), ring.zero());
    if (!tail_doc.is_object()) throw ParseError("\"tail\" must be an object");
    for (auto it = tail_doc.begin(); it != tail_doc.end(); ++it) {
      Term t = parse_term(it.key());
      bool placed = false;
      for (size_t i = 0; i < slice.size(); ++i)
        if (slice[i] == t) {
          if (!it.value().is_string()) throw ParseError("tail coefficients must be strings");
          coeffs[i] = ring.parse(it.value().template get<std::string>());
          placed = true;
          break;
        }
      if (!placed)
        throw ParseError("tail term " + it.key() + " is not in O at degree " +
                         std::to_string(head.degree()));
    }
    g.set_tail(head, std::move(coeffs));
  }
  for (const auto& sigma : g.heads())
    if (!seen.count(sigma))
      throw ParseError("prebasis is missing the border term " + sigma.str() +
                       " at degree " + std::to_string(sigma.degree()));
  return g;
}

template <class R>
json prebasis_to_json(const Prebasis<R>& g, const json& ring_doc) {
  json polys = json::array();
  const auto& oi = g.order_ideal();
  for (const auto& sigma : g.heads()) {
    auto slice = oi.slice(sigma.degree());
    const auto& coeffs = g.tail(sigma);
    json tail = json::object();
    for (size_t i = 0; i < slice.size(); ++i)
      if (!g.ring().is_zero(coeffs[i])) tail[slice[i].str()] = g.ring().str(coeffs[i]);
    polys.push_back(json{{"head", term_to_json(sigma)}, {"tail", tail}});
  }
  return json{{"coefficient_field", ring_doc}, {"polynomials", polys}};
}

/// { "generators": [ { "[3,0]": "1", "[2,1]": "1", "[0,3]": "1" } ] }
template <class R>
std::vector<Poly<R>> generators_from_json(const R& ring, const json& j, int n_vars) {
  if (!j.is_object() || !j.contains("generators"))
    throw ParseError("ideal document needs \"generators\"");
  std::vector<Poly<R>> out;
  for (const auto& pj : j["generators"]) out.push_back(poly_from_json(ring, pj, n_vars));
  return out;
}

/// A workspace bundles the documents a CLI invocation may need. The
/// coefficient ring is taken from the prebasis document when present, else
/// from the top-level "coefficient_field"; it defaults to the rationals.
struct Workspace {
  std::vector<std::string> variables;
  std::shared_ptr<const OrderIdeal> order_ideal;
  std::optional<ReductionStructure> structure;
  RingDecl ring = RationalField{};
  json prebasis_doc;    // null when absent
  json generators_doc;  // null when absent
};

inline Workspace workspace_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order_ideal"))
    throw ParseError("workspace needs an \"order_ideal\" document");
  Workspace w;
  auto [oi, names] = order_ideal_from_json(j["order_ideal"]);
  w.order_ideal = std::move(oi);
  w.variables = std::move(names);
  if (j.contains("structure"))
    w.structure = structure_from_json(j["structure"], w.order_ideal);
  if (j.contains("prebasis") && j["prebasis"].contains("coefficient_field"))
    w.ring = ring_decl_from_json(j["prebasis"]["coefficient_field"]);
  else if (j.contains("coefficient_field"))
    w.ring = ring_decl_from_json(j["coefficient_field"]);
  if (j.contains("prebasis")) w.prebasis_doc = j["prebasis"];
  if (j.contains("generators")) w.generators_doc = j["generators"];
  return w;
}

}  // namespace bbk
