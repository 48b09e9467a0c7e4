// bbk: command-line front end for border-basis computations on infinite
// order ideals. Reads a workspace document (JSON) from --input or stdin,
// writes one JSON report to stdout, diagnostics to stderr.
//
// Exit codes: 0 verdict/report computed, 1 input error, 2 indeterminate.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bbk/io.hpp"

namespace {

using bbk::json;

int gotzmann_cap() {
  if (const char* env = std::getenv("BBK_GOTZMANN_CAP")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1) return cap;
    } catch (...) {
    }
    throw bbk::ParseError("BBK_GOTZMANN_CAP must be a positive integer");
  }
  return bbk::kDefaultGotzmannCap;
}

json read_json_file(const std::string& path) {
  if (path.empty() || path == "-") {
    json j;
    try {
      std::cin >> j;
    } catch (const std::exception& e) {
      throw bbk::ParseError(std::string("bad JSON on stdin: ") + e.what());
    }
    return j;
  }
  std::ifstream in(path);
  if (!in) throw bbk::Error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw bbk::ParseError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void emit(const json& report) { std::cout << report.dump(1) << "\n"; }

bbk::ReductionStructure structure_of(const bbk::Workspace& ws) {
  if (ws.structure) return *ws.structure;
  return bbk::ReductionStructure(ws.order_ideal);
}

template <class F>
auto with_ring(const bbk::RingDecl& decl, F&& f) {
  return std::visit(std::forward<F>(f), decl);
}

json require_prebasis_doc(const bbk::Workspace& ws) {
  if (ws.prebasis_doc.is_null())
    throw bbk::ParseError("this command needs a \"prebasis\" document in the workspace");
  return ws.prebasis_doc;
}

template <class R>
json matrix_to_json(const R& ring, const bbk::Mat<R>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(ring.str(m.at(i, j)));
    rows.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json term_list(const std::vector<bbk::Term>& ts) {
  json a = json::array();
  for (const auto& t : ts) a.push_back(bbk::term_to_json(t));
  return a;
}

json pretty_list(const std::vector<bbk::Term>& ts, const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& t : ts) a.push_back(t.pretty(names));
  return a;
}

int cmd_border(const bbk::Workspace& ws, int degree) {
  auto b = ws.order_ideal->border_slice(degree);
  emit(json{{"degree", degree},
            {"border", term_list(b)},
            {"pretty", pretty_list(b, ws.variables)}});
  return 0;
}

int cmd_hilbert(const bbk::Workspace& ws, int through) {
  auto hd = ws.order_ideal->hilbert_data(through, gotzmann_cap());
  json t = hd.gotzmann_t ? json(*hd.gotzmann_t) : json(nullptr);
  emit(json{{"values", hd.values}, {"gotzmann_t", t}});
  return 0;
}

int cmd_index(const bbk::Workspace& ws, const std::string& term_str) {
  bbk::Term t = bbk::parse_term(term_str);
  if (t.n_vars() != ws.order_ideal->n_vars())
    throw bbk::ParseError("term has the wrong number of exponents");
  emit(json{{"term", bbk::term_to_json(t)}, {"index", ws.order_ideal->index(t)}});
  return 0;
}

int cmd_structure(const bbk::Workspace& ws, int degree) {
  auto s = structure_of(ws);
  const auto& oi = *ws.order_ideal;
  json owners = json::array();
  for (const auto& t : bbk::terms_of_degree(oi.n_vars(), degree)) {
    auto o = s.cone_owner(t);
    if (o)
      owners.push_back(json{{"term", bbk::term_to_json(t)},
                            {"owner", bbk::term_to_json(*o)}});
  }
  json mult = json::array();
  auto mindeg = oi.border_min_degree();
  if (mindeg) {
    for (int e = *mindeg; e <= degree; ++e)
      for (const auto& sigma : oi.border_slice(e))
        mult.push_back(json{{"head", bbk::term_to_json(sigma)},
                            {"multipliers", term_list(s.multiplicative_slice(sigma, degree - e))}});
  }
  emit(json{{"degree", degree},
            {"labels", term_list(s.labels_at(degree))},
            {"owners", owners},
            {"multiplicative", mult}});
  return 0;
}

int cmd_reduce(const bbk::Workspace& ws, const std::string& poly_path) {
  json pj = read_json_file(poly_path);
  return with_ring(ws.ring, [&](const auto& ring) -> int {
    auto g = bbk::prebasis_from_json(ring, require_prebasis_doc(ws), ws.order_ideal);
    auto f = bbk::poly_from_json(ring, pj, ws.order_ideal->n_vars());
    auto red = bbk::reduce(g, structure_of(ws), f);
    json trace = json::array();
    for (const auto& st : red.steps)
      trace.push_back(json{{"coeff", ring.str(st.coeff)},
                           {"multiplier", bbk::term_to_json(st.multiplier)},
                           {"head", bbk::term_to_json(st.head)}});
    emit(json{{"normal_form", bbk::poly_to_json(ring, red.normal_form)},
              {"trace", trace}});
    return 0;
  });
}

int cmd_matrices(const bbk::Workspace& ws, int degree) {
  return with_ring(ws.ring, [&](const auto& ring) -> int {
    auto g = bbk::prebasis_from_json(ring, require_prebasis_doc(ws), ws.order_ideal);
    json ms = json::array();
    for (int r = 0; r < ws.order_ideal->n_vars(); ++r) {
      json m = matrix_to_json(ring, bbk::multiplication_matrix(g, degree, r));
      m["variable"] = ws.variables[r];
      ms.push_back(m);
    }
    emit(json{{"degree", degree}, {"matrices", ms}});
    return 0;
  });
}

int cmd_commutator(const bbk::Workspace& ws, int degree, int r, int s) {
  return with_ring(ws.ring, [&](const auto& ring) -> int {
    auto g = bbk::prebasis_from_json(ring, require_prebasis_doc(ws), ws.order_ideal);
    auto c = bbk::commutator(g, degree, r, s);
    json m = matrix_to_json(ring, c);
    m["degree"] = degree;
    m["vars"] = json::array({r, s});
    m["zero"] = c.is_zero();
    emit(m);
    return 0;
  });
}

int cmd_check(const bbk::Workspace& ws) {
  return with_ring(ws.ring, [&](const auto& ring) -> int {
    using R = std::decay_t<decltype(ring)>;
    if constexpr (!R::is_field) {
      throw bbk::UnsupportedRing(
          "check needs field coefficients; run `conditions` over a parameter ring");
    } else {
      auto g = bbk::prebasis_from_json(ring, require_prebasis_doc(ws), ws.order_ideal);
      auto cert = bbk::check_basis(g, gotzmann_cap());
      json checked = json::array();
      for (int d = cert.checked_lo; d <= cert.checked_hi; ++d) checked.push_back(d);
      json rep{{"verdict", bbk::to_string(cert.verdict)},
               {"t", cert.t},
               {"checked_d", checked},
               {"witness", nullptr}};
      if (cert.witness) {
        rep["witness"] = json{{"d", cert.witness->d},       {"r", cert.witness->r},
                              {"s", cert.witness->s},       {"row", cert.witness->row},
                              {"col", cert.witness->col},   {"entry", cert.witness->entry}};
      }
      if (cert.inconsistent_head)
        rep["inconsistent_head"] = bbk::term_to_json(*cert.inconsistent_head);
      if (cert.verdict == bbk::BasisVerdict::kIndeterminate)
        rep["required_degree"] = cert.required_degree;
      emit(rep);
      return cert.verdict == bbk::BasisVerdict::kIndeterminate ? 2 : 0;
    }
  });
}

int cmd_conditions(const bbk::Workspace& ws) {
  if (!std::holds_alternative<bbk::ParamRing>(ws.ring))
    throw bbk::UnsupportedRing("conditions needs a parametric coefficient ring");
  const auto& ring = std::get<bbk::ParamRing>(ws.ring);
  auto g = bbk::prebasis_from_json(ring, require_prebasis_doc(ws), ws.order_ideal);
  auto conds = bbk::parametric_conditions(g, gotzmann_cap());
  json lines = json::array();
  for (const auto& c : conds) lines.push_back(ring.str(c));
  emit(json{{"conditions", lines}});
  return 0;
}

json workspace_out(const bbk::Workspace& ws, const json& prebasis) {
  return json{{"order_ideal", bbk::order_ideal_to_json(*ws.order_ideal, ws.variables)},
              {"prebasis", prebasis}};
}

int cmd_from_ideal(const bbk::Workspace& ws, int through) {
  if (ws.generators_doc.is_null())
    throw bbk::ParseError("from-ideal needs a \"generators\" document in the workspace");
  return with_ring(ws.ring, [&](const auto& ring) -> int {
    auto gens = bbk::generators_from_json(ring, ws.generators_doc, ws.order_ideal->n_vars());
    auto outcome = bbk::basis_from_ideal(ring, gens, ws.order_ideal, through);
    if (!outcome.ok()) {
      const auto& f = *outcome.failure;
      json fail{{"degree", f.degree},
                {"kind", f.kind == std::decay_t<decltype(f)>::Kind::kRankDefect
                             ? "rank_defect"
                             : "intersection"},
                {"ideal_dim", f.ideal_dim},
                {"order_dim", f.order_dim},
                {"ambient_dim", f.ambient_dim}};
      if (!f.witness.is_zero())
        fail["witness"] = bbk::poly_to_json(ring, f.witness);
      emit(json{{"failure", fail}});
      return 0;
    }
    emit(workspace_out(ws, bbk::prebasis_to_json(*outcome.prebasis,
                                                 bbk::ring_decl_to_json(ws.ring))));
    return 0;
  });
}

int cmd_extend(const bbk::Workspace& ws, int to_degree) {
  return with_ring(ws.ring, [&](const auto& ring) -> int {
    using R = std::decay_t<decltype(ring)>;
    if constexpr (!R::is_field) {
      throw bbk::UnsupportedRing("extend needs field coefficients");
    } else {
      auto g = bbk::prebasis_from_json(ring, require_prebasis_doc(ws), ws.order_ideal);
      auto ext = bbk::extend(g, to_degree, gotzmann_cap());
      emit(workspace_out(ws, bbk::prebasis_to_json(ext, bbk::ring_decl_to_json(ws.ring))));
      return 0;
    }
  });
}

// Staircase picture of O, the border and the index strata; two variables.
int cmd_diagram(const bbk::Workspace& ws, int through) {
  const auto& oi = *ws.order_ideal;
  if (oi.n_vars() != 2)
    throw bbk::UnsupportedRing("diagram renders two-variable order ideals only");
  const int cell = 24, pad = 30;
  int size = pad * 2 + cell * (through + 1);
  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << size << "' height='"
      << size << "'>\n";
  for (int a = 0; a <= through; ++a)
    for (int b = 0; b <= through - a; ++b) {
      bbk::Term t(std::vector<int>{a, b});
      int idx = oi.index(t);
      int x = pad + a * cell;
      int y = size - pad - b * cell;
      if (idx == 0) {
        svg << "<circle cx='" << x << "' cy='" << y << "' r='5' fill='black'/>\n";
      } else if (idx == 1) {
        svg << "<circle cx='" << x << "' cy='" << y
            << "' r='5' fill='none' stroke='blue' stroke-width='2'/>\n";
      } else {
        svg << "<text x='" << x - 5 << "' y='" << y + 5 << "' fill='gray'>" << idx
            << "</text>\n";
      }
    }
  svg << "</svg>\n";
  std::cout << svg.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homogeneous border bases on infinite order ideals"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string input;
  app.add_option("--input", input, "workspace JSON file (default: stdin)");

  int degree = 0, through = 8, to_degree = 0, var_r = 0, var_s = 1;
  std::string term_str, poly_path;

  auto* border = app.add_subcommand("border", "border slice of the order ideal");
  border->add_option("--degree", degree)->required();
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert values and the degree bound t");
  hilbert->add_option("--through", through);
  auto* index = app.add_subcommand("index", "index of a term");
  index->add_option("--term", term_str)->required();
  auto* structure = app.add_subcommand("structure", "labels, cone owners, multiplicative slices");
  structure->add_flag("--describe");
  structure->add_option("--degree", degree)->required();
  auto* reduce = app.add_subcommand("reduce", "normal form and reduction trace");
  reduce->add_option("--poly", poly_path)->required();
  auto* matrices = app.add_subcommand("matrices", "graded formal multiplication matrices");
  matrices->add_option("--degree", degree)->required();
  auto* comm = app.add_subcommand("commutator", "commutator of two multiplication maps");
  comm->add_option("--degree", degree)->required();
  std::vector<int> vars;
  comm->add_option("--vars", vars)->expected(2)->required();
  auto* check = app.add_subcommand("check", "basis certificate");
  auto* conditions = app.add_subcommand("conditions", "parametric basis conditions");
  auto* from_ideal = app.add_subcommand("from-ideal", "extract the border basis of an ideal");
  from_ideal->add_option("--through", through)->required();
  auto* extend = app.add_subcommand("extend", "extend a certified basis to higher degree");
  extend->add_option("--to", to_degree)->required();
  auto* diagram = app.add_subcommand("diagram", "SVG staircase picture");
  diagram->add_option("--through", through);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    bbk::Workspace ws = bbk::workspace_from_json(read_json_file(input));
    if (border->parsed()) return cmd_border(ws, degree);
    if (hilbert->parsed()) return cmd_hilbert(ws, through);
    if (index->parsed()) return cmd_index(ws, term_str);
    if (structure->parsed()) return cmd_structure(ws, degree);
    if (reduce->parsed()) return cmd_reduce(ws, poly_path);
    if (matrices->parsed()) return cmd_matrices(ws, degree);
    if (comm->parsed()) {
      if (vars.size() != 2) throw bbk::ParseError("--vars needs two variable indices");
      var_r = vars[0];
      var_s = vars[1];
      return cmd_commutator(ws, degree, var_r, var_s);
    }
    if (check->parsed()) return cmd_check(ws);
    if (conditions->parsed()) return cmd_conditions(ws);
    if (from_ideal->parsed()) return cmd_from_ideal(ws, through);
    if (extend->parsed()) return cmd_extend(ws, to_degree);
    if (diagram->parsed()) return cmd_diagram(ws, through);
  } catch (const bbk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
