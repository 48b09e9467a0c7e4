#pragma once

#include <memory>
#include <optional>

#include "bbk/linalg.hpp"
#include "bbk/polynomial.hpp"
#include "bbk/redstruct.hpp"

namespace bbk {

/// A homogeneous border prebasis truncated at a maximum degree: one tail
/// coefficient vector per border term sigma with
/// mindeg(border) <= deg(sigma) <= max_degree.
///
/// The stored values are the c_{sigma,tau} of g_sigma = sigma - sum c tau,
/// indexed by the canonical order of O_{deg(sigma)}. A freshly constructed
/// prebasis has all tails zero (the monomial prebasis).
template <class R>
class Prebasis {
 public:
  using Elem = typename R::Elem;

  Prebasis(R ring, std::shared_ptr<const OrderIdeal> oi, int max_degree)
      : ring_(std::move(ring)), oi_(std::move(oi)), dmax_(max_degree) {
    if (!oi_) throw Error("prebasis needs an order ideal");
    auto mindeg = oi_->border_min_degree();
    if (mindeg) {
      for (int d = *mindeg; d <= dmax_; ++d)
        for (const auto& sigma : oi_->border_slice(d))
          tails_.emplace(sigma, std::vector<Elem>(oi_->slice(d).size(), ring_.zero()));
    }
  }

  const R& ring() const { return ring_; }
  const OrderIdeal& order_ideal() const { return *oi_; }
  const std::shared_ptr<const OrderIdeal>& order_ideal_ptr() const { return oi_; }
  int max_degree() const { return dmax_; }

  /// Border terms with stored tails, by (degree, canonical) order.
  std::vector<Term> heads() const {
    std::vector<Term> out;
    auto mindeg = oi_->border_min_degree();
    if (!mindeg) return out;
    for (int d = *mindeg; d <= dmax_; ++d)
      for (const auto& sigma : oi_->border_slice(d)) out.push_back(sigma);
    return out;
  }

  const std::vector<Elem>& tail(const Term& sigma) const {
    auto it = tails_.find(sigma);
    if (it == tails_.end()) {
      if (oi_->index(sigma) != 1)
        throw NotInBorder("term " + sigma.str() + " is not a border term");
      throw InsufficientPrebasisDegree(
          "prebasis stores tails through degree " + std::to_string(dmax_) +
          " but degree " + std::to_string(sigma.degree()) + " is needed");
    }
    return it->second;
  }

  void set_tail(const Term& sigma, std::vector<Elem> coeffs) {
    auto it = tails_.find(sigma);
    if (it == tails_.end()) {
      if (oi_->index(sigma) != 1)
        throw NotInBorder("term " + sigma.str() + " is not a border term");
      throw InsufficientPrebasisDegree(
          "cannot set a tail beyond the prebasis degree " + std::to_string(dmax_));
    }
    if (coeffs.size() != it->second.size())
      throw DimensionMismatch("tail vector length must be |O_d| = " +
                              std::to_string(it->second.size()));
    it->second = std::move(coeffs);
  }

  /// Convenience: set the tail from (term, coefficient) pairs over O_d.
  void set_tail(const Term& sigma,
                const std::vector<std::pair<Term, Elem>>& entries) {
    auto slice = oi_->slice(sigma.degree());
    std::vector<Elem> coeffs(slice.size(), ring_.zero());
    for (const auto& [t, v] : entries) {
      bool placed = false;
      for (size_t i = 0; i < slice.size(); ++i)
        if (slice[i] == t) {
          coeffs[i] = v;
          placed = true;
          break;
        }
      if (!placed)
        throw Error("tail term " + t.str() + " is not in O at degree " +
                    std::to_string(sigma.degree()));
    }
    set_tail(sigma, std::move(coeffs));
  }

  /// g_sigma = sigma - sum c_{sigma,tau} tau.
  Poly<R> element(const Term& sigma) const {
    const auto& coeffs = tail(sigma);
    auto slice = oi_->slice(sigma.degree());
    Poly<R> g = poly_term(ring_, sigma, ring_.one());
    for (size_t i = 0; i < slice.size(); ++i)
      poly_add_term(ring_, g, slice[i], ring_.neg(coeffs[i]));
    return g;
  }

  /// Truncation to a smaller maximum degree.
  Prebasis truncated(int new_dmax) const {
    Prebasis out(ring_, oi_, new_dmax);
    for (auto& [sigma, coeffs] : out.tails_) coeffs = tail(sigma);
    return out;
  }

 private:
  R ring_;
  std::shared_ptr<const OrderIdeal> oi_;
  int dmax_;
  std::map<Term, std::vector<Elem>> tails_;
};

template <class R>
struct ReductionStep {
  typename R::Elem coeff;  // coefficient of the rewritten term
  Term multiplier;         // eta
  Term head;               // sigma
};

template <class R>
struct Reduction {
  Poly<R> normal_form;
  std::vector<ReductionStep<R>> steps;
};

/// One border reduction pass: picker chooses which reducible support term to
/// rewrite next (its index in the supplied list). Confluence makes the
/// normal form independent of that choice for degree-increasing structures.
template <class R, class S, class Picker>
Reduction<R> reduce_with_picker(const Prebasis<R>& g, const S& structure,
                                Poly<R> f, Picker&& pick, size_t max_steps = 0) {
  const R& ring = g.ring();
  const OrderIdeal& oi = g.order_ideal();
  Reduction<R> out;
  size_t steps = 0;
  while (true) {
    std::vector<Term> reducible;
    for (const auto& [t, v] : f.c)
      if (!oi.contains(t)) reducible.push_back(t);
    if (reducible.empty()) break;
    size_t which = pick(reducible);
    const Term beta = reducible.at(which);
    auto owner = structure.cone_owner(beta);
    if (!owner)
      throw InternalInconsistency("reducible term has no cone owner");
    const Term sigma = *owner;
    const Term eta = quotient(beta, sigma);
    const auto& coeffs = g.tail(sigma);
    auto slice = oi.slice(sigma.degree());
    typename R::Elem c = poly_coeff(ring, f, beta);
    f.c.erase(beta);
    for (size_t i = 0; i < slice.size(); ++i)
      poly_add_term(ring, f, mul(eta, slice[i]), ring.mul(c, coeffs[i]));
    out.steps.push_back(ReductionStep<R>{c, eta, sigma});
    if (max_steps != 0 && ++steps >= max_steps)
      throw StepLimitExceeded("reduction exceeded the step limit");
  }
  out.normal_form = std::move(f);
  return out;
}

/// Deterministic policy: rewrite the reducible term with the maximal
/// (index, canonical order) pair.
template <class R, class S>
Reduction<R> reduce(const Prebasis<R>& g, const S& structure, Poly<R> f,
                    size_t max_steps = 0) {
  const OrderIdeal& oi = g.order_ideal();
  auto pick = [&oi](const std::vector<Term>& reducible) -> size_t {
    size_t best = 0;
    int best_index = oi.index(reducible[0]);
    for (size_t i = 1; i < reducible.size(); ++i) {
      int idx = oi.index(reducible[i]);
      if (idx > best_index ||
          (idx == best_index && reducible[i] > reducible[best])) {
        best = i;
        best_index = idx;
      }
    }
    return best;
  };
  return reduce_with_picker(g, structure, std::move(f), pick, max_steps);
}

/// Replays a trace: reconstructs sum_j c_j eta_j g_{sigma_j}.
template <class R>
Poly<R> replay_trace(const Prebasis<R>& g,
                     const std::vector<ReductionStep<R>>& steps) {
  Poly<R> acc;
  for (const auto& s : steps) {
    Poly<R> contrib = poly_shift(g.ring(), g.element(s.head), s.multiplier);
    acc = poly_add(g.ring(), acc, poly_scale(g.ring(), s.coeff, contrib));
  }
  return acc;
}

/// Rows spanning <TG_d>: every reductor eta g_sigma with eta multiplicative
/// for sigma and deg(eta sigma) = d, over the canonical monomial basis.
template <class R>
Mat<R> reductor_span_matrix(const Prebasis<R>& g, const ReductionStructure& s,
                            int d) {
  if (d > g.max_degree())
    throw InsufficientPrebasisDegree("reductor span at degree " + std::to_string(d) +
                                     " exceeds the prebasis degree");
  const OrderIdeal& oi = g.order_ideal();
  auto basis = terms_of_degree(oi.n_vars(), d);
  Mat<R> m(g.ring(), 0, static_cast<int>(basis.size()));
  auto mindeg = oi.border_min_degree();
  if (!mindeg) return m;
  for (int e = *mindeg; e <= d; ++e)
    for (const auto& sigma : oi.border_slice(e)) {
      Poly<R> gs = g.element(sigma);
      for (const auto& eta : s.multiplicative_slice(sigma, d - e))
        m.append_row(poly_to_row(g.ring(), poly_shift(g.ring(), gs, eta), basis));
    }
  return m;
}

template <class R>
long long reductor_span_dim(const Prebasis<R>& g, const ReductionStructure& s,
                            int d) {
  return rank(reductor_span_matrix(g, s, d));
}

/// Rows spanning (G)_d: all monomial multiples m g_sigma of degree d with
/// g_sigma in G_{<= d}.
template <class R>
Mat<R> ideal_multiples_matrix(const Prebasis<R>& g, int d) {
  if (d > g.max_degree())
    throw InsufficientPrebasisDegree("ideal slice at degree " + std::to_string(d) +
                                     " exceeds the prebasis degree");
  const OrderIdeal& oi = g.order_ideal();
  auto basis = terms_of_degree(oi.n_vars(), d);
  Mat<R> m(g.ring(), 0, static_cast<int>(basis.size()));
  auto mindeg = oi.border_min_degree();
  if (!mindeg) return m;
  for (int e = *mindeg; e <= d; ++e)
    for (const auto& sigma : oi.border_slice(e)) {
      Poly<R> gs = g.element(sigma);
      for (const auto& mono : terms_of_degree(oi.n_vars(), d - e))
        m.append_row(poly_to_row(g.ring(), poly_shift(g.ring(), gs, mono), basis));
    }
  return m;
}

template <class R>
long long ideal_slice_dim(const Prebasis<R>& g, int d) {
  return rank(ideal_multiples_matrix(g, d));
}

struct CriterionDegree {
  int d;
  long long span_dim;
  long long ideal_dim;
};

struct CriterionReport {
  bool pass = true;
  int first_fail = -1;
  std::vector<CriterionDegree> degrees;
};

/// Degree-by-degree comparison of <TG_d> against (G)_d; a border prebasis
/// is a basis exactly when the two agree in every degree. Scans d = 0..d_max
/// and stops at the first mismatch.
template <class R>
CriterionReport reductor_criterion(const Prebasis<R>& g,
                                   const ReductionStructure& s, int d_max) {
  if (d_max > g.max_degree())
    throw InsufficientPrebasisDegree("criterion range exceeds the prebasis degree");
  CriterionReport rep;
  for (int d = 0; d <= d_max; ++d) {
    long long span = reductor_span_dim(g, s, d);
    long long ideal = ideal_slice_dim(g, d);
    rep.degrees.push_back({d, span, ideal});
    if (span != ideal) {
      rep.pass = false;
      rep.first_fail = d;
      break;
    }
  }
  return rep;
}

}  // namespace bbk
