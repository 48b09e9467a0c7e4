#pragma once

#include <optional>
#include <set>
#include <string>

#include "bbk/prebasis.hpp"

namespace bbk {

namespace detail {
template <class R>
void require_matrix_degree(const Prebasis<R>& g, int d) {
  // Entries of the d-graded matrices come from the degree d+1 tails; they
  // are only consulted if that border slice is nonempty.
  if (d + 1 > g.max_degree() && !g.order_ideal().border_slice(d + 1).empty())
    throw InsufficientPrebasisDegree(
        "graded matrices at degree " + std::to_string(d) +
        " need tails at degree " + std::to_string(d + 1));
}
}  // namespace detail

/// The r-th d-graded formal multiplication matrix of G: shape
/// |O_{d+1}| x |O_d|, column for tau in O_d holding either the unit vector
/// of x_r tau (when that product stays in O) or the tail coefficients of
/// g_{x_r tau} (when it falls onto the border).
template <class R>
Mat<R> multiplication_matrix(const Prebasis<R>& g, int d, int var) {
  const OrderIdeal& oi = g.order_ideal();
  if (var < 0 || var >= oi.n_vars()) throw Error("variable index out of range");
  if (d < 0) throw Error("degree must be nonnegative");
  detail::require_matrix_degree(g, d);
  auto cols = oi.slice(d);
  auto rows = oi.slice(d + 1);
  Mat<R> m(g.ring(), static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  Term x = Term::variable(oi.n_vars(), var);
  for (size_t l = 0; l < cols.size(); ++l) {
    Term p = mul(x, cols[l]);
    if (oi.contains(p)) {
      for (size_t k = 0; k < rows.size(); ++k)
        if (rows[k] == p) {
          m.at(static_cast<int>(k), static_cast<int>(l)) = g.ring().one();
          break;
        }
    } else {
      const auto& coeffs = g.tail(p);  // p = x_r tau is a border term
      for (size_t k = 0; k < rows.size(); ++k)
        m.at(static_cast<int>(k), static_cast<int>(l)) = coeffs[k];
    }
  }
  return m;
}

/// All n+1 graded multiplication matrices at degree d, variable order.
template <class R>
std::vector<Mat<R>> build_matrices(const Prebasis<R>& g, int d) {
  std::vector<Mat<R>> out;
  for (int r = 0; r < g.order_ideal().n_vars(); ++r)
    out.push_back(multiplication_matrix(g, d, r));
  return out;
}

/// X_r^{(d+1)} X_s^{(d)} - X_s^{(d+1)} X_r^{(d)}, shape |O_{d+2}| x |O_d|.
template <class R>
Mat<R> commutator(const Prebasis<R>& g, int d, int r, int s) {
  auto a = mat_mul(multiplication_matrix(g, d + 1, r), multiplication_matrix(g, d, s));
  auto b = mat_mul(multiplication_matrix(g, d + 1, s), multiplication_matrix(g, d, r));
  return mat_sub(a, b);
}

struct CommutatorWitness {
  int d, r, s;
  int row, col;        // zero-based position of a nonzero residual entry
  std::string entry;   // serialized value
};

enum class BasisVerdict { kBasis, kNotBasis, kIndeterminate };

inline std::string to_string(BasisVerdict v) {
  switch (v) {
    case BasisVerdict::kBasis: return "basis";
    case BasisVerdict::kNotBasis: return "not-basis";
    case BasisVerdict::kIndeterminate: return "indeterminate";
  }
  return "?";
}

struct BasisCertificate {
  BasisVerdict verdict = BasisVerdict::kIndeterminate;
  int t = -1;                  // stabilization degree of the Hilbert growth
  int checked_lo = 0;          // commutator window [lo, hi]; empty when lo > hi
  int checked_hi = -1;
  std::optional<CommutatorWitness> witness;
  std::optional<Term> inconsistent_head;  // supplied element outside the ideal
  int required_degree = -1;    // tails needed for a verdict (indeterminate)
};

/// Decides basis-ness through the finite commutator window
/// [mindeg(border)-1, t-1], where t is the capped Hilbert-growth
/// stabilization degree. Requires tails through degree t+1; with more tails
/// supplied, the surplus elements are checked for membership in the ideal
/// generated by the certified part, which is what "the extension" of the
/// window certificate generates degree by degree.
template <class R>
BasisCertificate check_basis(const Prebasis<R>& g, int cap = kDefaultGotzmannCap) {
  static_assert(R::is_field,
                "check_basis needs a field; use parametric_conditions over parameter rings");
  const OrderIdeal& oi = g.order_ideal();
  BasisCertificate cert;
  auto mindeg = oi.border_min_degree();
  if (!mindeg) {
    cert.verdict = BasisVerdict::kBasis;  // empty border: G is empty and (G) = 0
    cert.t = oi.gotzmann_bound(cap);
    return cert;
  }
  cert.t = oi.gotzmann_bound(cap);
  if (g.max_degree() < cert.t + 1) {
    cert.verdict = BasisVerdict::kIndeterminate;
    cert.required_degree = cert.t + 1;
    return cert;
  }
  cert.checked_lo = std::max(0, *mindeg - 1);
  cert.checked_hi = cert.t - 1;
  for (int d = cert.checked_lo; d <= cert.checked_hi; ++d) {
    for (int r = 0; r < oi.n_vars(); ++r)
      for (int s = r + 1; s < oi.n_vars(); ++s) {
        Mat<R> c = commutator(g, d, r, s);
        for (int i = 0; i < c.rows(); ++i)
          for (int j = 0; j < c.cols(); ++j)
            if (!g.ring().is_zero(c.at(i, j))) {
              cert.verdict = BasisVerdict::kNotBasis;
              cert.witness = CommutatorWitness{d, r, s, i, j, g.ring().str(c.at(i, j))};
              return cert;
            }
      }
  }
  // Elements supplied beyond degree t+1 must lie in the ideal generated by
  // the certified part, otherwise G enlarges the ideal and cannot be the
  // basis of it.
  for (int d = cert.t + 2; d <= g.max_degree(); ++d) {
    auto border = oi.border_slice(d);
    if (border.empty()) continue;
    auto basis_terms = terms_of_degree(oi.n_vars(), d);
    Mat<R> span(g.ring(), 0, static_cast<int>(basis_terms.size()));
    for (int e = *mindeg; e <= cert.t + 1; ++e)
      for (const auto& sigma : oi.border_slice(e)) {
        Poly<R> gs = g.element(sigma);
        for (const auto& mono : terms_of_degree(oi.n_vars(), d - e))
          span.append_row(poly_to_row(g.ring(), poly_shift(g.ring(), gs, mono), basis_terms));
      }
    int base_rank = rank(span);
    for (const auto& sigma : border) {
      Mat<R> stacked = span;
      stacked.append_row(poly_to_row(g.ring(), g.element(sigma), basis_terms));
      if (rank(stacked) != base_rank) {
        cert.verdict = BasisVerdict::kNotBasis;
        cert.inconsistent_head = sigma;
        return cert;
      }
    }
  }
  cert.verdict = BasisVerdict::kBasis;
  return cert;
}

/// All polynomial conditions on the parameters that the commutator window
/// imposes: nonzero commutator entries for d in [mindeg(border)-1, t-1] and
/// r < s, deduplicated up to a nonzero rational scalar and normalized so the
/// canonically greatest parameter monomial has coefficient +1.
inline std::vector<ParamRing::Elem> parametric_conditions(
    const Prebasis<ParamRing>& g, int cap = kDefaultGotzmannCap) {
  const OrderIdeal& oi = g.order_ideal();
  const ParamRing& ring = g.ring();
  auto mindeg = oi.border_min_degree();
  if (!mindeg) return {};
  int t = oi.gotzmann_bound(cap);
  if (g.max_degree() < t + 1)
    throw InsufficientPrebasisDegree("parametric conditions need tails through degree " +
                                     std::to_string(t + 1));
  std::set<ParamRing::Elem> seen;
  for (int d = std::max(0, *mindeg - 1); d <= t - 1; ++d)
    for (int r = 0; r < oi.n_vars(); ++r)
      for (int s = r + 1; s < oi.n_vars(); ++s) {
        Mat<ParamRing> c = commutator(g, d, r, s);
        for (int i = 0; i < c.rows(); ++i)
          for (int j = 0; j < c.cols(); ++j)
            if (!ring.is_zero(c.at(i, j)))
              seen.insert(ring.make_monic(c.at(i, j)));
      }
  return {seen.begin(), seen.end()};
}

}  // namespace bbk
