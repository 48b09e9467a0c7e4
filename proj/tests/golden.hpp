// Shared fixtures: the order ideals and prebases every suite exercises.
#pragma once

#include <memory>
#include <random>

#include "bbk/synthesis.hpp"

namespace golden {

using namespace bbk;

inline Term t2(int a, int b) { return Term(std::vector<int>{a, b}); }
inline Term t3(int a, int b, int c) { return Term(std::vector<int>{a, b, c}); }

// Complement (y^4, x y^3, x^3 y^2): the two-variable running example whose
// border is {y^4, x y^3, x^2 y^3} together with the ray x^k y^2, k >= 3.
inline std::shared_ptr<const OrderIdeal> oi_y4_xy3_x3y2() {
  return std::make_shared<OrderIdeal>(
      2, std::vector<Term>{t2(0, 4), t2(1, 3), t2(3, 2)});
}

// Complement (x^3 y, x y^2, y^4): the termination examples.
inline std::shared_ptr<const OrderIdeal> oi_x3y_xy2_y4() {
  return std::make_shared<OrderIdeal>(
      2, std::vector<Term>{t2(3, 1), t2(1, 2), t2(0, 4)});
}

// Complement (x^3 y, y^3): the index-vs-multiplication example.
inline std::shared_ptr<const OrderIdeal> oi_x3y_y3() {
  return std::make_shared<OrderIdeal>(2, std::vector<Term>{t2(3, 1), t2(0, 3)});
}

// Complement (x y, x z) in three variables: O = T(x) u T(y,z).
inline std::shared_ptr<const OrderIdeal> oi_xy_xz() {
  return std::make_shared<OrderIdeal>(
      3, std::vector<Term>{t3(1, 1, 0), t3(1, 0, 1)});
}

// Complement (x^2 y): order ideal matching the Hilbert function of a cubic.
inline std::shared_ptr<const OrderIdeal> oi_x2y() {
  return std::make_shared<OrderIdeal>(2, std::vector<Term>{t2(2, 1)});
}

// Complement (y^2): right Hilbert function for (x y), yet no basis exists.
inline std::shared_ptr<const OrderIdeal> oi_y2() {
  return std::make_shared<OrderIdeal>(2, std::vector<Term>{t2(0, 2)});
}

// Label order with the two degree-5 border terms swapped: x^3 y^2 before
// x^2 y^3 (the companion structure of the running example).
inline ReductionStructure swapped5_structure(std::shared_ptr<const OrderIdeal> oi) {
  std::map<int, std::vector<Term>> explicit_orders;
  explicit_orders.emplace(5, std::vector<Term>{t2(3, 2), t2(2, 3)});
  return ReductionStructure(std::move(oi), TieBreak::kLexAsc, std::move(explicit_orders));
}

// g_{x^2 y^3} = x^2 y^3 + x^5 and g_{x^3 y^2} = x^3 y^2 + x^5; every other
// border element stays monomial. Not a basis.
template <class R>
Prebasis<R> g_plain(const R& ring, std::shared_ptr<const OrderIdeal> oi, int dmax) {
  Prebasis<R> g(ring, std::move(oi), dmax);
  g.set_tail(t2(2, 3), {{t2(5, 0), ring.from_int(-1)}});
  g.set_tail(t2(3, 2), {{t2(5, 0), ring.from_int(-1)}});
  return g;
}

// g'_{y^4} = y^4 + x^3 y, g'_{x y^3} = x y^3 + x^4, g'_{x^2 y^3} = x^2 y^3 + x^5,
// g'_{x^3 y^2} = x^3 y^2 + x^5 - x^4 y, g'_{x^k y^2} = x^k y^2 - x^{k+1} y + x^{k+2}.
// A certified basis.
template <class R>
Prebasis<R> g_basis(const R& ring, std::shared_ptr<const OrderIdeal> oi, int dmax) {
  Prebasis<R> g(ring, std::move(oi), dmax);
  g.set_tail(t2(0, 4), {{t2(3, 1), ring.from_int(-1)}});
  g.set_tail(t2(1, 3), {{t2(4, 0), ring.from_int(-1)}});
  if (dmax >= 5) {
    g.set_tail(t2(2, 3), {{t2(5, 0), ring.from_int(-1)}});
    g.set_tail(t2(3, 2), {{t2(5, 0), ring.from_int(-1)}, {t2(4, 1), ring.from_int(1)}});
  }
  for (int k = 4; k + 2 <= dmax; ++k)
    g.set_tail(t2(k, 2), {{t2(k + 1, 1), ring.from_int(1)}, {t2(k + 2, 0), ring.from_int(-1)}});
  return g;
}

// On oi_x3y_xy2_y4: g_{x y^2} = x y^2 - x^2 y - y^3, the rest monomial.
template <class R>
Prebasis<R> g_loop(const R& ring, std::shared_ptr<const OrderIdeal> oi, int dmax) {
  Prebasis<R> g(ring, std::move(oi), dmax);
  g.set_tail(t2(1, 2), {{t2(2, 1), ring.from_int(1)}, {t2(0, 3), ring.from_int(1)}});
  return g;
}

// Random tails over the rationals, deterministic per seed.
inline Prebasis<RationalField> random_prebasis(std::shared_ptr<const OrderIdeal> oi,
                                               int dmax, unsigned seed) {
  RationalField q;
  Prebasis<RationalField> g(q, oi, dmax);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  auto mindeg = oi->border_min_degree();
  if (!mindeg) return g;
  for (int d = *mindeg; d <= dmax; ++d)
    for (const auto& sigma : oi->border_slice(d)) {
      std::vector<Rational> coeffs;
      for (size_t i = 0; i < oi->slice(d).size(); ++i)
        coeffs.emplace_back(num(rng), den(rng));
      g.set_tail(sigma, std::move(coeffs));
    }
  return g;
}

}  // namespace golden
