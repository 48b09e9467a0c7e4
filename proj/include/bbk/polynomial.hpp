#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "bbk/monomial.hpp"
#include "bbk/rings.hpp"

namespace bbk {

/// Sparse polynomial over a coefficient ring: support maps to nonzero
/// coefficients, kept with the canonically greatest term first.
template <class R>
struct Poly {
  using Elem = typename R::Elem;
  std::map<Term, Elem, std::greater<Term>> c;

  bool is_zero() const { return c.empty(); }

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [t, _] : c) d = std::max(d, t.degree());
    return d;
  }

  bool homogeneous() const {
    std::optional<int> d;
    for (const auto& [t, _] : c) {
      if (d && *d != t.degree()) return false;
      d = t.degree();
    }
    return true;
  }
};

template <class R>
Poly<R> poly_term(const R& ring, const Term& t, const typename R::Elem& coeff) {
  Poly<R> p;
  if (!ring.is_zero(coeff)) p.c.emplace(t, coeff);
  return p;
}

template <class R>
void poly_add_term(const R& ring, Poly<R>& p, const Term& t,
                   const typename R::Elem& coeff) {
  if (ring.is_zero(coeff)) return;
  auto it = p.c.find(t);
  if (it == p.c.end()) {
    p.c.emplace(t, coeff);
  } else {
    it->second = ring.add(it->second, coeff);
    if (ring.is_zero(it->second)) p.c.erase(it);
  }
}

template <class R>
Poly<R> poly_add(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r = a;
  for (const auto& [t, v] : b.c) poly_add_term(ring, r, t, v);
  return r;
}

template <class R>
Poly<R> poly_neg(const R& ring, const Poly<R>& a) {
  Poly<R> r;
  for (const auto& [t, v] : a.c) r.c.emplace(t, ring.neg(v));
  return r;
}

template <class R>
Poly<R> poly_sub(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  return poly_add(ring, a, poly_neg(ring, b));
}

template <class R>
Poly<R> poly_scale(const R& ring, const typename R::Elem& s, const Poly<R>& a) {
  Poly<R> r;
  if (ring.is_zero(s)) return r;
  for (const auto& [t, v] : a.c) {
    auto sv = ring.mul(s, v);
    if (!ring.is_zero(sv)) r.c.emplace(t, sv);
  }
  return r;
}

/// a * (monomial t).
template <class R>
Poly<R> poly_shift(const R& /*ring*/, const Poly<R>& a, const Term& t) {
  Poly<R> r;
  for (const auto& [u, v] : a.c) r.c.emplace(mul(u, t), v);
  return r;
}

template <class R>
Poly<R> poly_mul(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r;
  for (const auto& [ta, va] : a.c)
    for (const auto& [tb, vb] : b.c)
      poly_add_term(ring, r, mul(ta, tb), ring.mul(va, vb));
  return r;
}

template <class R>
typename R::Elem poly_coeff(const R& ring, const Poly<R>& a, const Term& t) {
  auto it = a.c.find(t);
  return it == a.c.end() ? ring.zero() : it->second;
}

template <class R>
bool poly_eq(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  if (a.c.size() != b.c.size()) return false;
  auto ia = a.c.begin();
  auto ib = b.c.begin();
  for (; ia != a.c.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return false;
    if (!ring.eq(ia->second, ib->second)) return false;
  }
  return true;
}

/// Coefficient row of a degree-d homogeneous polynomial over the canonical
/// monomial basis of that degree.
template <class R>
std::vector<typename R::Elem> poly_to_row(const R& ring, const Poly<R>& p,
                                          const std::vector<Term>& basis) {
  std::map<Term, int, std::greater<Term>> pos;
  for (size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], static_cast<int>(i));
  std::vector<typename R::Elem> row(basis.size(), ring.zero());
  for (const auto& [t, v] : p.c) {
    auto it = pos.find(t);
    if (it == pos.end())
      throw Error("polynomial has support outside the expected degree");
    row[it->second] = v;
  }
  return row;
}

template <class R>
std::string poly_str(const R& ring, const Poly<R>& p,
                     const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, v] : p.c) {
    if (!first) os << " + ";
    std::string cs = ring.str(v);
    if (cs == "1" && !t.is_unit()) {
      os << t.pretty(names);
    } else if (t.is_unit()) {
      os << (cs.find_first_of("+- ") == std::string::npos || cs[0] == '-'
                 ? cs
                 : "(" + cs + ")");
    } else {
      bool needs_parens = cs.find_first_of("+ ") != std::string::npos ||
                          cs.find(" - ") != std::string::npos;
      os << (needs_parens ? "(" + cs + ")" : cs) << "*" << t.pretty(names);
    }
    first = false;
  }
  return os.str();
}

}  // namespace bbk
