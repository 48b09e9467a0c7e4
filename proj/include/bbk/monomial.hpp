#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "bbk/errors.hpp"

namespace bbk {

/// Degrees and exponents beyond this are rejected; the toolkit targets
/// desk-scale inputs and checked machine integers.
inline constexpr int kMaxDegree = 10000;

/// A term (power product) in n+1 variables, stored as its exponent vector.
///
/// The canonical order used throughout is lexicographic with earlier
/// variables greater: within a fixed degree, terms are listed from the
/// lexicographically greatest exponent vector downwards.
class Term {
 public:
  Term() = default;
  explicit Term(std::vector<int> exps) : e_(std::move(exps)) {
    for (int v : e_) {
      if (v < 0) throw Error("term exponents must be nonnegative");
      if (v > kMaxDegree) throw Overflow("term exponent exceeds degree cap");
    }
    if (degree() > kMaxDegree) throw Overflow("term degree exceeds degree cap");
  }

  static Term unit(int n_vars) { return Term(std::vector<int>(n_vars, 0)); }

  /// x_i as a term.
  static Term variable(int n_vars, int i) {
    std::vector<int> e(n_vars, 0);
    e.at(i) = 1;
    return Term(std::move(e));
  }

  int n_vars() const { return static_cast<int>(e_.size()); }
  int exponent(int i) const { return e_.at(i); }
  const std::vector<int>& exponents() const { return e_; }

  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

  bool is_unit() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
  }

  friend bool operator==(const Term& a, const Term& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  /// Lexicographic comparison of exponent vectors; a < b means a is
  /// canonically smaller (listed later within its degree).
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (a.e_.size() != b.e_.size())
      throw DimensionMismatch("comparing terms from different ambients");
    return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(),
                                                  b.e_.begin(), b.e_.end());
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < e_.size(); ++i) {
      if (i) os << ',';
      os << e_[i];
    }
    os << ']';
    return os.str();
  }

  /// Pretty form using the given variable names, e.g. "x^2*y"; "1" for the
  /// unit term.
  std::string pretty(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != n_vars())
      throw DimensionMismatch("variable name list has wrong length");
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!first) os << '*';
      os << names[i];
      if (e_[i] > 1) os << '^' << e_[i];
      first = false;
    }
    if (first) os << '1';
    return os.str();
  }

 private:
  std::vector<int> e_;
};

inline void check_same_ambient(const Term& a, const Term& b) {
  if (a.n_vars() != b.n_vars())
    throw DimensionMismatch("terms live in different ambients");
}

inline bool divides(const Term& a, const Term& b) {
  check_same_ambient(a, b);
  for (int i = 0; i < a.n_vars(); ++i)
    if (a.exponent(i) > b.exponent(i)) return false;
  return true;
}

inline Term mul(const Term& a, const Term& b) {
  check_same_ambient(a, b);
  std::vector<int> e(a.n_vars());
  for (int i = 0; i < a.n_vars(); ++i) e[i] = a.exponent(i) + b.exponent(i);
  return Term(std::move(e));
}

/// b / a; requires a | b.
inline Term quotient(const Term& b, const Term& a) {
  check_same_ambient(a, b);
  std::vector<int> e(a.n_vars());
  for (int i = 0; i < a.n_vars(); ++i) {
    e[i] = b.exponent(i) - a.exponent(i);
    if (e[i] < 0) throw Error("quotient of non-dividing terms");
  }
  return Term(std::move(e));
}

inline Term lcm(const Term& a, const Term& b) {
  check_same_ambient(a, b);
  std::vector<int> e(a.n_vars());
  for (int i = 0; i < a.n_vars(); ++i)
    e[i] = std::max(a.exponent(i), b.exponent(i));
  return Term(std::move(e));
}

inline Term gcd(const Term& a, const Term& b) {
  check_same_ambient(a, b);
  std::vector<int> e(a.n_vars());
  for (int i = 0; i < a.n_vars(); ++i)
    e[i] = std::min(a.exponent(i), b.exponent(i));
  return Term(std::move(e));
}

namespace detail {
inline void emit_terms(std::vector<int>& prefix, int vars_left, int deg_left,
                       std::vector<Term>& out) {
  if (vars_left == 1) {
    prefix.push_back(deg_left);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = deg_left; e >= 0; --e) {
    prefix.push_back(e);
    emit_terms(prefix, vars_left - 1, deg_left - e, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// All terms of degree d in n_vars variables, canonically ordered
/// (lexicographic descending, earlier variables greater).
inline std::vector<Term> terms_of_degree(int n_vars, int d) {
  if (n_vars < 1) throw Error("need at least one variable");
  if (d < 0) throw Error("degree must be nonnegative");
  if (d > kMaxDegree) throw Overflow("degree exceeds degree cap");
  std::vector<Term> out;
  std::vector<int> prefix;
  detail::emit_terms(prefix, n_vars, d, out);
  return out;
}

inline Term parse_term(const std::string& s) {
  std::vector<int> e;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  if (i >= s.size() || s[i] != '[') throw ParseError("term must look like [2,1,0]");
  ++i;
  skip_ws();
  if (i < s.size() && s[i] == ']') return Term(std::move(e));
  while (true) {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("bad exponent in term " + s);
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i++] - '0');
      if (v > kMaxDegree) throw Overflow("term exponent exceeds degree cap");
    }
    e.push_back(neg ? -static_cast<int>(v) : static_cast<int>(v));
    skip_ws();
    if (i < s.size() && s[i] == ',') { ++i; continue; }
    if (i < s.size() && s[i] == ']') { ++i; break; }
    throw ParseError("bad term syntax: " + s);
  }
  return Term(std::move(e));
}

}  // namespace bbk
