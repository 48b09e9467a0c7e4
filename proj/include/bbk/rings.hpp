#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "bbk/errors.hpp"
#include "bbk/rational.hpp"

namespace bbk {

// Coefficient rings share a small interface consumed by the generic linear
// algebra and polynomial layers:
//   using Elem; static constexpr bool is_field;
//   zero/one/from_int, add/sub/mul/neg, inv, is_zero/is_unit/eq,
//   str/parse, same_ring, name.
// Elements carry no ring context of their own; all operations go through the
// ring object, which makes mixed-ring use detectable at module boundaries.

struct RationalField {
  using Elem = Rational;
  static constexpr bool is_field = true;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long n) const { return Rational(n); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inverse(); }

  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool is_unit(const Elem& a) const { return !a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  std::string str(const Elem& a) const { return a.str(); }
  Elem parse(std::string_view s) const { return Rational::parse(s); }

  bool same_ring(const RationalField&) const { return true; }
  std::string name() const { return "rational"; }
};

/// GF(p) for a prime p < 2^31; residues live in [0, p).
class PrimeField {
 public:
  using Elem = std::uint64_t;
  static constexpr bool is_field = true;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p > (1ull << 31))
      throw UnsupportedRing("prime modulus must satisfy 2 <= p <= 2^31");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw UnsupportedRing("modulus " + std::to_string(p) + " is not prime");
  }

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long n) const {
    long r = n % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

  Elem inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in GF(p)");
    // extended Euclid
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt; nt = tmp;
      tmp = r - q * nr;
      r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
  }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_unit(Elem a) const { return a != 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  std::string str(Elem a) const { return std::to_string(a); }

  /// Accepts an integer (reduced mod p) or "a/b" meaning a * b^{-1}.
  Elem parse(std::string_view s) const {
    Rational q = Rational::parse(s);
    const mpq_class& v = q.raw();
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class pz(static_cast<unsigned long>(p_));
    mpz_class nr = num % pz;
    if (nr < 0) nr += pz;
    mpz_class dr = den % pz;
    if (dr == 0) throw DivisionByZero("denominator vanishes mod p");
    Elem n = static_cast<Elem>(nr.get_ui());
    Elem d = static_cast<Elem>(dr.get_ui());
    return mul(n, inv(d));
  }

  bool same_ring(const PrimeField& o) const { return p_ == o.p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

 private:
  std::uint64_t p_;
};

inline void require_same_ring(const RationalField&, const RationalField&) {}
inline void require_same_ring(const PrimeField& a, const PrimeField& b) {
  if (!a.same_ring(b)) throw MixedRings("prime fields with different moduli");
}

/// Multivariate polynomials over Q in a declared list of parameters.
/// Monomials are kept canonically ordered (lexicographic on exponent
/// vectors, parameters in declaration order) and zero coefficients are
/// never stored. Only ring operations and zero-testing are supported;
/// the sole division is by nonzero rational constants.
class ParamRing {
 public:
  struct Elem {
    // exponent vector over the parameters -> rational coefficient
    std::map<std::vector<int>, Rational> m;

    friend bool operator==(const Elem& a, const Elem& b) { return a.m == b.m; }
    friend bool operator<(const Elem& a, const Elem& b) { return a.m < b.m; }
  };
  static constexpr bool is_field = false;

  explicit ParamRing(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    for (const auto& n : *names_)
      if (n.empty()) throw Error("parameter names must be nonempty");
  }

  int n_params() const { return static_cast<int>(names_->size()); }
  const std::vector<std::string>& names() const { return *names_; }

  Elem zero() const { return Elem{}; }
  Elem one() const { return constant(Rational(1)); }
  Elem from_int(long n) const { return constant(Rational(n)); }

  Elem constant(const Rational& c) const {
    Elem e;
    if (!c.is_zero()) e.m.emplace(std::vector<int>(n_params(), 0), c);
    return e;
  }

  Elem parameter(int i) const {
    if (i < 0 || i >= n_params()) throw Error("parameter index out of range");
    std::vector<int> exp(n_params(), 0);
    exp[i] = 1;
    Elem e;
    e.m.emplace(std::move(exp), Rational(1));
    return e;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (const auto& [exp, c] : b.m) {
      auto it = r.m.find(exp);
      if (it == r.m.end()) {
        r.m.emplace(exp, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) r.m.erase(it);
      }
    }
    return r;
  }

  Elem neg(const Elem& a) const {
    Elem r;
    for (const auto& [exp, c] : a.m) r.m.emplace(exp, -c);
    return r;
  }

  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

  Elem mul(const Elem& a, const Elem& b) const {
    Elem r;
    for (const auto& [ea, ca] : a.m) {
      for (const auto& [eb, cb] : b.m) {
        std::vector<int> exp(ea.size());
        for (size_t i = 0; i < ea.size(); ++i) exp[i] = ea[i] + eb[i];
        Rational c = ca * cb;
        auto it = r.m.find(exp);
        if (it == r.m.end()) {
          if (!c.is_zero()) r.m.emplace(std::move(exp), c);
        } else {
          it->second += c;
          if (it->second.is_zero()) r.m.erase(it);
        }
      }
    }
    return r;
  }

  Elem scalar_mul(const Rational& c, const Elem& a) const {
    Elem r;
    if (c.is_zero()) return r;
    for (const auto& [exp, coeff] : a.m) r.m.emplace(exp, c * coeff);
    return r;
  }

  bool is_zero(const Elem& a) const { return a.m.empty(); }
  bool eq(const Elem& a, const Elem& b) const { return a.m == b.m; }

  bool is_constant(const Elem& a) const {
    if (a.m.empty()) return true;
    if (a.m.size() != 1) return false;
    const auto& exp = a.m.begin()->first;
    for (int v : exp)
      if (v != 0) return false;
    return true;
  }

  /// Units are the nonzero rational constants.
  bool is_unit(const Elem& a) const { return !a.m.empty() && is_constant(a); }

  Elem inv(const Elem& a) const {
    if (!is_unit(a))
      throw UnsupportedRing("parametric polynomials admit no division beyond rational constants");
    return constant(a.m.begin()->second.inverse());
  }

  /// Canonically greatest monomial (lexicographic on exponent vectors).
  const std::pair<const std::vector<int>, Rational>& leading(const Elem& a) const {
    if (a.m.empty()) throw Error("leading monomial of zero");
    return *a.m.rbegin();
  }

  /// Scale so that the canonically greatest monomial has coefficient +1.
  Elem make_monic(const Elem& a) const {
    if (a.m.empty()) return a;
    return scalar_mul(leading(a).second.inverse(), a);
  }

  /// Image of `a` under parameter -> images[i], landing in `target`.
  Elem substitute(const Elem& a, const ParamRing& target,
                  const std::vector<Elem>& images) const {
    if (static_cast<int>(images.size()) != n_params())
      throw DimensionMismatch("one image per parameter required");
    Elem acc = target.zero();
    for (const auto& [exp, c] : a.m) {
      Elem mono = target.constant(c);
      for (int i = 0; i < n_params(); ++i)
        for (int k = 0; k < exp[i]; ++k) mono = target.mul(mono, images[i]);
      acc = target.add(acc, mono);
    }
    return acc;
  }

  std::string str(const Elem& a) const {
    if (a.m.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // greatest monomial first
    for (auto it = a.m.rbegin(); it != a.m.rend(); ++it) {
      const Rational& c = it->second;
      Rational abs = c.sign() < 0 ? -c : c;
      if (first) {
        if (c.sign() < 0) os << '-';
        first = false;
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      bool has_vars = false;
      for (int v : it->first)
        if (v > 0) has_vars = true;
      if (!has_vars) {
        os << abs.str();
      } else {
        bool coeff_shown = false;
        if (!(abs == Rational(1))) {
          os << abs.str();
          coeff_shown = true;
        }
        bool first_factor = true;
        for (int i = 0; i < n_params(); ++i) {
          int e = it->first[i];
          if (e == 0) continue;
          if (!first_factor || coeff_shown) os << '*';
          os << (*names_)[i];
          if (e > 1) os << '^' << e;
          first_factor = false;
        }
      }
    }
    return os.str();
  }

  /// Parses "+/-"-separated monomials such as
  /// "-c_{2,1,2}*c_{3,3,2} - c_{3,1,2}" or "3/2*c_1^2 + 1".
  Elem parse(std::string_view sv) const {
    std::string s = normalize_minus(sv);
    Elem acc = zero();
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i == s.size()) throw ParseError("empty parametric literal");
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
    while (true) {
      skip_ws();
      Elem mono = parse_monomial(s, i);
      acc = add(acc, neg ? this->neg(mono) : mono);
      skip_ws();
      if (i == s.size()) break;
      if (s[i] != '+' && s[i] != '-')
        throw ParseError("bad parametric polynomial syntax: " + s);
      neg = (s[i++] == '-');
    }
    return acc;
  }

  bool same_ring(const ParamRing& o) const { return *names_ == *o.names_; }
  std::string name() const {
    std::string n = "Q[";
    for (size_t i = 0; i < names_->size(); ++i) {
      if (i) n += ',';
      n += (*names_)[i];
    }
    return n + "]";
  }

 private:
  static std::string normalize_minus(std::string_view sv) {
    std::string s;
    s.reserve(sv.size());
    for (size_t i = 0; i < sv.size();) {
      if (i + 2 < sv.size() && static_cast<unsigned char>(sv[i]) == 0xE2 &&
          static_cast<unsigned char>(sv[i + 1]) == 0x88 &&
          static_cast<unsigned char>(sv[i + 2]) == 0x92) {
        s.push_back('-');
        i += 3;
      } else {
        s.push_back(sv[i++]);
      }
    }
    return s;
  }

  int param_index(const std::string& name) const {
    for (int i = 0; i < n_params(); ++i)
      if ((*names_)[i] == name) return i;
    throw ParseError("unknown parameter '" + name + "'");
  }

  Elem parse_monomial(const std::string& s, size_t& i) const {
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    Rational coeff(1);
    std::vector<int> exp(n_params(), 0);
    bool any = false;
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        coeff = coeff * Rational::parse(s.substr(i, j - i));
        i = j;
        any = true;
      } else if (i < s.size() && is_name_start(s[i])) {
        size_t j = i;
        while (j < s.size() && is_name_char(s[j])) ++j;
        int idx = param_index(s.substr(i, j - i));
        i = j;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad exponent in parametric polynomial");
          e = 0;
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            e = e * 10 + (s[i++] - '0');
        }
        exp[idx] += e;
        any = true;
      } else {
        throw ParseError("bad monomial in parametric polynomial: " + s);
      }
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    if (!any) throw ParseError("empty monomial");
    Elem mono;
    if (!coeff.is_zero()) mono.m.emplace(std::move(exp), coeff);
    return mono;
  }

  // Names start with a letter or underscore and may continue with digits,
  // braces and commas, so "c_{2,1,1}" is a single token.
  static bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_name_char(char c) {
    if (is_name_start(c)) return true;
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return c == '{' || c == '}' || c == ',';
  }

  std::shared_ptr<const std::vector<std::string>> names_;
};

inline void require_same_ring(const ParamRing& a, const ParamRing& b) {
  if (!a.same_ring(b)) throw MixedRings("parametric rings with different parameters");
}

}  // namespace bbk
