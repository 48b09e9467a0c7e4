#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "bbk/errors.hpp"

namespace bbk {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Equality of canonical forms is mathematical equality.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "a", "-a", "a/b" in base 10; the U+2212 minus sign is also
  /// tolerated. Anything else (floats included) is a parse error.
  static Rational parse(std::string_view sv) {
    std::string s;
    s.reserve(sv.size());
    for (size_t i = 0; i < sv.size();) {
      if (i + 2 < sv.size() && static_cast<unsigned char>(sv[i]) == 0xE2 &&
          static_cast<unsigned char>(sv[i + 1]) == 0x88 &&
          static_cast<unsigned char>(sv[i + 2]) == 0x92) {
        s.push_back('-');
        i += 3;
      } else if (!std::isspace(static_cast<unsigned char>(sv[i]))) {
        s.push_back(sv[i++]);
      } else {
        ++i;
      }
    }
    if (s.empty()) throw ParseError("empty rational literal");
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0) throw ParseError("bad rational literal: " + s);
    if (i < s.size()) {
      if (s[i] != '/') throw ParseError("bad rational literal: " + s);
      ++i;
      size_t den_digits = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
        ++den_digits;
      }
      if (den_digits == 0 || i != s.size())
        throw ParseError("bad rational literal: " + s);
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    if (v.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
  }

  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

}  // namespace bbk
