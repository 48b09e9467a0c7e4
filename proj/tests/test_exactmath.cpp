#include <random>

#include "doctest.h"

#include "bbk/linalg.hpp"

using namespace bbk;

namespace {

Mat<RationalField> qmat(std::vector<std::vector<long>> rows) {
  RationalField q;
  std::vector<std::vector<Rational>> r;
  for (auto& row : rows) {
    std::vector<Rational> out;
    for (long v : row) out.emplace_back(v);
    r.push_back(std::move(out));
  }
  return Mat<RationalField>::from_rows(q, std::move(r));
}

Mat<RationalField> random_qmat(int rows, int cols, std::mt19937& rng) {
  RationalField q;
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Mat<RationalField> m(q, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational half(1, 2), third(1, 3);
  CHECK((half + third) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-4, -8).str() == "1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(3, 4).inverse() == Rational(4, 3));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("rational literals") {
  CHECK(Rational::parse("5/6") == Rational(5, 6));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("\xE2\x88\x92" "3/2") == Rational(-3, 2));  // U+2212
  CHECK(Rational::parse(" 4/6 ") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("a"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  // round trip through str()
  Rational v(-123, 456);
  CHECK(Rational::parse(v.str()) == v);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f7(7);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.add(4, 5) == 2);
  CHECK(f7.neg(0) == 0);
  CHECK(f7.sub(2, 5) == 4);
  CHECK(f7.from_int(-9) == 5);
  CHECK(f7.parse("1/3") == 5);
  CHECK_THROWS_AS(f7.inv(0), DivisionByZero);
  CHECK_THROWS_AS(PrimeField(4), UnsupportedRing);
  CHECK_THROWS_AS(PrimeField(1), UnsupportedRing);
  PrimeField big(32003);
  CHECK(big.mul(big.inv(12345), 12345) == 1);
}

TEST_CASE("parametric ring: ring axioms and zero recognition") {
  ParamRing pr({"c1", "c2"});
  auto c1 = pr.parameter(0), c2 = pr.parameter(1);
  auto prod = pr.mul(c1, c2);
  CHECK(pr.is_zero(pr.add(prod, pr.neg(prod))));
  CHECK(pr.eq(pr.mul(c1, pr.add(c1, c2)),
              pr.add(pr.mul(c1, c1), pr.mul(c1, c2))));
  CHECK(pr.is_unit(pr.from_int(3)));
  CHECK_FALSE(pr.is_unit(c1));
  CHECK_FALSE(pr.is_unit(pr.zero()));
  CHECK(pr.eq(pr.mul(pr.inv(pr.from_int(3)), pr.from_int(3)), pr.one()));
  CHECK_THROWS_AS(pr.inv(c1), UnsupportedRing);
}

TEST_CASE("parametric serialization matches the monomial-string grammar") {
  ParamRing pr({"c_{2,1,2}", "c_{3,1,2}", "c_{3,3,2}"});
  auto p = pr.parse("-c_{2,1,2}*c_{3,3,2} - c_{3,1,2}");
  auto expect = pr.neg(pr.add(pr.mul(pr.parameter(0), pr.parameter(2)), pr.parameter(1)));
  CHECK(pr.eq(p, expect));
  CHECK(pr.str(p) == "-c_{2,1,2}*c_{3,3,2} - c_{3,1,2}");
  CHECK(pr.eq(pr.parse(pr.str(p)), p));

  auto q = pr.parse("3/2*c_{2,1,2}^2 + 1");
  CHECK(pr.str(q) == "3/2*c_{2,1,2}^2 + 1");
  CHECK(pr.str(pr.zero()) == "0");
  CHECK(pr.eq(pr.parse("0"), pr.zero()));
  CHECK_THROWS_AS(pr.parse("c_{9,9,9}"), ParseError);
}

TEST_CASE("parametric normalization and ordering") {
  ParamRing pr({"a", "b"});
  // leading monomial is the lexicographically greatest exponent vector
  auto p = pr.parse("2*b^3 + 4*a*b");
  CHECK(pr.str(pr.make_monic(p)) == "a*b + 1/2*b^3");
  auto sub = pr.substitute(pr.parse("a*b + b"), pr, {pr.parse("b"), pr.from_int(2)});
  CHECK(pr.eq(sub, pr.parse("2*b + 2")));
}

TEST_CASE("matrix product: identity and exactness") {
  auto m = qmat({{1, 2, 3}, {4, 5, 6}});
  RationalField q;
  auto id = Mat<RationalField>::identity(q, 2);
  CHECK(mat_mul(id, m) == m);
  CHECK_THROWS_AS(mat_mul(m, m), DimensionMismatch);
}

TEST_CASE("matrix algebra properties on random rational matrices") {
  std::mt19937 rng(20260808);
  for (int iter = 0; iter < 10; ++iter) {
    auto a = random_qmat(3, 4, rng);
    auto b = random_qmat(4, 2, rng);
    auto b2 = random_qmat(4, 2, rng);
    auto c = random_qmat(2, 5, rng);
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    CHECK(mat_mul(a, mat_add(b, b2)) == mat_add(mat_mul(a, b), mat_mul(a, b2)));
  }
}

TEST_CASE("rank by exact elimination") {
  RationalField q;
  CHECK(rank(Mat<RationalField>(q, 3, 4)) == 0);
  CHECK(rank(qmat({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(qmat({{1, 2}, {2, 5}})) == 2);
  CHECK(rank(Mat<RationalField>::identity(q, 5)) == 5);

  ParamRing pr({"a"});
  Mat<ParamRing> pm(pr, 1, 1);
  pm.at(0, 0) = pr.parameter(0);
  CHECK_THROWS_AS(rank(pm), UnsupportedRing);
}

TEST_CASE("rank over the rationals agrees with rank over GF(32003) on integer matrices") {
  std::mt19937 rng(7);
  PrimeField f(32003);
  RationalField q;
  std::uniform_int_distribution<int> val(-6, 6);
  for (int iter = 0; iter < 10; ++iter) {
    Mat<RationalField> a(q, 4, 5);
    Mat<PrimeField> b(f, 4, 5);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j) {
        int v = val(rng);
        a.at(i, j) = Rational(v);
        b.at(i, j) = f.from_int(v);
      }
    CHECK(rank(a) == rank(b));
  }
}

TEST_CASE("solve: unique, inconsistent, underdetermined") {
  RationalField q;
  auto id = Mat<RationalField>::identity(q, 3);
  std::vector<Rational> b{Rational(2), Rational(-1, 3), Rational(0)};
  auto sol = solve(id, b);
  REQUIRE(sol.status == SolveStatus::kUnique);
  CHECK(sol.x == b);

  auto zero = Mat<RationalField>(q, 1, 1);
  auto bad = solve(zero, {Rational(1)});
  CHECK(bad.status == SolveStatus::kInconsistent);

  // x + y = 1 has a one-dimensional solution space
  auto a = qmat({{1, 1}});
  auto under = solve(a, {Rational(1)});
  REQUIRE(under.status == SolveStatus::kUnderdetermined);
  REQUIRE(under.kernel.size() == 1);
  CHECK(under.x[0] + under.x[1] == Rational(1));
  CHECK(under.kernel[0][0] + under.kernel[0][1] == Rational(0));
}

TEST_CASE("solve claims are exact: Ax = b on random systems") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 10; ++iter) {
    auto a = random_qmat(4, 4, rng);
    auto x0 = random_qmat(4, 1, rng);
    std::vector<Rational> b(4, Rational(0));
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) b[i] += a.at(i, k) * x0.at(k, 0);
    auto sol = solve(a, b);
    REQUIRE(sol.status != SolveStatus::kInconsistent);
    for (int i = 0; i < 4; ++i) {
      Rational lhs(0);
      for (int k = 0; k < 4; ++k) lhs += a.at(i, k) * sol.x[k];
      CHECK(lhs == b[i]);
    }
  }
}

TEST_CASE("parametric linear solve with invertible pivots") {
  // x1 = a, x2 - x1 = b  =>  x2 = a + b; pivots are rational constants.
  ParamRing pr({"a", "b"});
  Mat<ParamRing> m(pr, 2, 2);
  m.at(0, 0) = pr.one();
  m.at(1, 0) = pr.neg(pr.one());
  m.at(1, 1) = pr.one();
  auto sol = solve(m, {pr.parameter(0), pr.parameter(1)});
  REQUIRE(sol.status == SolveStatus::kUnique);
  CHECK(pr.eq(sol.x[0], pr.parameter(0)));
  CHECK(pr.eq(sol.x[1], pr.add(pr.parameter(0), pr.parameter(1))));

  // a*x = 1 cannot be eliminated without dividing by a parameter.
  Mat<ParamRing> stuck(pr, 1, 1);
  stuck.at(0, 0) = pr.parameter(0);
  CHECK_THROWS_AS(solve(stuck, {pr.one()}), UnsupportedRing);
}

TEST_CASE("mixed rings are rejected") {
  PrimeField f7(7), f11(11);
  Mat<PrimeField> a(f7, 1, 1), b(f11, 1, 1);
  CHECK_THROWS_AS(mat_mul(a, b), MixedRings);
  CHECK_THROWS_AS(mat_add(a, b), MixedRings);
}
