#include "doctest.h"

#include "bbk/monomial.hpp"

using namespace bbk;

namespace {
Term t(std::vector<int> e) { return Term(std::move(e)); }
}

TEST_CASE("divisibility") {
  CHECK(divides(t({1, 1}), t({2, 3})));       // xy | x^2 y^3
  CHECK_FALSE(divides(t({2, 1}), t({1, 3}))); // x^2 y does not divide x y^3
  for (const auto& tau : terms_of_degree(3, 4))
    CHECK(divides(Term::unit(3), tau));
  CHECK_THROWS_AS(divides(t({1}), t({1, 0})), DimensionMismatch);
}

TEST_CASE("degree enumeration is canonical and complete") {
  auto d2 = terms_of_degree(3, 2);
  std::vector<Term> expect{t({2, 0, 0}), t({1, 1, 0}), t({1, 0, 1}),
                           t({0, 2, 0}), t({0, 1, 1}), t({0, 0, 2})};
  CHECK(d2 == expect);

  auto d3 = terms_of_degree(2, 3);
  std::vector<Term> expect2{t({3, 0}), t({2, 1}), t({1, 2}), t({0, 3})};
  CHECK(d3 == expect2);

  CHECK(terms_of_degree(4, 0) == std::vector<Term>{Term::unit(4)});
}

TEST_CASE("enumeration size and strict descent") {
  for (int nv = 1; nv <= 4; ++nv)
    for (int d = 0; d <= 6; ++d) {
      auto ts = terms_of_degree(nv, d);
      CHECK(static_cast<long long>(ts.size()) ==
            [&] {  // C(nv-1+d, nv-1) by direct product formula
              long long r = 1;
              for (int i = 1; i <= nv - 1; ++i) r = r * (d + i) / i;
              return r;
            }());
      for (size_t i = 1; i < ts.size(); ++i) CHECK(ts[i - 1] > ts[i]);
    }
}

TEST_CASE("lcm and gcd") {
  CHECK(lcm(t({2, 1}), t({1, 3})) == t({2, 3}));
  CHECK(gcd(t({2, 1}), t({1, 3})) == t({1, 1}));
  Term tau({3, 2});
  CHECK(lcm(tau, Term::unit(2)) == tau);
  CHECK(gcd(tau, Term::unit(2)) == Term::unit(2));
}

TEST_CASE("divides <=> gcd/lcm characterization") {
  auto all3 = terms_of_degree(2, 3);
  auto all5 = terms_of_degree(2, 5);
  for (const auto& a : all3)
    for (const auto& b : all5) {
      bool d = divides(a, b);
      CHECK(d == (gcd(a, b) == a));
      CHECK(d == (lcm(a, b) == b));
    }
}

TEST_CASE("serialization") {
  Term tau({2, 1, 0});
  CHECK(tau.str() == "[2,1,0]");
  CHECK(parse_term("[2,1,0]") == tau);
  CHECK(parse_term(" [ 2 , 1 , 0 ] ") == tau);
  CHECK(tau.pretty({"x", "y", "z"}) == "x^2*y");
  CHECK(Term::unit(3).pretty({"x", "y", "z"}) == "1");
  CHECK_THROWS_AS(parse_term("2,1"), ParseError);
  CHECK_THROWS_AS(parse_term("[2,-1]"), bbk::Error);
}

TEST_CASE("degree cap") {
  CHECK_THROWS_AS(Term({kMaxDegree + 1, 0}), Overflow);
  CHECK_THROWS_AS(mul(t({kMaxDegree, 0}), t({1, 0})), Overflow);
  CHECK_NOTHROW(t({kMaxDegree, 0}));
}
