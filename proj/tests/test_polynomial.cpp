#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pockets/polynomial.hpp"
#include "pockets/rational_function.hpp"

using namespace pockets;

TEST_CASE("degree and normalization") {
  CHECK(IntPoly().degree() == -1);
  CHECK(IntPoly(0).degree() == -1);
  CHECK(IntPoly({1, 0, 0}).degree() == 0);
  CHECK(IntPoly({0, -2, 0, 1}).degree() == 3);
  CHECK(IntPoly::x_minus(3) == IntPoly({-3, 1}));
}

TEST_CASE("arithmetic basics") {
  IntPoly f({0, -2, 0, 1});  // x^3 - 2x
  CHECK(f.eval<Int>(2) == 4);
  CHECK(f.eval<Int>(0) == 0);
  CHECK((f * f).degree() == 6);
  CHECK(f - f == IntPoly());
  CHECK(IntPoly({1, 1}).pow(2) == IntPoly({1, 2, 1}));
  CHECK(IntPoly({1, 1}).pow(0) == IntPoly(1));
}

TEST_CASE("shift substitutes x - c") {
  IntPoly f({-2, 0, 1});  // x^2 - 2
  CHECK(f.shift(1) == IntPoly({-1, -2, 1}));  // x^2 - 2x - 1
  // p(x - 0) is p.
  CHECK(f.shift(0) == f);
  // Shifting back is the identity, and p.shift(s)(x) = p(x-s) pointwise.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Int> c;
    for (int i = 0; i <= static_cast<int>(rng() % 6); ++i)
      c.push_back(Int(static_cast<long>(rng() % 11) - 5));
    IntPoly p(std::move(c));
    Int s(static_cast<long>(rng() % 9) - 4);
    CHECK(p.shift(s).shift(Int(-s)) == p);
    Int x(static_cast<long>(rng() % 13) - 6);
    CHECK(p.shift(s).eval<Int>(x) == p.eval<Int>(Int(x - s)));
  }
}

TEST_CASE("interpolation is exact") {
  // Through (0,0), (1,-1), (2,0), (-1,3): the cubic fit collapses to x^2-2x.
  std::vector<std::pair<Rat, Rat>> pts = {{0, 0}, {1, -1}, {2, 0}, {-1, 3}};
  RatPoly p = interpolate(pts);
  CHECK(to_int_exact(p) == IntPoly({0, -2, 1}));
  for (auto& [x, y] : pts) CHECK(p.eval<Rat>(x) == y);

  CHECK_THROWS_AS(interpolate(std::vector<std::pair<Rat, Rat>>{{1, 2}, {1, 3}}),
                  invalid_parameter);

  // Round trip on random integer polynomials.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Int> c;
    for (int i = 0; i <= static_cast<int>(rng() % 7); ++i)
      c.push_back(Int(static_cast<long>(rng() % 21) - 10));
    IntPoly p0(std::move(c));
    std::vector<std::pair<Rat, Rat>> samples;
    for (int s = 0; s <= p0.degree() + 1; ++s)
      samples.emplace_back(Rat(s), Rat(p0.eval<Int>(s)));
    if (samples.empty()) samples.emplace_back(Rat(0), Rat(0));
    CHECK(to_int_exact(interpolate(samples)) == p0);
  }
}

TEST_CASE("division, gcd, content") {
  IntPoly a({-1, 0, 1});      // x^2 - 1
  IntPoly b({1, -2, 1});      // (x-1)^2
  CHECK(poly_gcd(a, b) == IntPoly({-1, 1}));
  CHECK(divide_exact(a, IntPoly({-1, 1})) == IntPoly({1, 1}));
  CHECK_THROWS_AS(divide_exact(a, IntPoly({1, 1, 1})), internal_error);

  CHECK(content(IntPoly({4, -6, 8})) == 2);
  CHECK(primitive_part(IntPoly({4, -6, 8})) == IntPoly({2, -3, 4}));
  // Leading sign is normalized positive.
  CHECK(primitive_part(IntPoly({4, -8})) == IntPoly({-1, 2}));
  CHECK(poly_lcm(IntPoly({-1, 1}), IntPoly({-2, 1})).degree() == 2);

  auto [q, r] = divmod(to_rat(IntPoly({3, 0, 0, 1})), to_rat(IntPoly({1, 1})));
  CHECK(to_rat(IntPoly({3, 0, 0, 1})) == q * to_rat(IntPoly({1, 1})) + r);
}

TEST_CASE("rational function canonical form") {
  RationalFunction zero;
  CHECK(zero.is_zero());
  CHECK(zero.den() == IntPoly(1));

  // (x^2-1)/(x-1) reduces to x+1.
  RationalFunction f(IntPoly({-1, 0, 1}), IntPoly({-1, 1}));
  CHECK(f.is_polynomial());
  CHECK(f.as_polynomial() == IntPoly({1, 1}));

  // Denominator sign is normalized.
  RationalFunction g(IntPoly(1), IntPoly({2, -1}));  // 1/(2-x)
  CHECK(g.den().leading() > 0);
  CHECK(g == RationalFunction(IntPoly(-1), IntPoly({-2, 1})));

  CHECK_THROWS_AS(RationalFunction(IntPoly(1), IntPoly()), invalid_parameter);
}

TEST_CASE("rational function arithmetic") {
  RationalFunction inv_x(IntPoly(1), IntPoly::x());
  RationalFunction x(IntPoly::x());
  CHECK((inv_x * x).is_polynomial());
  CHECK((inv_x * x).as_polynomial() == IntPoly(1));
  CHECK(inv_x + inv_x == RationalFunction(IntPoly(2), IntPoly::x()));
  CHECK((inv_x - inv_x).is_zero());
  CHECK(inv_x.pow(2) == RationalFunction(IntPoly(1), IntPoly({0, 0, 1})));
  CHECK(x / x == RationalFunction(1));
  CHECK_THROWS_AS(x / RationalFunction(), invalid_parameter);

  // shift: 1/x at x-2 is 1/(x-2).
  CHECK(inv_x.shift(2) == RationalFunction(IntPoly(1), IntPoly({-2, 1})));

  CHECK(inv_x.eval(Rat(4)) == Rat(1, 4));
  CHECK(!inv_x.eval(Rat(0)).has_value());
}
