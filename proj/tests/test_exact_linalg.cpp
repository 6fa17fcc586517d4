#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pockets/exact_linalg.hpp"
#include "pockets/graph.hpp"
#include "pockets/numeric.hpp"

using namespace pockets;

namespace {

IntMatrix random_symmetric01(int n, std::mt19937_64& rng) {
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = Int(rng() & 1u);
  return m;
}

}  // namespace

TEST_CASE("charpoly on fixed graphs") {
  // Frozen against the cofactor oracle below.
  CHECK(charpoly_exact(adjacency_matrix(generate_path(3))) == IntPoly({0, -2, 0, 1}));
  CHECK(charpoly_exact(adjacency_matrix(generate_cycle(4))) == IntPoly({0, 0, -4, 0, 1}));
  CHECK(charpoly_exact(signless_laplacian(generate_complete(3))) ==
        IntPoly({-4, 9, -6, 1}));

  CHECK_THROWS_AS(charpoly_exact(IntMatrix::Zero(2, 3)), invalid_parameter);
  CHECK_THROWS_AS(charpoly_exact(IntMatrix::Zero(65, 65)), invalid_parameter);
}

TEST_CASE("charpoly equals the cofactor oracle") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix m = random_symmetric01(1 + rng() % 6, rng);
    for (int i = 0; i < m.rows(); ++i) m(i, i) = 0;
    CHECK(charpoly_exact(m) == testing::naive_charpoly(m));
  }
}

TEST_CASE("charpoly coefficient identities") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(2 + rng() % 8, rng);
    IntPoly fa = charpoly_exact(adjacency_matrix(g));
    IntPoly fq = charpoly_exact(signless_laplacian(g));
    const int n = g.order();
    CHECK(fa.coeff(n) == 1);
    CHECK(fa.coeff(n - 1) == 0);
    CHECK(fq.coeff(n - 1) == -2 * g.edge_count());
  }
}

TEST_CASE("bareiss determinant") {
  IntMatrix m(3, 3);
  m << 2, 0, 1, 0, 3, 0, 1, 0, 2;
  CHECK(det_bareiss(m) == 9);
  CHECK(det_bareiss(IntMatrix::Zero(3, 3)) == 0);
  IntMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(det_bareiss(swap) == -1);

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a = random_symmetric01(1 + rng() % 6, rng);
    // det m = (-1)^n * charpoly(0)
    Int expect = charpoly_exact(a).coeff(0);
    if (a.rows() % 2 == 1) expect = -expect;
    CHECK(det_bareiss(a) == expect);
  }
}

TEST_CASE("coronal fixed values") {
  // A(K_1): 1/x.
  CHECK(coronal(IntMatrix::Zero(1, 1)) ==
        RationalFunction(IntPoly(1), IntPoly::x()));

  // A(P_3): (3x+4)/(x^2-2); the x^3-2x denominator loses the factor x.
  RationalFunction g = coronal(adjacency_matrix(generate_path(3)));
  CHECK(g == RationalFunction(IntPoly({4, 3}), IntPoly({-2, 0, 1})));
  CHECK(g.num() == IntPoly({4, 3}));
  CHECK(g.den() == IntPoly({-2, 0, 1}));

  // Q(C_4) has constant row sum 4: 4/(x-4).
  CHECK(coronal(signless_laplacian(generate_cycle(4))) ==
        RationalFunction(IntPoly(4), IntPoly({-4, 1})));
}

TEST_CASE("coronal against the adjugate-sum oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    IntMatrix m = random_symmetric01(1 + rng() % 5, rng);
    IntPoly f = charpoly_exact(m);
    IntPoly adj_sum = testing::naive_adjugate_sum(m);
    CHECK(coronal(m) == RationalFunction(adj_sum, f));
  }
}

TEST_CASE("coronal times charpoly is a polynomial") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_symmetric01(1 + rng() % 8, rng);
    RationalFunction prod = coronal(m) * RationalFunction(charpoly_exact(m));
    CHECK(prod.is_polynomial());
  }
}

TEST_CASE("constant row sum shortcut") {
  CHECK(coronal_constant_row_sum(4, 4) ==
        RationalFunction(IntPoly(4), IntPoly({-4, 1})));
  CHECK(coronal_constant_row_sum(1, 0) == RationalFunction(IntPoly(1), IntPoly::x()));
  CHECK_THROWS_AS(coronal_constant_row_sum(0, 1), invalid_parameter);

  // Gamma_{Q(H_1)}(x-1) = (m-1)/(x-1-2r_1) for a regular remainder.
  CHECK(coronal_constant_row_sum(4, 4).shift(1) ==
        RationalFunction(IntPoly(4), IntPoly({-5, 1})));

  // Agreement with the general path on all regular graphs of order <= 8
  // we can name.
  std::vector<Graph> regulars = {
      generate_empty(3),       generate_complete(4),  generate_cycle(5),
      generate_cycle(8),       generate_complete(8),  generate_complete_bipartite(3, 3),
      generate_complete_bipartite(4, 4),
      cartesian_product(generate_cycle(3), generate_complete(2))};
  for (const Graph& g : regulars) {
    int r = *g.regularity();
    CHECK(coronal(adjacency_matrix(g)) == coronal_constant_row_sum(g.order(), r));
    CHECK(coronal(signless_laplacian(g)) ==
          coronal_constant_row_sum(g.order(), 2 * r));
  }
}

TEST_CASE("rational function matrix determinant") {
  RationalFunction x(IntPoly::x());
  RationalFunction one(1);

  // [[x - 1/x, -1], [-1, x]] -> x^2 - 2
  RFMatrix m(2, 2);
  m(0, 0) = x - RationalFunction(IntPoly(1), IntPoly::x());
  m(0, 1) = -one;
  m(1, 0) = -one;
  m(1, 1) = x;
  RationalFunction d = det_rfmatrix(m);
  CHECK(d.is_polynomial());
  CHECK(d.as_polynomial() == IntPoly({-2, 0, 1}));

  // diag(x-a, x-b)
  RFMatrix diag(2, 2);
  diag(0, 0) = RationalFunction(IntPoly({-3, 1}));
  diag(0, 1) = RationalFunction(0);
  diag(1, 0) = RationalFunction(0);
  diag(1, 1) = RationalFunction(IntPoly({-7, 1}));
  CHECK(det_rfmatrix(diag).as_polynomial() == IntPoly({21, -10, 1}));

  // [[x-2-1/(x-1), -1], [-1, x-1]] -> x^2 - 3x
  RFMatrix s(2, 2);
  s(0, 0) = x - RationalFunction(2) - RationalFunction(IntPoly(1), IntPoly({-1, 1}));
  s(0, 1) = -one;
  s(1, 0) = -one;
  s(1, 1) = x - one;
  CHECK(det_rfmatrix(s).as_polynomial() == IntPoly({0, -3, 1}));
}

TEST_CASE("det_rfmatrix equals cofactor oracle on polynomial matrices") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + rng() % 5;
    RFMatrix m(n, n);
    testing::PolyMatrix pm(n, std::vector<RatPoly>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Int> c;
        for (int d = 0; d <= static_cast<int>(rng() % 3); ++d)
          c.push_back(Int(static_cast<long>(rng() % 7) - 3));
        IntPoly p(std::move(c));
        m(i, j) = RationalFunction(p);
        pm[i][j] = to_rat(p);
      }
    RatPoly expect = testing::naive_poly_det(pm);
    RationalFunction got = det_rfmatrix(m);
    if (expect.is_zero()) {
      CHECK(got.is_zero());
    } else {
      CHECK(got.is_polynomial());
      CHECK(to_rat(got.as_polynomial()) == expect);
    }
  }

  // Cross-check det(xI - M) against charpoly_exact.
  std::mt19937_64 rng2(53);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + rng2() % 6;
    IntMatrix a = random_symmetric01(n, rng2);
    RFMatrix xi(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        IntPoly e(Int(-a(i, j)));
        if (i == j) e += IntPoly::x();
        xi(i, j) = RationalFunction(e);
      }
    CHECK(det_rfmatrix(xi).as_polynomial() == charpoly_exact(a));
  }
}

TEST_CASE("kronecker product") {
  IntMatrix five(1, 1);
  five << 5;
  IntMatrix i2 = IntMatrix::Identity(2, 2);
  IntMatrix k = kronecker(i2, five);
  CHECK(k.rows() == 2);
  CHECK(k(0, 0) == 5);
  CHECK(k(1, 1) == 5);
  CHECK(k(0, 1) == 0);

  // Cartesian product adjacency identity.
  Graph c3 = generate_cycle(3), k2 = generate_complete(2);
  IntMatrix lhs = kronecker(adjacency_matrix(c3), IntMatrix::Identity(2, 2)) +
                  kronecker(IntMatrix::Identity(3, 3), adjacency_matrix(k2));
  CHECK(lhs == adjacency_matrix(cartesian_product(c3, k2)));

  CHECK(kronecker(IntMatrix::Ones(2, 1), IntMatrix::Ones(3, 1)) == IntMatrix::Ones(6, 1));

  // Mixed-product property on random probes.
  std::mt19937_64 rng(59);
  auto rnd = [&](int r, int c) {
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = Int(static_cast<long>(rng() % 5) - 2);
    return m;
  };
  for (int trial = 0; trial < 5; ++trial) {
    IntMatrix a = rnd(2, 3), c = rnd(3, 2), b = rnd(2, 2), d = rnd(2, 3);
    CHECK(IntMatrix(kronecker(a, b) * kronecker(c, d)) ==
          kronecker(IntMatrix(a * c), IntMatrix(b * d)));
  }
}

TEST_CASE("solve_linear") {
  RatMatrix a(2, 2);
  a << Rat(2), Rat(1), Rat(1), Rat(3);
  RatVector b(2);
  b << Rat(5), Rat(10);
  RatVector x = solve_linear(a, b);
  CHECK(x(0) == Rat(1));
  CHECK(x(1) == Rat(3));
  CHECK_THROWS_AS(solve_linear(RatMatrix::Zero(2, 2), RatVector::Zero(2)), internal_error);
}

TEST_CASE("det_rfmatrix abscissa budget exhaustion") {
  // A denominator that vanishes on every candidate evaluation point.
  IntPoly blocker(1);
  for (int i = -40; i <= 40; ++i) blocker = blocker * IntPoly::x_minus(i);
  RFMatrix m(1, 1);
  m(0, 0) = RationalFunction(IntPoly(1), blocker);
  CHECK_THROWS_AS(det_rfmatrix(m), internal_error);
}
