#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pockets/graph.hpp"
#include "pockets/numeric.hpp"

using namespace pockets;
using doctest::Approx;

TEST_CASE("eig_sym on fixed graphs") {
  auto s = eig_sym(adjacency_matrix_d(generate_complete(2)));
  REQUIRE(s.values.size() == 2);
  CHECK(s.values[0] == Approx(-1).epsilon(1e-12));
  CHECK(s.values[1] == Approx(1).epsilon(1e-12));

  // Q(C_4) = {0, 2, 2, 4}: circulant values, confirmed by hand expansion of
  // det(xI-Q) = x(x-4)(x-2)^2.
  auto q = eig_sym(signless_laplacian_d(generate_cycle(4)));
  std::vector<double> expect = {0, 2, 2, 4};
  for (int i = 0; i < 4; ++i) CHECK(q.values[i] == Approx(expect[i]).epsilon(1e-10));

  // Perron value of a 4-regular graph.
  auto p = eig_sym(adjacency_matrix_d(
      cartesian_product(generate_cycle(4), generate_complete(3))));
  CHECK(p.values.back() == Approx(4.0).epsilon(1e-10));
}

TEST_CASE("eig_sym rejects bad input") {
  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 0.5, 0;
  CHECK_THROWS_AS(eig_sym(m), invalid_parameter);
  CHECK_THROWS_AS(eig_sym(Eigen::MatrixXd::Zero(201, 201)), size_limit_exceeded);
}

TEST_CASE("eigenvalue sum equals trace") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + rng() % 30;
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        m(i, j) = m(j, i) = static_cast<double>(static_cast<long>(rng() % 11) - 5);
    auto s = eig_sym(m);
    double sum = 0;
    for (double v : s.values) sum += v;
    CHECK(sum == Approx(m.trace()).epsilon(0).scale(1).epsilon(1e-8));
  }
}

TEST_CASE("rotation accumulation stays orthogonal") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + rng() % 20;
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        m(i, j) = m(j, i) = static_cast<double>(static_cast<long>(rng() % 7) - 3);
    Eigen::MatrixXd v;
    auto s = eig_sym_vectors(m, v);
    Eigen::MatrixXd vtv = v.transpose() * v - Eigen::MatrixXd::Identity(n, n);
    CHECK(vtv.cwiseAbs().maxCoeff() <= 1e-9);
    // v diagonalizes m in sorted order.
    Eigen::MatrixXd d = v.transpose() * m * v;
    for (int i = 0; i < n; ++i) CHECK(d(i, i) == Approx(s.values[i]).epsilon(1e-8));
  }
}

TEST_CASE("Q matrices are positive semidefinite") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(2 + rng() % 10, rng);
    auto s = eig_sym(signless_laplacian_d(g));
    CHECK(s.values.front() >= -1e-9);
  }
}

TEST_CASE("spectra match") {
  auto exact = spectra_match({0, 2, 2, 4}, {0, 2, 2, 4}, 1e-9);
  CHECK(exact.match);
  CHECK(exact.max_deviation == 0.0);

  auto off = spectra_match({0, 2, 2, 4}, {0, 2, 2, 4 + 2e-9}, 1e-9);
  CHECK(!off.match);
  CHECK(off.max_deviation == Approx(2e-9));

  CHECK_THROWS_AS(spectra_match({1.0}, {1.0, 2.0}, 1e-9), invalid_parameter);
}

TEST_CASE("residual") {
  Eigen::MatrixXd a = adjacency_matrix_d(generate_complete(2));
  Eigen::VectorXd ones(2), alt(2);
  ones << 1, 1;
  alt << 1, -1;
  CHECK(residual(a, ones, 1.0) == 0.0);
  CHECK(residual(a, alt, 1.0) == Approx(2.0));
  CHECK_THROWS_AS(residual(a, Eigen::VectorXd::Zero(2), 1.0), invalid_parameter);
}

TEST_CASE("sweep cap and default options") {
  Eigen::MatrixXd m = adjacency_matrix_d(generate_cycle(5));
  JacobiOptions strict;
  strict.max_sweeps = 0;
  CHECK_THROWS_AS(eig_sym(m, strict), internal_error);

  JacobiOptions saved = default_jacobi_options();
  JacobiOptions none = saved;
  none.max_sweeps = 0;
  set_default_jacobi_options(none);
  CHECK_THROWS_AS(eig_sym(m), internal_error);
  set_default_jacobi_options(saved);
  CHECK(eig_sym(m).values.size() == 5);
}
