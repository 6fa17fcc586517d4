#ifndef POCKETS_TESTS_ORACLE_HPP
#define POCKETS_TESTS_ORACLE_HPP

// Test-only brute-force oracles, deliberately independent of the library's
// evaluation/interpolation and Faddeev-LeVerrier paths.

#include <vector>

#include "pockets/polynomial.hpp"
#include "pockets/types.hpp"

namespace pockets::testing {

using PolyMatrix = std::vector<std::vector<RatPoly>>;

// Determinant by recursive cofactor expansion along the first row.
inline RatPoly naive_poly_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return RatPoly(1);
  if (n == 1) return m[0][0];
  RatPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<RatPoly> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    RatPoly term = m[0][j] * naive_poly_det(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

// det(xI - M) by cofactor expansion.
inline IntPoly naive_charpoly(const IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  PolyMatrix pm(n, std::vector<RatPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatPoly entry(Rat(-m(i, j)));
      if (i == j) entry += RatPoly::x();
      pm[i][j] = entry;
    }
  return to_int_exact(naive_poly_det(pm));
}

// Sum of the entries of adj(xI - M); equals coronal(M) * charpoly(M).
inline IntPoly naive_adjugate_sum(const IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  RatPoly sum;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // Cofactor C_ij of (xI - M), which lands at adj(j, i); the full sum
      // is symmetric in (i, j) so the transpose does not matter.
      PolyMatrix minor;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<RatPoly> row;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          RatPoly entry(Rat(-m(r, c)));
          if (r == c) entry += RatPoly::x();
          row.push_back(std::move(entry));
        }
        minor.push_back(std::move(row));
      }
      RatPoly cof = naive_poly_det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      sum += cof;
    }
  return to_int_exact(sum);
}

}  // namespace pockets::testing

#endif
