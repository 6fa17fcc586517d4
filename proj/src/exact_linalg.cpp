#include "pockets/exact_linalg.hpp"

#include <utility>
#include <vector>

namespace pockets {

IntPoly charpoly_exact(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw invalid_parameter("charpoly needs a square matrix");
  const int n = static_cast<int>(m.rows());
  if (n < 1 || n > 64)
    throw invalid_parameter("charpoly order must be in [1, 64], got " + std::to_string(n));

  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  IntMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      IntMatrix shifted = mk;
      for (int i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
      mk = m * shifted;
    }
    Int tr = mk.trace();
    mpz_divexact_ui(tr.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -tr;
  }
  return IntPoly(std::move(c));
}

Int det_bareiss(IntMatrix m) {
  if (m.rows() != m.cols()) throw invalid_parameter("determinant needs a square matrix");
  const int n = static_cast<int>(m.rows());
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return Int(sign * m(n - 1, n - 1));
}

RatVector solve_linear(RatMatrix a, RatVector b) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n || b.size() != n)
    throw invalid_parameter("solve_linear dimension mismatch");
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw internal_error("singular system in solve_linear");
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      std::swap(b(k), b(pivot));
    }
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f(a(i, k) / a(k, k));
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b(i) -= f * b(k);
    }
  }
  RatVector x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rat s = b(i);
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x(j);
    x(i) = Rat(s / a(i, i));
  }
  return x;
}

RationalFunction coronal(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw invalid_parameter("coronal needs a square matrix");
  const int n = static_cast<int>(m.rows());
  const IntPoly f = charpoly_exact(m);

  // Gamma(x) * f(x) is the entry sum of adj(xI - M): a polynomial of degree
  // at most n-1, recoverable from n samples.
  std::vector<std::pair<Rat, Rat>> samples;
  Int s = 0;
  int direction = 1;
  while (static_cast<int>(samples.size()) < n) {
    if (f.eval<Int>(s) != 0) {
      RatMatrix a = RatMatrix::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = (i == j ? Rat(s) : Rat(0)) - Rat(m(i, j));
      RatVector y = solve_linear(std::move(a), RatVector::Ones(n));
      Rat gamma(0);
      for (int i = 0; i < n; ++i) gamma += y(i);
      samples.emplace_back(Rat(s), Rat(gamma * f.eval<Rat>(Rat(s))));
    }
    // 0, 1, -1, 2, -2, ...
    s = direction > 0 ? Int(-s - 1) : Int(-s);
    direction = -direction;
  }
  IntPoly numerator = to_int_exact(interpolate(samples));
  return RationalFunction(numerator, f);
}

RationalFunction coronal_constant_row_sum(int n, const Int& t) {
  if (n < 1) throw invalid_parameter("coronal_constant_row_sum needs n >= 1");
  return RationalFunction(IntPoly(Int(n)), IntPoly::x_minus(t));
}

RationalFunction det_rfmatrix(const RFMatrix& m) {
  if (m.rows() != m.cols()) throw invalid_parameter("determinant needs a square matrix");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return RationalFunction(1);
  if (n > 64) throw invalid_parameter("det_rfmatrix order is capped at 64");

  // Clear each row by its least common denominator.
  std::vector<IntPoly> row_lcd(n, IntPoly(1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) row_lcd[i] = poly_lcm(row_lcd[i], m(i, j).den());

  std::vector<std::vector<IntPoly>> cleared(n, std::vector<IntPoly>(n));
  int degree_bound = 0;
  for (int i = 0; i < n; ++i) {
    int row_max = 0;
    for (int j = 0; j < n; ++j) {
      cleared[i][j] = m(i, j).num() * divide_exact(row_lcd[i], m(i, j).den());
      row_max = std::max(row_max, cleared[i][j].degree());
    }
    degree_bound += std::max(row_max, 0);
  }

  // Abscissae must avoid the roots of every row LCD so the cleared factors
  // can be divided back out.
  const int needed = degree_bound + 1;
  std::vector<std::pair<Rat, Rat>> samples;
  samples.reserve(needed);
  Int s = 0;
  int direction = 1;
  int budget = 4 * (needed + 2) + 16;
  while (static_cast<int>(samples.size()) < needed) {
    if (--budget < 0)
      throw internal_error("det_rfmatrix abscissa budget exhausted: denominators vanish "
                           "on every candidate evaluation point");
    bool usable = true;
    for (int i = 0; i < n && usable; ++i)
      if (row_lcd[i].eval<Int>(s) == 0) usable = false;
    if (usable) {
      IntMatrix at = IntMatrix::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(i, j) = cleared[i][j].eval<Int>(s);
      samples.emplace_back(Rat(s), Rat(det_bareiss(std::move(at))));
    }
    s = direction > 0 ? Int(-s - 1) : Int(-s);
    direction = -direction;
  }

  IntPoly det_cleared = to_int_exact(interpolate(samples));
  IntPoly denominator(1);
  for (int i = 0; i < n; ++i) denominator = denominator * row_lcd[i];
  return RationalFunction(det_cleared, denominator);
}

}  // namespace pockets
