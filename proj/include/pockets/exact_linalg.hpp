#ifndef POCKETS_EXACT_LINALG_HPP
#define POCKETS_EXACT_LINALG_HPP

#include <Eigen/Core>

#include "pockets/polynomial.hpp"
#include "pockets/rational_function.hpp"
#include "pockets/types.hpp"

namespace Eigen {

// Container support only; matrices of rational functions are assembled and
// consumed entrywise.
template <>
struct NumTraits<pockets::RationalFunction>
    : GenericNumTraits<pockets::RationalFunction> {
  typedef pockets::RationalFunction Real;
  typedef pockets::RationalFunction NonInteger;
  typedef pockets::RationalFunction Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 50,
    AddCost = 1000,
    MulCost = 1000
  };
};

}  // namespace Eigen

namespace pockets {

using RFMatrix = Eigen::Matrix<RationalFunction, Eigen::Dynamic, Eigen::Dynamic>;

// Monic characteristic polynomial det(xI - M) by Faddeev-LeVerrier; the
// interior divisions are exact over the integers.  Order is capped at 64.
IntPoly charpoly_exact(const IntMatrix& m);

// Fraction-free determinant (Bareiss).
Int det_bareiss(IntMatrix m);

// Gaussian elimination over the rationals; throws internal_error on a
// singular system.
RatVector solve_linear(RatMatrix a, RatVector b);

// M-coronal of a square integer matrix: sum of the entries of (xI-M)^{-1},
// exact.  Computed by solving (sI-M)y = 1 at integer abscissae away from
// the spectrum, interpolating the numerator against det(xI-M).
RationalFunction coronal(const IntMatrix& m);

// n/(x-t): the coronal of any order-n matrix with constant row sum t.
RationalFunction coronal_constant_row_sum(int n, const Int& t);

// Exact determinant of a matrix of rational functions.  Each row is
// cleared by its least common denominator, the integer-polynomial
// determinant is recovered by evaluation at integer abscissae (avoiding
// denominator roots) plus interpolation, and the cleared factors are
// divided back out.
RationalFunction det_rfmatrix(const RFMatrix& m);

template <class DerivedA, class DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kronecker(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Result = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Result r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index p = 0; p < b.rows(); ++p)
        for (Eigen::Index q = 0; q < b.cols(); ++q)
          r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return r;
}

}  // namespace pockets

#endif
