#ifndef POCKETS_TYPES_HPP
#define POCKETS_TYPES_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace Eigen {

// NumTraits glue so dense Eigen types can be instantiated on GMP scalars.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 300,
    MulCost = 300
  };
};

}  // namespace Eigen

namespace pockets {

using Int = mpz_class;
using Rat = mpq_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline Int int_gcd(const Int& a, const Int& b) { return Int(gcd(a, b)); }
inline Int int_lcm(const Int& a, const Int& b) { return Int(lcm(a, b)); }
inline Int int_abs(const Int& a) { return Int(abs(a)); }

inline double to_double(const Rat& q) { return q.get_d(); }

inline long double to_long_double(const Rat& q) {
  // get_d() is double only; split num/den for the extra mantissa bits.
  return static_cast<long double>(q.get_num().get_d()) /
         static_cast<long double>(q.get_den().get_d());
}

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

// Exact square root when the argument is a perfect square.
inline bool perfect_square(const Int& n, Int& root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
  }
  return false;
}

}  // namespace pockets

#endif
