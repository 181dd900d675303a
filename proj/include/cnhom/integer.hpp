#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace Eigen {

/** Scalar traits making GMP integers usable as an Eigen matrix scalar. */
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
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace cnhom {

/** Exact arbitrary-precision integer used for all matrix and chain arithmetic. */
using Int = mpz_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/** Converts to a 64-bit integer, throwing std::overflow_error when out of range. */
inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer exceeds 64-bit output range: " + v.get_str());
  return v.get_si();
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace cnhom
