#pragma once

// Arbitrary-precision integers and the Eigen glue needed to store them in
// dense matrices.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace kfp {

using Integer = mpz_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerMatrix = Matrix<Integer>;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// C(n, 2) with the convention C(n, 2) = 0 for n < 2.
inline std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

inline Integer binomial_big(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::string to_decimal(const Integer& v) { return v.get_str(10); }

/// Parses a base-10 integer with optional sign; throws std::invalid_argument.
Integer parse_integer(const std::string& text);

/// Exact division, specialised for GMP.
template <typename Scalar>
inline Scalar exact_div(const Scalar& num, const Scalar& den) {
  return num / den;
}

template <>
inline Integer exact_div<Integer>(const Integer& num, const Integer& den) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace kfp

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 100
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
