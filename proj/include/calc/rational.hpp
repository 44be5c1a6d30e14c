#pragma once

#include <gmpxx.h>

#include <string>

namespace calc {

using Integer = mpz_class;
/// Exact rational; gmp keeps every value in lowest terms with a positive
/// denominator, and zero is 0/1.
using Rational = mpq_class;

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(const Rational& r) {
  const int s = sgn(r);
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

inline Sign sign_of(const Integer& z) {
  const int s = sgn(z);
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

inline Sign operator-(Sign a) { return static_cast<Sign>(-static_cast<int>(a)); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

/// "3", "-1/2".
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// The rational of smallest denominator (then smallest magnitude) inside the
/// set bounded by lo/hi; a null bound is infinite. The set must be non-empty.
Rational simplest_rational_between(const Rational* lo, bool lo_closed,
                                   const Rational* hi, bool hi_closed);

}  // namespace calc
