#include "calc/rational.hpp"

#include <stdexcept>

namespace calc {

namespace {

bool contains_zero(const Rational* lo, bool lo_closed, const Rational* hi, bool hi_closed) {
  const bool lo_ok = !lo || sgn(*lo) < 0 || (sgn(*lo) == 0 && lo_closed);
  const bool hi_ok = !hi || sgn(*hi) > 0 || (sgn(*hi) == 0 && hi_closed);
  return lo_ok && hi_ok;
}

// Simplest rational in a non-empty set lying in [0, inf) that excludes 0.
Rational simplest_positive(const Rational& lo, bool lo_closed, const Rational* hi,
                           bool hi_closed) {
  Integer m = ceil_of(lo);
  if (m == lo && !lo_closed) m += 1;
  if (!hi || m < *hi || (m == *hi && hi_closed)) return Rational(m);

  // No integer inside: write x = fl + 1/y and recurse on y.
  const Integer fl = floor_of(lo);
  const Rational lo_frac = lo - fl;
  const Rational hi_frac = *hi - fl;
  const Rational y_lo = 1 / hi_frac;
  if (sgn(lo_frac) == 0) {
    const Rational y = simplest_positive(y_lo, hi_closed, nullptr, false);
    return fl + 1 / y;
  }
  const Rational y_hi = 1 / lo_frac;
  const Rational y = simplest_positive(y_lo, hi_closed, &y_hi, lo_closed);
  return fl + 1 / y;
}

}  // namespace

Rational simplest_rational_between(const Rational* lo, bool lo_closed, const Rational* hi,
                                   bool hi_closed) {
  if (lo && hi) {
    const int c = cmp(*lo, *hi);
    if (c > 0 || (c == 0 && !(lo_closed && hi_closed)))
      throw std::invalid_argument("simplest_rational_between: empty set");
  }
  if (contains_zero(lo, lo_closed, hi, hi_closed)) return Rational(0);
  if (hi && sgn(*hi) <= 0) {
    const Rational neg_hi = -*hi;
    if (!lo) return -simplest_positive(neg_hi, hi_closed, nullptr, false);
    const Rational neg_lo = -*lo;
    return -simplest_positive(neg_hi, hi_closed, &neg_lo, lo_closed);
  }
  return simplest_positive(*lo, lo_closed, hi, hi_closed);
}

}  // namespace calc
