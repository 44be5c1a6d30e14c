#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "calc/polynomial.hpp"
#include "calc/rational.hpp"
#include "calc/upoly.hpp"

namespace calc {

struct RootOrigin;

/**
 * Exact real number: either a rational or the unique root of a square-free
 * integer polynomial inside an open isolating interval whose endpoints are
 * not roots.
 *
 * Refinement shrinks the interval (and may discover that the number is
 * rational) without changing the value, so it is allowed on const objects.
 * A single object must not be refined from two threads at once; copies are
 * independent.
 */
class RealAlgebraicNumber {
 public:
  RealAlgebraicNumber() = default;
  RealAlgebraicNumber(const Rational& r) : value_(r) {}  // NOLINT implicit by design
  RealAlgebraicNumber(long v) : value_(v) {}              // NOLINT

  /// The root of p inside (lo, hi). p must be square-free with exactly one
  /// root there and neither endpoint a root; rational roots are detected.
  static RealAlgebraicNumber from_interval(const univariate::ZPoly& p, const Rational& lo,
                                           const Rational& hi);
  /// As from_interval, for a root the caller knows to be irrational.
  static RealAlgebraicNumber from_irrational(std::shared_ptr<const univariate::ZPoly> p,
                                             const Rational& lo, const Rational& hi);

  bool is_rational() const { return !poly_; }
  /// Throws std::logic_error for irrational numbers.
  const Rational& rational() const;

  /// Isolating interval; both equal the value for rationals.
  const Rational& lower() const { return poly_ ? lo_ : value_; }
  const Rational& upper() const { return poly_ ? hi_ : value_; }
  /// Integer defining polynomial (for rationals, the primitive linear one).
  univariate::ZPoly defining() const;

  /// Halves the isolating interval; no-op for rationals.
  void refine() const;
  /// Refines until the interval is narrower than width.
  void refine_to(const Rational& width) const;
  /// Shrinks the interval to one side of cut; returns the comparison of the
  /// value with cut.
  std::strong_ordering compare_with(const Rational& cut) const;

  RealAlgebraicNumber operator-() const;

  /// Set for roots found over a sample prefix; copies share it.
  const RootOrigin* origin() const { return origin_.get(); }
  void set_origin(std::shared_ptr<const RootOrigin> o) { origin_ = std::move(o); }

  double to_double() const;
  /// Rational form, or "root of <p> in (lo, hi)".
  std::string to_string() const;
  /// Rational form, or a 3-decimal approximation prefixed with "~".
  std::string approx_string(int digits = 3) const;

  friend std::strong_ordering compare(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b);
  friend bool operator==(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
    return compare(a, b) == 0;
  }
  friend std::strong_ordering operator<=>(const RealAlgebraicNumber& a,
                                          const RealAlgebraicNumber& b) {
    return compare(a, b);
  }

 private:
  void become_rational(const Rational& r) const;

  mutable Rational value_;
  mutable std::shared_ptr<const univariate::ZPoly> poly_;
  mutable Rational lo_, hi_;
  mutable int sign_lo_ = 0;  // sign of poly_ at lo_
  std::shared_ptr<const RootOrigin> origin_;
};

using RAN = RealAlgebraicNumber;
/// Values for x1..xi.
using SamplePoint = std::vector<RealAlgebraicNumber>;

/// The number is a root of x |-> poly(prefix, x), x the variable right after
/// the prefix, whose leading coefficient in x does not vanish at the prefix.
/// Relates the number to the prefix far more tightly than its defining
/// polynomial does.
struct RootOrigin {
  Polynomial poly;
  SamplePoint prefix;
};

/// Sign of an integer polynomial at a rational.
int sign_at(const univariate::ZPoly& p, const Rational& x);

/// All distinct real roots, increasing. Rational roots come back rational.
std::vector<RealAlgebraicNumber> isolate_roots(const univariate::UPoly& p);
/// p must involve at most one variable.
std::vector<RealAlgebraicNumber> isolate_roots(const Polynomial& p);

/// Exact sign of p at s; s must provide every variable p involves.
Sign sign_at(const Polynomial& p, std::span<const RealAlgebraicNumber> s);

/// Number of distinct real roots of x |-> p(s, x), x the variable right after
/// s. The leading coefficient in x must not vanish at s.
int count_real_roots(const Polynomial& p, std::span<const RealAlgebraicNumber> s);

struct SpecializedRoots {
  /// p(s, x) vanishes identically.
  bool nullified = false;
  std::vector<RealAlgebraicNumber> roots;
};

/// Real roots of x |-> p(s, x) where x is the variable right after s.
SpecializedRoots specialize_roots(const Polynomial& p, std::span<const RealAlgebraicNumber> s);

}  // namespace calc
