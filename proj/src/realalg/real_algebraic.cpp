#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "calc/real_algebraic.hpp"

namespace calc {

using univariate::UPoly;
using univariate::ZPoly;

namespace detail {
bool find_rational_root(const ZPoly& p, Rational& lo, Rational& hi, Rational& root);
}

RealAlgebraicNumber RealAlgebraicNumber::from_interval(const ZPoly& p, const Rational& lo,
                                                       const Rational& hi) {
  if (p.size() < 2) throw std::invalid_argument("defining polynomial must be non-constant");
  if (lo >= hi) throw std::invalid_argument("isolating interval must be non-empty");
  Rational l = lo, h = hi, root;
  if (detail::find_rational_root(p, l, h, root)) return RealAlgebraicNumber(root);
  RealAlgebraicNumber a;
  a.poly_ = std::make_shared<const ZPoly>(p);
  a.lo_ = l;
  a.hi_ = h;
  a.sign_lo_ = sign_at(p, l);
  if (a.sign_lo_ == 0 || sign_at(p, h) == 0)
    throw std::invalid_argument("isolating interval endpoint is a root");
  return a;
}

RealAlgebraicNumber RealAlgebraicNumber::from_irrational(std::shared_ptr<const ZPoly> p,
                                                         const Rational& lo, const Rational& hi) {
  RealAlgebraicNumber a;
  a.sign_lo_ = sign_at(*p, lo);
  a.poly_ = std::move(p);
  a.lo_ = lo;
  a.hi_ = hi;
  return a;
}

const Rational& RealAlgebraicNumber::rational() const {
  if (poly_) throw std::logic_error("irrational number has no rational value");
  return value_;
}

ZPoly RealAlgebraicNumber::defining() const {
  if (poly_) return *poly_;
  return ZPoly{-value_.get_num(), value_.get_den()};
}

void RealAlgebraicNumber::become_rational(const Rational& r) const {
  value_ = r;
  poly_.reset();
  lo_ = hi_ = Rational(0);
  sign_lo_ = 0;
}

void RealAlgebraicNumber::refine() const {
  if (!poly_) return;
  const Rational mid = (lo_ + hi_) / 2;
  const int s = sign_at(*poly_, mid);
  if (s == 0) {
    become_rational(mid);
  } else if (s == sign_lo_) {
    lo_ = mid;
  } else {
    hi_ = mid;
  }
}

void RealAlgebraicNumber::refine_to(const Rational& width) const {
  while (poly_ && hi_ - lo_ >= width) refine();
}

std::strong_ordering RealAlgebraicNumber::compare_with(const Rational& cut) const {
  if (!poly_) return cmp(value_, cut) <=> 0;
  if (cut <= lo_) return std::strong_ordering::greater;
  if (cut >= hi_) return std::strong_ordering::less;
  const int s = sign_at(*poly_, cut);
  if (s == 0) {
    become_rational(cut);
    return std::strong_ordering::equal;
  }
  if (s == sign_lo_) {
    lo_ = cut;
    return std::strong_ordering::greater;
  }
  hi_ = cut;
  return std::strong_ordering::less;
}

std::strong_ordering compare(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
  using so = std::strong_ordering;
  if (a.is_rational() && b.is_rational()) return cmp(a.value_, b.value_) <=> 0;
  if (a.is_rational()) return 0 <=> b.compare_with(a.value_);
  if (b.is_rational()) return a.compare_with(b.value_);
  if (a.poly_ == b.poly_ && a.lo_ == b.lo_ && a.hi_ == b.hi_) return so::equal;

  // Shrink both to the intersection of their intervals, or separate them.
  for (int round = 0; round < 2; ++round) {
    if (a.upper() <= b.lower()) return so::less;
    if (b.upper() <= a.lower()) return so::greater;
    const Rational lo = std::max(a.lower(), b.lower());
    const Rational hi = std::min(a.upper(), b.upper());
    for (const auto* x : {&a, &b}) {
      if (x->is_rational()) break;
      if (x->lower() < lo) x->compare_with(lo);
      if (!x->is_rational() && x->upper() > hi) x->compare_with(hi);
    }
    if (a.is_rational() || b.is_rational()) return compare(a, b);
    // Both now isolate a root of the same polynomial inside a common interval.
    if ((a.poly_ == b.poly_ || *a.poly_ == *b.poly_) && a.upper() > b.lower() && b.upper() > a.lower())
      return so::equal;
  }
  if (a.upper() <= b.lower()) return so::less;
  if (b.upper() <= a.lower()) return so::greater;
  // Both are the unique roots of their polynomials in the same interval.
  const UPoly g = univariate::gcd(univariate::to_rational(*a.poly_), univariate::to_rational(*b.poly_));
  if (univariate::degree(g) > 0) {
    const ZPoly gz = univariate::primitive_integer(g);
    if (sign_at(gz, a.lower()) * sign_at(gz, a.upper()) < 0) return so::equal;
  }
  while (true) {
    a.refine();
    b.refine();
    if (a.is_rational() || b.is_rational()) return compare(a, b);
    if (a.upper() <= b.lower()) return so::less;
    if (b.upper() <= a.lower()) return so::greater;
  }
}

RealAlgebraicNumber RealAlgebraicNumber::operator-() const {
  if (!poly_) return RealAlgebraicNumber(Rational(-value_));
  ZPoly r = *poly_;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  RealAlgebraicNumber a;
  a.poly_ = std::make_shared<const ZPoly>(std::move(r));
  a.lo_ = -hi_;
  a.hi_ = -lo_;
  a.sign_lo_ = sign_at(*a.poly_, a.lo_);
  return a;
}

double RealAlgebraicNumber::to_double() const {
  if (!poly_) return value_.get_d();
  Rational w = abs(lo_) + abs(hi_);
  w /= Rational(Integer(1) << 60);
  if (sgn(w) == 0) w = Rational(1, 1);
  refine_to(w);
  return poly_ ? Rational((lo_ + hi_) / 2).get_d() : value_.get_d();
}

std::string RealAlgebraicNumber::to_string() const {
  if (!poly_) return value_.get_str();
  const Polynomial p = univariate::to_polynomial(univariate::to_rational(*poly_), 1, 0);
  std::vector<std::string> names{"x"};
  return "root of " + p.to_string(names) + " in (" + lo_.get_str() + ", " + hi_.get_str() + ")";
}

std::string RealAlgebraicNumber::approx_string(int digits) const {
  if (!poly_) return value_.get_str();
  std::ostringstream os;
  os << "~" << std::fixed << std::setprecision(digits) << to_double();
  return os.str();
}

}  // namespace calc
