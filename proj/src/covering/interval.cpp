#include <algorithm>
#include <stdexcept>

#include "calc/covering.hpp"

namespace calc {

namespace {

// Order of lower bounds: -inf first, then by value, closed before open.
bool lower_before(const Bound& a, const Bound& b) {
  if (a.kind == BoundKind::NegInf) return b.kind != BoundKind::NegInf;
  if (b.kind == BoundKind::NegInf) return false;
  const auto c = compare(a.value, b.value);
  if (c != 0) return c < 0;
  return a.is_closed() && !b.is_closed();
}

// Order of upper bounds: +inf last, then by value, open before closed.
bool upper_before(const Bound& a, const Bound& b) {
  if (b.kind == BoundKind::PosInf) return a.kind != BoundKind::PosInf;
  if (a.kind == BoundKind::PosInf) return false;
  const auto c = compare(a.value, b.value);
  if (c != 0) return c < 0;
  return !a.is_closed() && b.is_closed();
}

// Whether an interval starting at lower leaves no hole after reach.
bool connects(const Bound& reach, const Bound& lower) {
  if (lower.kind == BoundKind::NegInf || reach.kind == BoundKind::PosInf) return true;
  const auto c = compare(reach.value, lower.value);
  if (c != 0) return c > 0;
  return reach.is_closed() || lower.is_closed();
}

Bound complement_end(const Bound& b) {
  return b.is_closed() ? Bound::open(b.value) : Bound::closed(b.value);
}

std::vector<const Interval*> sorted_by_lower(std::span<const Interval> intervals) {
  std::vector<const Interval*> v;
  v.reserve(intervals.size());
  for (const auto& i : intervals) v.push_back(&i);
  std::stable_sort(v.begin(), v.end(),
                   [](const Interval* a, const Interval* b) { return lower_before(a->lower, b->lower); });
  return v;
}

std::string bound_text(const Bound& b, bool exact) {
  switch (b.kind) {
    case BoundKind::NegInf:
      return "-inf";
    case BoundKind::PosInf:
      return "inf";
    default:
      return exact ? b.value.to_string() : b.value.approx_string(3);
  }
}

}  // namespace

bool operator==(const Bound& a, const Bound& b) {
  if (a.kind != b.kind) return false;
  return !a.finite() || a.value == b.value;
}

bool operator==(const Interval& a, const Interval& b) { return a.lower == b.lower && a.upper == b.upper; }

bool Interval::is_point() const {
  return lower.finite() && upper.finite() && lower.value == upper.value;
}

bool Interval::contains(const RealAlgebraicNumber& x) const {
  if (lower.finite()) {
    const auto c = compare(x, lower.value);
    if (c < 0 || (c == 0 && !lower.is_closed())) return false;
  }
  if (upper.finite()) {
    const auto c = compare(x, upper.value);
    if (c > 0 || (c == 0 && !upper.is_closed())) return false;
  }
  return true;
}

bool Interval::is_closed() const {
  return (!lower.finite() || lower.is_closed()) && (!upper.finite() || upper.is_closed());
}

std::string Interval::to_string() const {
  if (is_point()) return "[" + bound_text(lower, false) + "]";
  return std::string(lower.is_closed() ? "[" : "(") + bound_text(lower, false) + ", " +
         bound_text(upper, false) + (upper.is_closed() ? "]" : ")");
}

std::string Interval::to_exact_string() const {
  return std::string(lower.is_closed() ? "[" : "(") + bound_text(lower, true) + ", " +
         bound_text(upper, true) + (upper.is_closed() ? "]" : ")");
}

std::vector<Interval> gaps(std::span<const Interval> intervals) {
  std::vector<Interval> out;
  std::optional<Bound> reach;
  for (const Interval* in : sorted_by_lower(intervals)) {
    if (!reach) {
      if (in->lower.kind != BoundKind::NegInf)
        out.push_back(Interval{Bound::neg_inf(), complement_end(in->lower)});
      reach = in->upper;
      continue;
    }
    if (reach->kind == BoundKind::PosInf) break;
    if (!connects(*reach, in->lower)) {
      out.push_back(Interval{complement_end(*reach), complement_end(in->lower)});
    }
    if (upper_before(*reach, in->upper)) reach = in->upper;
  }
  if (!reach) {
    out.push_back(Interval::whole());
  } else if (reach->kind != BoundKind::PosInf) {
    out.push_back(Interval{complement_end(*reach), Bound::pos_inf()});
  }
  return out;
}

bool is_covering(std::span<const Interval> intervals) { return gaps(intervals).empty(); }

Rational simplest_rational_in(const Interval& gap) {
  if (gap.is_point()) throw std::invalid_argument("simplest_rational_in: point interval");
  // Rational bounds just outside and just inside the gap; once both give the
  // same answer it is the answer for the gap itself.
  while (true) {
    Rational outer_lo, inner_lo, outer_hi, inner_hi;
    bool has_lo = gap.lower.finite(), has_hi = gap.upper.finite();
    bool lo_closed = false, hi_closed = false;
    if (has_lo) {
      const auto& v = gap.lower.value;
      if (v.is_rational()) {
        outer_lo = inner_lo = v.rational();
        lo_closed = gap.lower.is_closed();
      } else {
        outer_lo = v.lower();
        inner_lo = v.upper();
      }
    }
    if (has_hi) {
      const auto& v = gap.upper.value;
      if (v.is_rational()) {
        outer_hi = inner_hi = v.rational();
        hi_closed = gap.upper.is_closed();
      } else {
        outer_hi = v.upper();
        inner_hi = v.lower();
      }
    }
    const bool inner_nonempty = !has_lo || !has_hi || inner_lo < inner_hi ||
                                (inner_lo == inner_hi && lo_closed && hi_closed);
    if (inner_nonempty) {
      const Rational a = simplest_rational_between(has_lo ? &inner_lo : nullptr, lo_closed,
                                                   has_hi ? &inner_hi : nullptr, hi_closed);
      const Rational b = simplest_rational_between(has_lo ? &outer_lo : nullptr, lo_closed,
                                                   has_hi ? &outer_hi : nullptr, hi_closed);
      if (a == b) return a;
    }
    if (has_lo) gap.lower.value.refine();
    if (has_hi) gap.upper.value.refine();
  }
}

std::optional<RealAlgebraicNumber> sample_outside(std::span<const Interval> intervals) {
  const auto g = gaps(intervals);
  if (g.empty()) return std::nullopt;
  const RealAlgebraicNumber zero(0);
  for (const auto& gap : g)
    if (gap.contains(zero)) return zero;
  const Interval* pick = &g.front();
  for (const auto& gap : g) {
    if (gap.lower.finite() && compare(gap.lower.value, zero) >= 0) {
      pick = &gap;
      break;
    }
  }
  if (pick->is_point()) return pick->lower.value;
  return RealAlgebraicNumber(simplest_rational_in(*pick));
}

std::vector<Interval> close_up(std::span<const Interval> intervals) {
  std::vector<Interval> merged;
  for (const Interval* in : sorted_by_lower(intervals)) {
    if (!merged.empty() && connects(merged.back().upper, in->lower)) {
      if (upper_before(merged.back().upper, in->upper)) merged.back().upper = in->upper;
      continue;
    }
    merged.push_back(*in);
  }
  for (auto& in : merged) {
    if (in.lower.finite()) in.lower.kind = BoundKind::Closed;
    if (in.upper.finite()) in.upper.kind = BoundKind::Closed;
  }
  return merged;
}

}  // namespace calc
