#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "calc/polynomial.hpp"
#include "calc/real_algebraic.hpp"

namespace calc {

enum class BoundKind { NegInf, PosInf, Open, Closed };

struct Bound {
  BoundKind kind = BoundKind::NegInf;
  RealAlgebraicNumber value;  // unused for infinite kinds

  static Bound neg_inf() { return Bound{BoundKind::NegInf, {}}; }
  static Bound pos_inf() { return Bound{BoundKind::PosInf, {}}; }
  static Bound open(RealAlgebraicNumber v) { return Bound{BoundKind::Open, std::move(v)}; }
  static Bound closed(RealAlgebraicNumber v) { return Bound{BoundKind::Closed, std::move(v)}; }

  bool finite() const { return kind == BoundKind::Open || kind == BoundKind::Closed; }
  bool is_closed() const { return kind == BoundKind::Closed; }
};

/// Non-empty subset of the real line.
struct Interval {
  Bound lower = Bound::neg_inf();
  Bound upper = Bound::pos_inf();

  static Interval whole() { return {}; }
  static Interval point(const RealAlgebraicNumber& v) { return {Bound::closed(v), Bound::closed(v)}; }

  bool is_point() const;
  bool contains(const RealAlgebraicNumber& x) const;
  /// Both finite ends closed (infinite ends count as closed).
  bool is_closed() const;
  /// "(-inf, ~-1.732]", "[1/2, 1/2]".
  std::string to_string() const;
  /// Exact rendering with algebraic endpoints spelled out.
  std::string to_exact_string() const;
};

bool operator==(const Bound& a, const Bound& b);
bool operator==(const Interval& a, const Interval& b);

/// Implicit UNSAT cell: the sign-invariant region of polys around sample,
/// traced on the line of its last coordinate.
struct CellRep {
  int id = 0;
  std::vector<Polynomial> polys;
  /// Members of polys vanishing at the lower / upper endpoint.
  std::vector<Polynomial> lower_polys, upper_polys;
  SamplePoint sample;
  Interval interval;
  bool closed_flag = false;
  unsigned depth = 1;
  /// Index of the originating constraint, or empty for derived cells.
  std::optional<std::size_t> constraint_index;
  std::vector<int> parents;

  std::size_t level() const { return sample.size(); }
};

enum class Heuristic { MinCount, ClosedFirst };

/// Uncovered parts of the line, ordered from left to right. A gap's bounds
/// say which endpoints belong to the gap.
std::vector<Interval> gaps(std::span<const Interval> intervals);

bool is_covering(std::span<const Interval> intervals);
bool is_covering(std::span<const CellRep> cells);

/// A point outside every interval, or empty when they cover the line.
/// Picks 0 if possible, else a gap (the leftmost one right of 0 first) and
/// within it the simplest rational; an algebraic number only for a gap that
/// is a single point.
std::optional<RealAlgebraicNumber> sample_outside(std::span<const Interval> intervals);
std::optional<RealAlgebraicNumber> sample_outside(std::span<const CellRep> cells);

/// The simplest rational inside a non-point interval.
Rational simplest_rational_in(const Interval& gap);

/**
 * Irredundant sub-covering ordered by lower bound.
 *
 * MinCount picks a covering of minimum cardinality; among those, the one
 * using the fewest distinct polynomials, then the one earliest in input
 * order. ClosedFirst first tries the same on the closed-flag cells only.
 * Throws std::invalid_argument if the cells do not cover the line.
 */
std::vector<CellRep> select_covering(std::span<const CellRep> cells, Heuristic h);

/// Closure of the unsat region of a strict constraint: runs of touching
/// intervals are merged and finite endpoints become closed.
std::vector<Interval> close_up(std::span<const Interval> intervals);

}  // namespace calc
