#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "calc/covering.hpp"
#include "calc/formula.hpp"

namespace calc {

/// Base: plain covering search. Closed: closed-flag propagation and closed
/// bounds. ClosedHeuristic: Closed plus covering selection that tries the
/// closed cells first.
enum class Variant { Base, Closed, ClosedHeuristic };

std::string to_string(Variant v);
/// Accepts "base", "closed", "closed-heuristic".
std::optional<Variant> parse_variant(std::string_view s);
inline bool uses_flags(Variant v) { return v != Variant::Base; }

struct Stats {
  /// Samples picked on each level, level 1 first.
  std::vector<std::size_t> samples_per_level;
  /// Cells generalized from coverings, and those among them with a closed flag.
  std::size_t cells_created = 0;
  std::size_t cells_closed = 0;
  /// Over all cells, constraint cells included.
  unsigned max_depth = 0;
  unsigned max_closed_depth = 0;
  std::size_t characterization_calls = 0;

  friend bool operator==(const Stats&, const Stats&) = default;
};

struct SolveResult {
  bool sat = false;
  SamplePoint model;
  /// Level-1 covering of an unsat answer.
  std::vector<CellRep> covering;
  /// Every cell generalized from a covering, in creation order.
  std::vector<CellRep> derived;
  Stats stats;
};

/// Lets a caller choose a sample instead of sample_outside. Returning a value
/// inside one of the cells is a usage error.
using SampleHook = std::function<std::optional<RealAlgebraicNumber>(
    std::size_t level, const SamplePoint& prefix, std::span<const CellRep> cells)>;

struct SolveOptions {
  SampleHook sample_hook;
};

/// Cells on the x_i line (i = |s| + 1) where a constraint of level i is false.
std::vector<CellRep> get_unsat_intervals(const Formula& f, const SamplePoint& s, Variant variant);

/// Polynomials in x1..x_{i-1} over whose sign-invariant cell around s the
/// selected covering of the x_i line persists.
std::vector<Polynomial> construct_characterization(std::span<const CellRep> selected,
                                                   const SamplePoint& s);

/// The cell around (s, s_last) cut out by the roots of P on the line of
/// s_last.
CellRep interval_from_characterization(const std::vector<Polynomial>& P, const SamplePoint& s,
                                       const RealAlgebraicNumber& s_last,
                                       std::span<const CellRep> parents, Variant variant);

SolveResult solve(const Formula& f, Variant variant, const SolveOptions& options = {});

}  // namespace calc
