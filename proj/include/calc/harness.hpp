#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "calc/report.hpp"
#include "calc/solver.hpp"

namespace calc {

struct FuzzOptions {
  /// Number of variables; 0 picks 2 or 3 at random.
  std::size_t vars = 0;
  unsigned degree = 3;
  std::size_t max_constraints = 3;
  int coefficient_range = 5;
};

/// Random conjunction with integer coefficients in [-range, range].
Formula random_formula(std::mt19937_64& rng, const FuzzOptions& options);

struct PinViolation {
  int cell_id = 0;
  std::size_t level = 0;
  std::string pin;  // human-readable pinned point
};

struct VerifyReport {
  bool unsat = false;
  std::size_t cells_checked = 0;
  std::size_t pins_checked = 0;
  std::vector<PinViolation> violations;
};

/// Solves f, and for an unsat answer re-solves with the generalized
/// variable of every covering cell pinned to an interior point and to each
/// closed finite endpoint (the lower coordinates pinned to the cell's
/// sample). Every pinned problem must be unsat.
VerifyReport run_verify(const Formula& f, Variant variant);
/// As above for an existing result.
VerifyReport verify_result(const Formula& f, const SolveResult& result);

/// f with x_var fixed to v (exactly, also for algebraic v). When the caller
/// also pins x_1.. to prefix and v is a root recorded over that prefix, v is
/// pinned through its origin polynomial, which keeps re-solving cheap.
Formula pin(const Formula& f, std::size_t var, const RealAlgebraicNumber& v,
            std::span<const RealAlgebraicNumber> prefix = {});

struct Instance {
  std::string name;
  Formula formula;
};

struct CompareOutcome {
  std::vector<StatsReport> rows;
  /// Instances on which the variants disagree.
  std::vector<std::string> disagreements;
};

/// Groups rows (instance-major, variants.size() per instance) and flags
/// instances whose verdicts differ; an "error" verdict differs from all.
CompareOutcome summarize(std::vector<StatsReport> rows, const std::vector<std::string>& names,
                         std::size_t variants);

/// Solves every instance under every variant, using up to jobs threads.
CompareOutcome run_compare(const std::vector<Instance>& instances, const std::vector<Variant>& variants,
                           unsigned jobs = 1);

/// Solves with timing and packages the statistics.
StatsReport solve_and_report(const std::string& name, const Formula& f, Variant variant,
                             SolveResult* result = nullptr);

}  // namespace calc
