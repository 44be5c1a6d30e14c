#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "calc/solver.hpp"

namespace calc {

struct StatsReport {
  std::string instance;
  std::string variant;
  std::string verdict;  // "sat", "unsat" or "error"
  double time_ms = 0;
  Stats stats;

  /// Derived cells with a closed flag among all derived cells; 0 without any.
  double closed_ratio() const;
  /// max_closed_depth / max_depth; 0 when max_depth is 0.
  double relative_max_closed_depth() const;

  nlohmann::json to_json() const;
  static StatsReport from_json(const nlohmann::json& j);
  /// Columns of csv_row, without the agreement column.
  static std::string csv_header();
  std::string csv_row() const;
};

}  // namespace calc
