#pragma once

#include <vector>

#include "calc/polynomial.hpp"

namespace calc::detail {

/// Polynomial viewed as univariate in one variable: coefficients indexed by
/// degree, no trailing zero coefficients (the zero polynomial is empty).
using RPoly = std::vector<Polynomial>;

inline void trim(RPoly& r) {
  while (!r.empty() && r.back().is_zero()) r.pop_back();
}

inline int rdeg(const RPoly& r) { return static_cast<int>(r.size()) - 1; }

/// lc(b)^(deg a - deg b + 1) * a mod b.
RPoly prem(const RPoly& a, const RPoly& b);

}  // namespace calc::detail
