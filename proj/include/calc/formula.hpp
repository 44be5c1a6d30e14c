#pragma once

#include <string>
#include <vector>

#include "calc/polynomial.hpp"
#include "calc/rational.hpp"

namespace calc {

enum class Relation { Lt, Le, Eq, Ne, Ge, Gt };

bool is_strict(Relation r);
/// Whether "value ~ 0" holds for a value of the given sign.
bool holds(Relation r, Sign s);
/// The relation of the negated atom: not(p < 0) is p >= 0.
Relation complement(Relation r);
/// The relation after multiplying both sides by -1.
Relation flip(Relation r);
/// "<", "<=", "=", "distinct", ">=", ">".
std::string relation_symbol(Relation r);

struct Constraint {
  Polynomial poly;
  Relation relation = Relation::Lt;

  bool strict() const { return is_strict(relation); }
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Conjunction of polynomial constraints over ordered variables.
struct Formula {
  std::vector<std::string> variables;
  std::vector<Constraint> constraints;

  std::size_t num_vars() const { return variables.size(); }
  /// Throws std::invalid_argument on an empty variable list, a zero
  /// polynomial, or a polynomial over a different number of variables.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// 1-based level a constraint is decided at: its highest variable, or 1 for
/// constants.
std::size_t level_of(const Constraint& c);

}  // namespace calc
