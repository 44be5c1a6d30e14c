#include <stdexcept>

#include "calc/formula.hpp"

namespace calc {

bool is_strict(Relation r) { return r == Relation::Lt || r == Relation::Gt || r == Relation::Ne; }

bool holds(Relation r, Sign s) {
  switch (r) {
    case Relation::Lt:
      return s == Sign::Negative;
    case Relation::Le:
      return s != Sign::Positive;
    case Relation::Eq:
      return s == Sign::Zero;
    case Relation::Ne:
      return s != Sign::Zero;
    case Relation::Ge:
      return s != Sign::Negative;
    case Relation::Gt:
      return s == Sign::Positive;
  }
  return false;
}

Relation complement(Relation r) {
  switch (r) {
    case Relation::Lt:
      return Relation::Ge;
    case Relation::Le:
      return Relation::Gt;
    case Relation::Eq:
      return Relation::Ne;
    case Relation::Ne:
      return Relation::Eq;
    case Relation::Ge:
      return Relation::Lt;
    case Relation::Gt:
      return Relation::Le;
  }
  return r;
}

Relation flip(Relation r) {
  switch (r) {
    case Relation::Lt:
      return Relation::Gt;
    case Relation::Le:
      return Relation::Ge;
    case Relation::Ge:
      return Relation::Le;
    case Relation::Gt:
      return Relation::Lt;
    default:
      return r;
  }
}

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::Lt:
      return "<";
    case Relation::Le:
      return "<=";
    case Relation::Eq:
      return "=";
    case Relation::Ne:
      return "distinct";
    case Relation::Ge:
      return ">=";
    case Relation::Gt:
      return ">";
  }
  return "?";
}

void Formula::validate() const {
  if (variables.empty()) throw std::invalid_argument("formula without variables");
  for (const auto& c : constraints) {
    if (c.poly.num_vars() != variables.size())
      throw std::invalid_argument("constraint over undeclared variables");
    if (c.poly.is_zero()) throw std::invalid_argument("constraint with zero polynomial");
  }
}

std::string Formula::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (i) out += " /\\ ";
    const auto& c = constraints[i];
    const std::string sym = c.relation == Relation::Ne ? "!=" : relation_symbol(c.relation);
    out += c.poly.to_string(variables) + " " + sym + " 0";
  }
  return out;
}

std::size_t level_of(const Constraint& c) {
  const int v = c.poly.main_var();
  return v < 0 ? 1 : static_cast<std::size_t>(v) + 1;
}

}  // namespace calc
