#pragma once

#include <span>
#include <string>

#include "calc/formula.hpp"
#include "calc/real_algebraic.hpp"

namespace calc::smtlib {

/// "3", "(- 3)", "(/ 1 2)", "(- (/ 1 2))".
std::string print_rational(const Rational& r);
/// Polynomial term over the given variable names.
std::string print_term(const Polynomial& p, std::span<const std::string> names);
/// "(< p 0)" and friends; "(distinct p 0)" for disequality.
std::string print_constraint(const Constraint& c, std::span<const std::string> names);
/// Complete script: logic, declarations, assertions, check-sat.
std::string print_script(const Formula& f, bool get_model = false);

/// Rational literal, or (root-of <poly in ?x> (<lo> <hi>)) for irrational values.
std::string print_value(const RealAlgebraicNumber& v);
/// get-model response: one define-fun per variable.
std::string print_model(const Formula& f, const SamplePoint& model);

/// Symbol as written in a script, quoted with |...| when needed.
std::string print_symbol(const std::string& name);

}  // namespace calc::smtlib
