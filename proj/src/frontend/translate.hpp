#pragma once

#include <string>
#include <vector>

#include "calc/smtlib.hpp"

namespace calc::smtlib {

/// Constraints of one asserted term over variables[0..num_vars), all of
/// which must already be declared. Throws ParseError.
std::vector<Constraint> translate_assertion(const SExpr& term, const std::vector<std::string>& variables,
                                            std::size_t num_vars);

/// Symbols with a fixed meaning in the supported slice.
bool is_reserved(const std::string& name);

}  // namespace calc::smtlib
