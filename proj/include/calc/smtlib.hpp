#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "calc/formula.hpp"

namespace calc::smtlib {

struct Position {
  int line = 1;
  int column = 1;
};

/// Rejected input; what() reads "line:column: message".
class ParseError : public std::runtime_error {
 public:
  ParseError(Position at, const std::string& message);
  Position position() const { return at_; }
  const std::string& message() const { return message_; }

 private:
  Position at_;
  std::string message_;
};

struct SExpr {
  enum class Kind { Symbol, Numeral, Decimal, String, Keyword, List };
  Kind kind = Kind::List;
  std::string text;  // atoms only
  std::vector<SExpr> items;
  Position at;

  bool is_list() const { return kind == Kind::List; }
  bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
};

/// All top-level s-expressions of the text.
std::vector<SExpr> read_sexprs(std::string_view text);

struct Command {
  enum class Kind { SetLogic, SetInfo, SetOption, Declare, Assert, CheckSat, GetModel, Exit };
  Kind kind;
  Position at;
  std::string name;  // logic or declared symbol
  SExpr term;        // assertion body
};

struct SourceScript {
  std::vector<Command> commands;
  std::vector<std::string> variables;  // declaration order

  bool has_check_sat() const;
  bool wants_model() const;
};

/// Checks the command structure, declarations and sorts.
SourceScript parse(std::string_view text);

/// The conjunction asserted before exit.
Formula desugar(const SourceScript& script);

inline Formula parse_formula(std::string_view text) { return desugar(parse(text)); }

/// Exact value of a numeral or decimal literal.
Rational literal_value(std::string_view text);

}  // namespace calc::smtlib
