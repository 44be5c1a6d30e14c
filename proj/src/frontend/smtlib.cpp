#include <cctype>
#include <map>

#include "calc/smtlib.hpp"
#include "translate.hpp"

namespace calc::smtlib {

ParseError::ParseError(Position at, const std::string& message)
    : std::runtime_error(std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + message),
      at_(at),
      message_(message) {}

namespace {

bool symbol_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || std::string_view("~!@$%^&*_-+=<>.?/").find(c) != std::string_view::npos;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    skip();
    while (i_ < text_.size()) {
      out.push_back(read());
      skip();
    }
    return out;
  }

 private:
  char peek() const { return text_[i_]; }

  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip() {
    while (i_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == ';') {
        while (i_ < text_.size() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  SExpr read() {
    SExpr e;
    e.at = pos_;
    const char c = peek();
    if (c == ')') throw ParseError(pos_, "unexpected ')'");
    if (c == '(') {
      advance();
      e.kind = SExpr::Kind::List;
      skip();
      while (true) {
        if (i_ >= text_.size()) throw ParseError(e.at, "unbalanced '('");
        if (peek() == ')') break;
        e.items.push_back(read());
        skip();
      }
      advance();
      return e;
    }
    if (c == '"') {
      e.kind = SExpr::Kind::String;
      advance();
      while (true) {
        if (i_ >= text_.size()) throw ParseError(e.at, "unterminated string literal");
        if (peek() == '"') {
          advance();
          if (i_ < text_.size() && peek() == '"') {
            e.text += '"';
            advance();
            continue;
          }
          break;
        }
        e.text += peek();
        advance();
      }
      return e;
    }
    if (c == '|') {
      e.kind = SExpr::Kind::Symbol;
      advance();
      while (true) {
        if (i_ >= text_.size()) throw ParseError(e.at, "unterminated quoted symbol");
        if (peek() == '|') break;
        if (peek() == '\\') throw ParseError(pos_, "backslash in quoted symbol");
        e.text += peek();
        advance();
      }
      advance();
      return e;
    }
    if (c == '#') throw ParseError(pos_, "hexadecimal and binary literals are not supported");
    if (c == ':') {
      e.kind = SExpr::Kind::Keyword;
      advance();
      while (i_ < text_.size() && symbol_char(peek())) {
        e.text += peek();
        advance();
      }
      if (e.text.empty()) throw ParseError(e.at, "empty keyword");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      e.kind = SExpr::Kind::Numeral;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        e.text += peek();
        advance();
      }
      if (i_ < text_.size() && peek() == '.') {
        e.kind = SExpr::Kind::Decimal;
        e.text += '.';
        advance();
        const auto digits = e.text.size();
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
          e.text += peek();
          advance();
        }
        if (e.text.size() == digits) throw ParseError(e.at, "malformed decimal '" + e.text + "'");
      }
      if (i_ < text_.size() && symbol_char(peek()))
        throw ParseError(pos_, "unexpected character '" + std::string(1, peek()) + "' in number");
      return e;
    }
    if (!symbol_char(c)) throw ParseError(pos_, "unexpected character '" + std::string(1, c) + "'");
    e.kind = SExpr::Kind::Symbol;
    while (i_ < text_.size() && symbol_char(peek())) {
      e.text += peek();
      advance();
    }
    return e;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Position pos_;
};

const std::string& head_of(const SExpr& e) {
  static const std::string none;
  if (!e.is_list() || e.items.empty() || e.items[0].kind != SExpr::Kind::Symbol) return none;
  return e.items[0].text;
}

void expect_arity(const SExpr& cmd, std::size_t n) {
  if (cmd.items.size() != n + 1)
    throw ParseError(cmd.at, "'" + head_of(cmd) + "' expects " + std::to_string(n) + " argument(s)");
}

const std::string& symbol_arg(const SExpr& cmd, std::size_t k, const char* what) {
  const auto& a = cmd.items[k];
  if (a.kind != SExpr::Kind::Symbol) throw ParseError(a.at, std::string("expected ") + what);
  return a.text;
}

void expect_real_sort(const SExpr& sort) {
  if (!sort.is_symbol("Real"))
    throw ParseError(sort.at, "unsupported sort" + (sort.is_list() ? std::string() : " '" + sort.text + "'") +
                                  ", only Real is supported");
}

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).all(); }

Rational literal_value(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(Integer(std::string(text), 10));
  const std::string whole(text.substr(0, dot));
  const std::string frac(text.substr(dot + 1));
  Integer den = 1;
  for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
  return make_rational(Integer(whole + frac, 10), den);
}

bool SourceScript::has_check_sat() const {
  for (const auto& c : commands)
    if (c.kind == Command::Kind::CheckSat) return true;
  return false;
}

bool SourceScript::wants_model() const {
  for (const auto& c : commands)
    if (c.kind == Command::Kind::GetModel) return true;
  return false;
}

SourceScript parse(std::string_view text) {
  SourceScript script;
  std::map<std::string, Position> declared;
  bool checked = false;
  for (const auto& cmd : read_sexprs(text)) {
    const auto& head = head_of(cmd);
    if (head.empty()) throw ParseError(cmd.at, "expected a command");
    Command c{Command::Kind::Exit, cmd.at, {}, {}};
    if (head == "set-logic") {
      expect_arity(cmd, 1);
      c.kind = Command::Kind::SetLogic;
      c.name = symbol_arg(cmd, 1, "a logic name");
      if (c.name != "QF_NRA") throw ParseError(cmd.items[1].at, "unsupported logic '" + c.name + "'");
      for (const auto& prev : script.commands)
        if (prev.kind != Command::Kind::SetInfo && prev.kind != Command::Kind::SetOption)
          throw ParseError(cmd.at, "set-logic must precede declarations and assertions");
    } else if (head == "set-info" || head == "set-option") {
      if (cmd.items.size() < 2 || cmd.items[1].kind != SExpr::Kind::Keyword)
        throw ParseError(cmd.at, "'" + head + "' expects a keyword");
      c.kind = head == "set-info" ? Command::Kind::SetInfo : Command::Kind::SetOption;
    } else if (head == "declare-fun" || head == "declare-const") {
      c.kind = Command::Kind::Declare;
      if (head == "declare-fun") {
        expect_arity(cmd, 3);
        if (!cmd.items[2].is_list()) throw ParseError(cmd.items[2].at, "expected an argument sort list");
        if (!cmd.items[2].items.empty())
          throw ParseError(cmd.items[2].at, "functions with arguments are not supported");
        expect_real_sort(cmd.items[3]);
      } else {
        expect_arity(cmd, 2);
        expect_real_sort(cmd.items[2]);
      }
      c.name = symbol_arg(cmd, 1, "a symbol");
      if (is_reserved(c.name)) throw ParseError(cmd.items[1].at, "cannot declare reserved symbol '" + c.name + "'");
      if (!declared.emplace(c.name, cmd.items[1].at).second)
        throw ParseError(cmd.items[1].at, "symbol '" + c.name + "' already declared");
      if (checked) throw ParseError(cmd.at, "declarations after check-sat are not supported");
      script.variables.push_back(c.name);
    } else if (head == "assert") {
      expect_arity(cmd, 1);
      if (checked) throw ParseError(cmd.at, "assertions after check-sat are not supported");
      c.kind = Command::Kind::Assert;
      c.term = cmd.items[1];
    } else if (head == "check-sat") {
      expect_arity(cmd, 0);
      if (checked) throw ParseError(cmd.at, "more than one check-sat");
      checked = true;
      c.kind = Command::Kind::CheckSat;
    } else if (head == "get-model") {
      expect_arity(cmd, 0);
      if (!checked) throw ParseError(cmd.at, "get-model before check-sat");
      c.kind = Command::Kind::GetModel;
    } else if (head == "exit") {
      expect_arity(cmd, 0);
      script.commands.push_back(c);
      break;
    } else {
      throw ParseError(cmd.at, "unsupported command '" + head + "'");
    }
    if (c.kind == Command::Kind::Assert) {
      // Sort and structure check against the symbols declared so far.
      translate_assertion(c.term, script.variables, script.variables.size());
    }
    script.commands.push_back(std::move(c));
  }
  return script;
}

}  // namespace calc::smtlib
