#include <map>
#include <set>

#include "calc/smtlib.hpp"
#include "translate.hpp"

namespace calc::smtlib {

namespace {

// A conjunction; atoms are the only Boolean values `not` may apply to.
struct BoolValue {
  std::vector<Constraint> conj;
  bool atom = false;
};

struct Value {
  bool is_bool = false;
  Polynomial poly;
  BoolValue b;
};

const std::set<std::string, std::less<>> kComparisons = {"<", "<=", ">", ">=", "=", "distinct"};
const std::set<std::string, std::less<>> kNonConjunctive = {"or", "=>", "xor", "ite"};

class Translator {
 public:
  Translator(const std::vector<std::string>& variables, std::size_t n) : n_(n) {
    for (std::size_t i = 0; i < variables.size(); ++i) vars_.emplace(variables[i], i);
  }

  std::vector<Constraint> assertion(const SExpr& e) {
    auto v = eval(e);
    if (!v.is_bool) throw ParseError(e.at, "assertion must be Boolean");
    return std::move(v.b.conj);
  }

 private:
  static BoolValue truth(bool value) {
    BoolValue b;
    b.atom = true;
    if (!value) b.conj.push_back(false_constraint());
    return b;
  }

  static Constraint false_constraint() { return {Polynomial::constant(0, 1), Relation::Lt}; }

  Constraint finish(Constraint c) const {
    if (c.poly.num_vars() != n_) c.poly = c.poly.is_zero() ? Polynomial(n_) : Polynomial::constant(n_, c.poly.constant_value());
    return c;
  }

  // Constant atoms fold to true or false.
  BoolValue atom(Polynomial p, Relation r) {
    if (p.is_constant()) {
      const auto folded = truth(holds(r, sign_of(p.constant_value())));
      BoolValue b = folded;
      for (auto& c : b.conj) c = finish(c);
      return b;
    }
    BoolValue b;
    b.atom = true;
    b.conj.push_back({std::move(p), r});
    return b;
  }

  Polynomial real(const SExpr& e) {
    auto v = eval(e);
    if (v.is_bool) throw ParseError(e.at, "expected a Real term, found a Boolean one");
    return std::move(v.poly);
  }

  BoolValue boolean(const SExpr& e) {
    auto v = eval(e);
    if (!v.is_bool) throw ParseError(e.at, "expected a Boolean term, found a Real one");
    return std::move(v.b);
  }

  static Value of(Polynomial p) { return Value{false, std::move(p), {}}; }
  static Value of(BoolValue b) { return Value{true, {}, std::move(b)}; }

  Value symbol(const SExpr& e) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(e.text);
      if (f != it->end()) return f->second;
    }
    if (e.text == "true") return of(truth(true));
    if (e.text == "false") {
      auto b = truth(false);
      b.conj[0] = finish(b.conj[0]);
      return of(std::move(b));
    }
    auto v = vars_.find(e.text);
    if (v == vars_.end()) throw ParseError(e.at, "undeclared symbol '" + e.text + "'");
    return of(Polynomial::variable(n_, v->second));
  }

  Value eval(const SExpr& e) {
    switch (e.kind) {
      case SExpr::Kind::Numeral:
      case SExpr::Kind::Decimal:
        return of(Polynomial::constant(n_, literal_value(e.text)));
      case SExpr::Kind::Symbol:
        return symbol(e);
      case SExpr::Kind::String:
        throw ParseError(e.at, "string literals are not supported");
      case SExpr::Kind::Keyword:
        throw ParseError(e.at, "unexpected keyword ':" + e.text + "'");
      case SExpr::Kind::List:
        break;
    }
    if (e.items.empty()) throw ParseError(e.at, "empty application");
    const auto& head = e.items[0];
    if (head.kind != SExpr::Kind::Symbol) throw ParseError(head.at, "expected a function symbol");
    const std::string& op = head.text;
    const std::size_t argc = e.items.size() - 1;
    auto need = [&](std::size_t lo) {
      if (argc < lo) throw ParseError(e.at, "'" + op + "' expects at least " + std::to_string(lo) + " argument(s)");
    };

    if (op == "!") {
      need(1);
      return eval(e.items[1]);
    }
    if (op == "let") {
      if (argc != 2 || !e.items[1].is_list()) throw ParseError(e.at, "malformed let");
      std::map<std::string, Value> scope;
      for (const auto& binding : e.items[1].items) {
        if (!binding.is_list() || binding.items.size() != 2 || binding.items[0].kind != SExpr::Kind::Symbol)
          throw ParseError(binding.at, "malformed let binding");
        if (!scope.emplace(binding.items[0].text, eval(binding.items[1])).second)
          throw ParseError(binding.at, "duplicate let binding '" + binding.items[0].text + "'");
      }
      scopes_.push_back(std::move(scope));
      auto body = eval(e.items[2]);
      scopes_.pop_back();
      return body;
    }
    if (kNonConjunctive.count(op)) throw ParseError(head.at, "non-conjunctive structure ('" + op + "') is not supported");
    if (op == "and") {
      BoolValue out;
      for (std::size_t k = 1; k <= argc; ++k) {
        auto b = boolean(e.items[k]);
        out.conj.insert(out.conj.end(), b.conj.begin(), b.conj.end());
        out.atom = argc == 1 && b.atom;
      }
      return of(std::move(out));
    }
    if (op == "not") {
      if (argc != 1) throw ParseError(e.at, "'not' expects 1 argument");
      auto b = boolean(e.items[1]);
      if (!b.atom) throw ParseError(e.items[1].at, "'not' applied to a non-atomic formula is not supported");
      if (b.conj.empty()) return symbol(SExpr{SExpr::Kind::Symbol, "false", {}, e.at});
      auto c = b.conj[0];
      if (c.poly.is_constant()) return of(truth(true));
      return of(atom(std::move(c.poly), complement(c.relation)));
    }
    if (kComparisons.count(op)) {
      need(2);
      std::vector<Polynomial> args;
      for (std::size_t k = 1; k <= argc; ++k) {
        auto v = eval(e.items[k]);
        if (v.is_bool) throw ParseError(e.items[k].at, "'" + op + "' over Boolean terms is not supported");
        args.push_back(std::move(v.poly));
      }
      BoolValue out;
      auto add = [&](BoolValue b) { out.conj.insert(out.conj.end(), b.conj.begin(), b.conj.end()); };
      if (op == "distinct") {
        for (std::size_t a = 0; a < args.size(); ++a)
          for (std::size_t b = a + 1; b < args.size(); ++b) add(atom(args[a] - args[b], Relation::Ne));
      } else {
        const Relation r = op == "<"    ? Relation::Lt
                           : op == "<=" ? Relation::Le
                           : op == ">"  ? Relation::Gt
                           : op == ">=" ? Relation::Ge
                                        : Relation::Eq;
        for (std::size_t a = 0; a + 1 < args.size(); ++a) add(atom(args[a] - args[a + 1], r));
      }
      out.atom = args.size() == 2;
      return of(std::move(out));
    }
    if (op == "+" || op == "*") {
      need(1);
      Polynomial acc = real(e.items[1]);
      for (std::size_t k = 2; k <= argc; ++k) {
        if (op == "+") {
          acc += real(e.items[k]);
        } else {
          acc *= real(e.items[k]);
        }
      }
      return of(std::move(acc));
    }
    if (op == "-") {
      need(1);
      Polynomial acc = real(e.items[1]);
      if (argc == 1) return of(-acc);
      for (std::size_t k = 2; k <= argc; ++k) acc -= real(e.items[k]);
      return of(std::move(acc));
    }
    if (op == "/") {
      need(2);
      Polynomial acc = real(e.items[1]);
      for (std::size_t k = 2; k <= argc; ++k) {
        const auto d = real(e.items[k]);
        if (!d.is_constant()) throw ParseError(e.items[k].at, "division by a non-constant term is not supported");
        if (d.is_zero()) throw ParseError(e.items[k].at, "division by zero");
        acc *= Rational(1 / d.constant_value());
      }
      return of(std::move(acc));
    }
    throw ParseError(head.at, "unsupported function '" + op + "'");
  }

  std::size_t n_;
  std::map<std::string, std::size_t> vars_;
  std::vector<std::map<std::string, Value>> scopes_;
};

}  // namespace

bool is_reserved(const std::string& name) {
  static const std::set<std::string, std::less<>> reserved = {
      "true", "false", "and", "or", "not", "=>", "xor", "ite", "let", "!", "+", "-", "*", "/",
      "<",    "<=",    ">",   ">=", "=",   "distinct"};
  return reserved.count(name) > 0;
}

std::vector<Constraint> translate_assertion(const SExpr& term, const std::vector<std::string>& variables,
                                            std::size_t num_vars) {
  return Translator(variables, num_vars).assertion(term);
}

Formula desugar(const SourceScript& script) {
  Formula f;
  f.variables = script.variables;
  for (const auto& c : script.commands) {
    if (c.kind != Command::Kind::Assert) continue;
    auto cs = translate_assertion(c.term, script.variables, script.variables.size());
    f.constraints.insert(f.constraints.end(), cs.begin(), cs.end());
  }
  if (f.variables.empty()) throw ParseError({}, "no variables declared");
  return f;
}

}  // namespace calc::smtlib
