#include <cctype>
#include <sstream>

#include "calc/printer.hpp"
#include "translate.hpp"

namespace calc::smtlib {

std::string print_rational(const Rational& r) {
  const Rational a = abs(r);
  std::string s = a.get_den() == 1 ? a.get_num().get_str() : "(/ " + a.get_num().get_str() + " " + a.get_den().get_str() + ")";
  return r < 0 ? "(- " + s + ")" : s;
}

std::string print_symbol(const std::string& name) {
  bool simple = !name.empty() && !std::isdigit(static_cast<unsigned char>(name[0])) && !is_reserved(name);
  for (char c : name)
    simple = simple && (std::isalnum(static_cast<unsigned char>(c)) ||
                        std::string_view("~!@$%^&*_-+=<>.?/").find(c) != std::string_view::npos);
  return simple ? name : "|" + name + "|";
}

std::string print_term(const Polynomial& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::vector<std::string> terms;
  for (const auto& t : p.terms()) {
    std::vector<std::string> factors;
    for (std::size_t v = 0; v < t.exponents.size(); ++v)
      for (std::uint32_t k = 0; k < t.exponents[v]; ++k) factors.push_back(print_symbol(names[v]));
    if (factors.empty()) {
      terms.push_back(print_rational(t.coeff));
      continue;
    }
    std::string mono = factors.size() == 1 ? factors[0] : "";
    auto product = [&](const std::string& first) {
      std::string s = "(*";
      if (!first.empty()) s += " " + first;
      for (const auto& f : factors) s += " " + f;
      return s + ")";
    };
    if (t.coeff == 1) {
      terms.push_back(factors.size() == 1 ? mono : product(""));
    } else if (t.coeff == -1) {
      terms.push_back("(- " + (factors.size() == 1 ? mono : product("")) + ")");
    } else {
      terms.push_back(product(print_rational(t.coeff)));
    }
  }
  if (terms.size() == 1) return terms[0];
  std::string s = "(+";
  for (const auto& t : terms) s += " " + t;
  return s + ")";
}

std::string print_constraint(const Constraint& c, std::span<const std::string> names) {
  return "(" + relation_symbol(c.relation) + " " + print_term(c.poly, names) + " 0)";
}

std::string print_script(const Formula& f, bool get_model) {
  std::ostringstream os;
  os << "(set-logic QF_NRA)\n";
  for (const auto& v : f.variables) os << "(declare-fun " << print_symbol(v) << " () Real)\n";
  for (const auto& c : f.constraints) os << "(assert " << print_constraint(c, f.variables) << ")\n";
  os << "(check-sat)\n";
  if (get_model) os << "(get-model)\n";
  return os.str();
}

std::string print_value(const RealAlgebraicNumber& v) {
  if (v.is_rational()) return print_rational(v.rational());
  const auto q = univariate::to_polynomial(univariate::to_rational(v.defining()), 1, 0);
  const std::string x = "?x";
  return "(root-of " + print_term(q, std::span(&x, 1)) + " (" + print_rational(v.lower()) + " " +
         print_rational(v.upper()) + "))";
}

std::string print_model(const Formula& f, const SamplePoint& model) {
  std::ostringstream os;
  os << "(\n";
  for (std::size_t i = 0; i < f.variables.size() && i < model.size(); ++i)
    os << "  (define-fun " << print_symbol(f.variables[i]) << " () Real " << print_value(model[i]) << ")\n";
  os << ")\n";
  return os.str();
}

}  // namespace calc::smtlib
