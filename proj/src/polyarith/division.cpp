#include <map>
#include <stdexcept>

#include "calc/polynomial.hpp"
#include "recursive.hpp"

namespace calc {

namespace {

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

}  // namespace

bool divides(const Polynomial& d, const Polynomial& p, Polynomial* quotient) {
  if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (d.num_vars() != p.num_vars())
    throw std::invalid_argument("polynomial arithmetic across different variable counts");
  const std::size_t n = p.num_vars();
  if (p.is_zero()) {
    if (quotient) *quotient = Polynomial(n);
    return true;
  }
  if (d.is_constant()) {
    if (quotient) *quotient = p * Rational(1 / d.constant_value());
    return true;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (d.degree(v) > p.degree(v)) return false;

  const Term& lead = d.terms()[0];
  std::map<Monomial, Rational, GrlexGreater> rem;
  for (const auto& t : p.terms()) rem.emplace(t.exponents, t.coeff);
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    Monomial m(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (it->first[k] < lead.exponents[k]) return false;
      m[k] = it->first[k] - lead.exponents[k];
    }
    const Rational c = it->second / lead.coeff;
    rem.erase(it);
    for (std::size_t i = 1; i < d.terms().size(); ++i) {
      const Term& t = d.terms()[i];
      Monomial e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = m[k] + t.exponents[k];
      auto [pos, inserted] = rem.try_emplace(std::move(e), 0);
      pos->second -= c * t.coeff;
      if (sgn(pos->second) == 0) rem.erase(pos);
    }
    quot.push_back(Term{std::move(m), c});
  }
  if (quotient) *quotient = Polynomial::from_terms(n, std::move(quot));
  return true;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
  Polynomial q;
  if (!divides(d, p, &q)) throw std::domain_error("inexact polynomial division");
  return q;
}

namespace detail {

RPoly prem(const RPoly& a, const RPoly& b) {
  if (b.empty()) throw std::invalid_argument("pseudo-remainder by zero");
  RPoly r = a;
  trim(r);
  const int db = rdeg(b);
  int e = rdeg(r) - db + 1;
  if (e < 0) e = 0;
  const Polynomial& lb = b.back();
  while (!r.empty() && rdeg(r) >= db) {
    const Polynomial lr = r.back();
    const int s = rdeg(r) - db;
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[i + s] -= lr * b[i];
    r.pop_back();
    trim(r);
    --e;
  }
  if (e > 0 && !r.empty()) {
    const Polynomial f = pow(lb, static_cast<unsigned>(e));
    for (auto& c : r) c *= f;
  }
  return r;
}

}  // namespace detail

Polynomial pseudo_remainder(const Polynomial& p, const Polynomial& d, std::size_t var) {
  auto a = coefficients_by_degree(p, var);
  auto b = coefficients_by_degree(d, var);
  detail::trim(a);
  detail::trim(b);
  auto r = detail::prem(a, b);
  if (r.empty()) return Polynomial(p.num_vars());
  return from_coefficients_by_degree(r, var);
}

}  // namespace calc
