#include <stdexcept>
#include <utility>

#include "calc/polynomial.hpp"
#include "recursive.hpp"

namespace calc {

using detail::RPoly;
using detail::rdeg;

namespace {

Polynomial one(std::size_t n) { return Polynomial::constant(n, Rational(1)); }

// Subresultant PRS on the recursive representation (no content removal).
Polynomial subresultant(RPoly a, RPoly b, std::size_t n) {
  bool negate = false;
  if (rdeg(a) < rdeg(b)) {
    if ((rdeg(a) % 2 == 1) && (rdeg(b) % 2 == 1)) negate = true;
    std::swap(a, b);
  }
  Polynomial g = one(n);
  Polynomial h = one(n);
  while (rdeg(b) > 0) {
    const int delta = rdeg(a) - rdeg(b);
    if ((rdeg(a) % 2 == 1) && (rdeg(b) % 2 == 1)) negate = !negate;
    RPoly r = detail::prem(a, b);
    if (r.empty()) return Polynomial(n);
    a = std::move(b);
    const Polynomial div = g * pow(h, static_cast<unsigned>(delta));
    for (auto& c : r) c = divide_exact(c, div);
    b = std::move(r);
    g = a.back();
    if (delta > 0) h = divide_exact(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
  }
  // b is a nonzero constant in the variable.
  const unsigned da = static_cast<unsigned>(rdeg(a));
  Polynomial res = da == 0 ? one(n) : divide_exact(pow(b[0], da), pow(h, da - 1));
  return negate ? -res : res;
}

}  // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t var) {
  if (p.num_vars() != q.num_vars())
    throw std::invalid_argument("polynomial arithmetic across different variable counts");
  if (p.degree(var) == 0 || q.degree(var) == 0)
    throw std::invalid_argument("resultant needs positive degree in the variable");
  auto a = coefficients_by_degree(p, var);
  auto b = coefficients_by_degree(q, var);
  return subresultant(std::move(a), std::move(b), p.num_vars());
}

Polynomial discriminant(const Polynomial& p, std::size_t var) {
  const unsigned m = p.degree(var);
  if (m < 2) throw std::invalid_argument("discriminant needs degree at least 2");
  const Polynomial r = resultant(p, derivative(p, var), var);
  const Polynomial lc = coefficients_by_degree(p, var).back();
  Polynomial d = divide_exact(r, lc);
  if ((m * (m - 1) / 2) % 2 == 1) d = -d;
  return d;
}

}  // namespace calc
