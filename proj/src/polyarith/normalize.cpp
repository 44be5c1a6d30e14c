#include <algorithm>
#include <map>
#include <stdexcept>

#include "calc/polynomial.hpp"
#include "calc/upoly.hpp"
#include "recursive.hpp"

namespace calc {

namespace uni = univariate;
using detail::RPoly;
using detail::rdeg;

namespace {

Polynomial one(std::size_t n) { return Polynomial::constant(n, Rational(1)); }

// The only variable p involves, or -1 if it involves several (or none).
int sole_var(const Polynomial& p) {
  const int v = p.main_var();
  if (v < 0) return -1;
  return uni::is_univariate_in(p, static_cast<std::size_t>(v)) ? v : -1;
}

Polynomial rpoly_content(const RPoly& r, std::size_t n) {
  Polynomial g(n);
  for (const auto& c : r) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return one(n);
  }
  return g;
}

// Images of a and b under a substitution of every variable except v keep
// their degree in v; if those images are coprime, so are a and b (up to
// content). Returns true when coprimality was established this way.
bool coprime_by_evaluation(const RPoly& a, const RPoly& b, std::size_t v, std::size_t n) {
  static constexpr long kPoints[][3] = {{3, -2, 5}, {-7, 11, 2}};
  for (const auto& pt : kPoints) {
    std::vector<Rational> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = Rational(pt[i % 3] + static_cast<long>(i));
    auto image = [&](const RPoly& r) {
      uni::UPoly u(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) u[k] = evaluate(r[k], values);
      return u;
    };
    const auto ia = image(a), ib = image(b);
    if (sgn(ia.back()) == 0 || sgn(ib.back()) == 0) continue;
    return uni::degree(uni::gcd(ia, ib)) == 0;
  }
  return false;
}

void make_primitive(RPoly& r, std::size_t n) {
  const Polynomial c = rpoly_content(r, n);
  if (c.is_constant()) {
    const Rational l = r.back().leading_coefficient();
    for (auto& x : r) x *= Rational(1 / l);
    return;
  }
  for (auto& x : r) x = divide_exact(x, c);
}

}  // namespace

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero() || p.leading_coefficient() == 1) return p;
  return p * Rational(1 / p.leading_coefficient());
}

Polynomial gcd_univariate(const Polynomial& p, const Polynomial& q) {
  if (p.num_vars() != q.num_vars())
    throw std::invalid_argument("polynomial arithmetic across different variable counts");
  int v = std::max(p.main_var(), q.main_var());
  if (v < 0) return (p.is_zero() && q.is_zero()) ? p : one(p.num_vars());
  const auto var = static_cast<std::size_t>(v);
  return uni::to_polynomial(uni::gcd(uni::from_polynomial(p, var), uni::from_polynomial(q, var)),
                            p.num_vars(), var);
}

Polynomial content(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  if (p.degree(var) == 0) return make_monic(p);
  return rpoly_content(coefficients_by_degree(p, var), p.num_vars());
}

Polynomial univariate_content(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  std::map<Monomial, uni::UPoly, std::function<bool(const Monomial&, const Monomial&)>> groups(
      [](const Monomial& a, const Monomial& b) { return grlex_compare(a, b) < 0; });
  for (const auto& t : p.terms()) {
    Monomial key = t.exponents;
    const unsigned e = key[var];
    key[var] = 0;
    auto& u = groups[key];
    if (u.size() <= e) u.resize(e + 1);
    u[e] = t.coeff;
  }
  uni::UPoly g;
  for (auto& [key, u] : groups) {
    g = uni::gcd(g, u);
    if (uni::degree(g) == 0) return one(p.num_vars());
  }
  return uni::to_polynomial(g, p.num_vars(), var);
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.num_vars() != q.num_vars())
    throw std::invalid_argument("polynomial arithmetic across different variable counts");
  const std::size_t n = p.num_vars();
  if (p.is_zero()) return make_monic(q);
  if (q.is_zero()) return make_monic(p);
  if (p.is_constant() || q.is_constant()) return one(n);
  const int sp = sole_var(p);
  if (sp >= 0 && sp == sole_var(q)) return gcd_univariate(p, q);
  if (divides(p, q)) return make_monic(p);
  if (divides(q, p)) return make_monic(q);

  const auto v = static_cast<std::size_t>(std::max(p.main_var(), q.main_var()));
  if (p.degree(v) == 0) return gcd(p, content(q, v));
  if (q.degree(v) == 0) return gcd(content(p, v), q);

  const Polynomial cp = content(p, v);
  const Polynomial cq = content(q, v);
  const Polynomial gc = gcd(cp, cq);
  RPoly a = coefficients_by_degree(cp.is_constant() ? p : divide_exact(p, cp), v);
  RPoly b = coefficients_by_degree(cq.is_constant() ? q : divide_exact(q, cq), v);
  if (rdeg(a) < rdeg(b)) std::swap(a, b);
  if (coprime_by_evaluation(a, b, v, n)) return gc;
  while (true) {
    RPoly r = detail::prem(a, b);
    if (r.empty()) break;
    if (rdeg(r) == 0) return gc;
    make_primitive(r, n);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(b, n);
  return make_monic(gc * from_coefficients_by_degree(b, v));
}

std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  if (p.is_constant()) return out;
  const std::size_t n = p.num_vars();
  const auto v = static_cast<std::size_t>(p.main_var());
  if (uni::is_univariate_in(p, v)) {
    for (auto& [f, m] : uni::squarefree_decomposition(uni::from_polynomial(p, v)))
      out.emplace_back(uni::to_polynomial(f, n, v), m);
    return out;
  }
  const Polynomial c = content(p, v);
  if (!c.is_constant()) out = squarefree_decomposition(c);
  const Polynomial a = c.is_constant() ? p : divide_exact(p, c);
  const Polynomial d = derivative(a, v);
  const Polynomial g = gcd(a, d);
  Polynomial w = divide_exact(a, g);
  Polynomial y = divide_exact(d, g);
  Polynomial z = y - derivative(w, v);
  for (unsigned i = 1; w.degree(v) > 0; ++i) {
    const Polynomial h = gcd(w, z);
    if (h.degree(v) > 0) out.emplace_back(make_monic(h), i);
    w = divide_exact(w, h);
    y = divide_exact(z, h);
    z = y - derivative(w, v);
  }
  return out;
}

std::vector<Polynomial> normalize(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("normalize of the zero polynomial");
  std::vector<Polynomial> out;
  for (auto& [f, m] : squarefree_decomposition(p)) insert_sorted_unique(out, make_monic(f));
  return out;
}

std::vector<Polynomial> coprime_basis(std::vector<Polynomial> polys) {
  std::vector<Polynomial> basis;
  for (auto& p : polys)
    if (!p.is_constant()) insert_sorted_unique(basis, make_monic(p));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        const Polynomial g = gcd(basis[i], basis[j]);
        if (g.is_constant()) continue;
        const Polynomial a = divide_exact(basis[i], g);
        const Polynomial b = divide_exact(basis[j], g);
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        for (const auto* f : {&g, &a, &b})
          if (!f->is_constant()) insert_sorted_unique(basis, make_monic(*f));
        changed = true;
      }
    }
  }
  return basis;
}

}  // namespace calc
