#include "calc/upoly.hpp"

#include <cstdint>
#include <stdexcept>

namespace calc::univariate {

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

bool is_univariate_in(const Polynomial& p, std::size_t var) {
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (i != var && t.exponents[i]) return false;
  return true;
}

UPoly from_polynomial(const Polynomial& p, std::size_t var) {
  if (!is_univariate_in(p, var)) throw std::invalid_argument("polynomial is not univariate");
  UPoly out(p.is_zero() ? 0 : p.degree(var) + 1);
  for (const auto& t : p.terms()) out[var < t.exponents.size() ? t.exponents[var] : 0] = t.coeff;
  return out;
}

Polynomial to_polynomial(const UPoly& p, std::size_t num_vars, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (sgn(p[k]) == 0) continue;
    Monomial m(num_vars, 0);
    m[var] = static_cast<std::uint32_t>(k);
    terms.push_back(Term{std::move(m), p[k]});
  }
  return Polynomial::from_terms(num_vars, std::move(terms));
}

Rational eval(const UPoly& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t k = p.size(); k-- > 0;) {
    acc *= x;
    acc += p[k];
  }
  return acc;
}

UPoly derivative(const UPoly& p) {
  if (p.size() <= 1) return {};
  UPoly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<unsigned long>(k);
  return d;
}

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.empty()) throw std::invalid_argument("division by the zero polynomial");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t s = r.size() - b.size();
    const Rational c = r.back() / lb;
    q[s] = c;
    for (std::size_t k = 0; k < b.size(); ++k) r[s + k] -= c * b[k];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

UPoly quotient(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  return q;
}

UPoly monic(const UPoly& p) {
  if (p.empty()) return p;
  UPoly r = p;
  const Rational l = p.back();
  for (auto& c : r) c /= l;
  return r;
}

namespace {

using ModPoly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

std::uint64_t residue(const Integer& c, std::uint64_t p) {
  return mpz_fdiv_ui(c.get_mpz_t(), p);
}

ModPoly reduce(const ZPoly& a, std::uint64_t p) {
  ModPoly out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(residue(c, p));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Monic gcd over Z/p.
ModPoly gcd_mod(ModPoly x, ModPoly y, std::uint64_t p) {
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    const std::uint64_t inv = powmod(y.back(), p - 2, p);
    while (x.size() >= y.size()) {
      const std::uint64_t c = mulmod(x.back(), inv, p);
      const std::size_t s = x.size() - y.size();
      for (std::size_t k = 0; k < y.size(); ++k) x[s + k] = (x[s + k] + p - mulmod(c, y[k], p)) % p;
      while (!x.empty() && x.back() == 0) x.pop_back();
    }
    std::swap(x, y);
  }
  const std::uint64_t inv = powmod(x.back(), p - 2, p);
  for (auto& c : x) c = mulmod(c, inv, p);
  return x;
}

std::uint64_t prime_below(std::uint64_t n) {
  mpz_class c(static_cast<unsigned long>(n - 1));
  while (mpz_probab_prime_p(c.get_mpz_t(), 30) == 0) --c;
  return c.get_ui();
}

bool divides(const UPoly& d, const UPoly& a) {
  UPoly q, r;
  divmod(a, d, q, r);
  return r.empty();
}

// Modular gcd of two polynomials of positive degree: images modulo 61-bit
// primes of minimal degree, scaled to the gcd of the leading coefficients,
// combined by CRT until the symmetric lift divides both inputs.
UPoly modular_gcd(const UPoly& a, const UPoly& b) {
  const ZPoly A = primitive_integer(a), B = primitive_integer(b);
  const Integer gamma = gcd(A.back(), B.back());
  std::size_t best = std::min(A.size(), B.size());
  ZPoly acc, last;
  Integer modulus = 1;
  std::uint64_t p = std::uint64_t{1} << 61;
  for (;;) {
    p = prime_below(p);
    if (residue(A.back(), p) == 0 || residue(B.back(), p) == 0) continue;
    ModPoly g = gcd_mod(reduce(A, p), reduce(B, p), p);
    if (g.size() == 1) return {Rational(1)};
    if (g.size() > best) continue;
    if (g.size() < best || acc.empty()) {
      best = g.size();
      acc.assign(g.size(), Integer(0));
      modulus = 1;
      last.clear();
    }
    const std::uint64_t scale = residue(gamma, p);
    const std::uint64_t inv_m = powmod(residue(modulus, p), p - 2, p);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::uint64_t gi = mulmod(g[i], scale, p);
      const std::uint64_t ai = residue(acc[i], p);
      const std::uint64_t t = mulmod((gi + p - ai) % p, inv_m, p);
      acc[i] += modulus * Integer(static_cast<unsigned long>(t));
    }
    modulus *= Integer(static_cast<unsigned long>(p));
    const Integer half = modulus / 2;
    ZPoly lifted = acc;
    for (auto& c : lifted)
      if (c > half) c -= modulus;
    if (lifted != last) {
      last = std::move(lifted);
      continue;
    }
    const UPoly candidate = monic(to_rational(last));
    if (divides(candidate, a) && divides(candidate, b)) return candidate;
  }
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  trim(x);
  trim(y);
  if (degree(x) > 0 && degree(y) > 0) return modular_gcd(x, y);
  while (!y.empty()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

UPoly squarefree_part(const UPoly& p) {
  if (p.size() <= 1) return monic(p);
  return monic(quotient(p, gcd(p, derivative(p))));
}

std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& p) {
  std::vector<std::pair<UPoly, unsigned>> out;
  if (p.size() <= 1) return out;
  const UPoly d = derivative(p);
  const UPoly g = gcd(p, d);
  UPoly w = quotient(p, g);
  UPoly y = quotient(d, g);
  UPoly z = sub(y, derivative(w));
  for (unsigned i = 1; degree(w) > 0; ++i) {
    const UPoly h = gcd(w, z);
    if (degree(h) > 0) out.emplace_back(h, i);
    w = quotient(w, h);
    y = quotient(z, h);
    z = sub(y, derivative(w));
  }
  return out;
}

ZPoly primitive_integer(const UPoly& p) {
  ZPoly out;
  if (p.empty()) return out;
  Integer den = 1;
  for (const auto& c : p) den = lcm(den, c.get_den());
  out.reserve(p.size());
  Integer g = 0;
  for (const auto& c : p) {
    Integer v = c.get_num() * (den / c.get_den());
    g = gcd(g, v);
    out.push_back(std::move(v));
  }
  if (sgn(out.back()) < 0) g = -g;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

UPoly to_rational(const ZPoly& p) {
  UPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

}  // namespace calc::univariate
