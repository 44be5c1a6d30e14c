#pragma once

#include <random>
#include <vector>

#include "calc/polynomial.hpp"

namespace testing_support {

using calc::Polynomial;
using calc::Rational;

inline Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
inline Polynomial cst(std::size_t n, const Rational& c) { return Polynomial::constant(n, c); }
inline Rational q(long num, long den = 1) { return calc::make_rational(num, den); }

inline Rational random_rational(std::mt19937_64& rng, int range = 9, int max_den = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  return calc::make_rational(num(rng), den(rng));
}

/// Random polynomial with integer coefficients in [-range, range], each
/// variable's degree at most max_deg, and at most max_terms terms.
inline Polynomial random_poly(std::mt19937_64& rng, std::size_t n, unsigned max_deg,
                              unsigned max_terms, int range = 5) {
  std::uniform_int_distribution<unsigned> deg(0, max_deg), count(1, max_terms);
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<calc::Term> terms;
  const unsigned k = count(rng);
  for (unsigned t = 0; t < k; ++t) {
    calc::Monomial m(n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i] = deg(rng);
    terms.push_back(calc::Term{m, Rational(coeff(rng))});
  }
  return Polynomial::from_terms(n, std::move(terms));
}

/// Random univariate polynomial of exact degree deg in variable 0.
inline Polynomial random_univariate(std::mt19937_64& rng, unsigned deg, int range = 9) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<calc::Term> terms;
  for (unsigned e = 0; e <= deg; ++e) {
    int c = coeff(rng);
    if (e == deg && c == 0) c = 1;
    terms.push_back(calc::Term{calc::Monomial{e}, Rational(c)});
  }
  return Polynomial::from_terms(1, std::move(terms));
}

}  // namespace testing_support
