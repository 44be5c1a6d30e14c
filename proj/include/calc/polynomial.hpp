#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "calc/rational.hpp"

namespace calc {

/// Exponent vector over x1..xn.
using Monomial = boost::container::small_vector<std::uint32_t, 4>;

struct Term {
  Monomial exponents;
  Rational coeff;
};

/// Graded lexicographic order: total degree first, then the exponent of the
/// highest variable, then the next lower one, and so on.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

/**
 * Sparse multivariate polynomial over the rationals in a fixed number of
 * variables x1 < ... < xn (0-based indices in code).
 *
 * Terms are kept in descending graded-lex order with no zero coefficients and
 * no duplicate monomials, so two polynomials are equal iff their term lists
 * are equal. Values are immutable once built.
 */
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t var);
  /// Canonicalizes: merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(std::size_t num_vars, std::vector<Term> terms);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;

  unsigned degree(std::size_t var) const;
  unsigned total_degree() const;
  bool has_var(std::size_t var) const { return degree(var) > 0; }
  /// Highest variable with positive degree, or -1 for constants.
  int main_var() const;
  /// Leading coefficient in graded-lex order; zero for the zero polynomial.
  const Rational& leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// Total order used for canonical polynomial sets.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

  /// Same polynomial viewed in a ring with more (trailing) variables.
  Polynomial extend(std::size_t num_vars) const;

  std::string to_string() const;
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

/// Binds x1..xj to the given values.
Polynomial evaluate_partial(const Polynomial& p, std::span<const Rational> prefix);
/// Binds a single variable.
Polynomial substitute(const Polynomial& p, std::size_t var, const Rational& value);
/// Full evaluation; the point must cover every variable present in p.
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Coefficients w.r.t. var, highest degree first. The zero polynomial yields
/// an empty sequence.
std::vector<Polynomial> coefficients(const Polynomial& p, std::size_t var);
/// Coefficients w.r.t. var indexed by degree (lowest first).
std::vector<Polynomial> coefficients_by_degree(const Polynomial& p, std::size_t var);
Polynomial from_coefficients_by_degree(std::span<const Polynomial> coeffs,
                                       std::size_t var);

Polynomial derivative(const Polynomial& p, std::size_t var);

/// Exact quotient p / d; throws std::domain_error if d does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& d);
/// Quotient and remainder of the graded-lex division algorithm.
bool divides(const Polynomial& d, const Polynomial& p, Polynomial* quotient = nullptr);

/// Pseudo-remainder of p by d w.r.t. var.
Polynomial pseudo_remainder(const Polynomial& p, const Polynomial& d, std::size_t var);

/// Resultant w.r.t. var via the subresultant PRS. Both inputs need positive
/// degree in var.
Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t var);
/// Discriminant w.r.t. var; requires degree >= 2.
Polynomial discriminant(const Polynomial& p, std::size_t var);

/// Rescales so the graded-lex leading coefficient is 1. Zero stays zero.
Polynomial make_monic(const Polynomial& p);
/// Multivariate gcd over Q, monic.
Polynomial gcd(const Polynomial& p, const Polynomial& q);
/// Monic gcd of two polynomials in (at most) the same single variable.
Polynomial gcd_univariate(const Polynomial& p, const Polynomial& q);
/// Gcd of the coefficients of p viewed as a polynomial in var.
Polynomial content(const Polynomial& p, std::size_t var);
/// Gcd of the coefficients of p viewed over Q[var], i.e. the largest factor of
/// p that involves only var.
Polynomial univariate_content(const Polynomial& p, std::size_t var);

/// Square-free factors with their multiplicities (monic, non-constant).
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& p);

/**
 * Canonical basis of p's zero set: the square-free, monic, pairwise distinct
 * factors produced by content removal and square-free decomposition, sorted.
 * Constants map to the empty set; zero is rejected.
 */
std::vector<Polynomial> normalize(const Polynomial& p);

/// Sorted union of canonical polynomial sets.
void insert_sorted_unique(std::vector<Polynomial>& set, const Polynomial& p);
void insert_sorted_unique(std::vector<Polynomial>& set, std::span<const Polynomial> ps);

/// Splits the members of a set of normalized polynomials along their pairwise
/// gcds until all are coprime.
std::vector<Polynomial> coprime_basis(std::vector<Polynomial> polys);

}  // namespace calc

template <>
struct std::hash<calc::Polynomial> {
  std::size_t operator()(const calc::Polynomial& p) const noexcept;
};
