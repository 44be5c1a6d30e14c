#pragma once

#include <vector>

#include "calc/polynomial.hpp"
#include "calc/rational.hpp"

/// Dense univariate polynomials, coefficients lowest degree first with no
/// trailing zeros (the zero polynomial is empty).
namespace calc::univariate {

using UPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

void trim(UPoly& p);
inline int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

/// Throws std::invalid_argument if p involves any variable other than var.
UPoly from_polynomial(const Polynomial& p, std::size_t var);
Polynomial to_polynomial(const UPoly& p, std::size_t num_vars, std::size_t var);
/// True if p involves no variable other than var.
bool is_univariate_in(const Polynomial& p, std::size_t var);

Rational eval(const UPoly& p, const Rational& x);
UPoly derivative(const UPoly& p);
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly quotient(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& p);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);
/// Distinct square-free factors by multiplicity (Yun), monic.
std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& p);

/// Integer multiple of p with coprime coefficients and positive leading
/// coefficient.
ZPoly primitive_integer(const UPoly& p);
UPoly to_rational(const ZPoly& p);

}  // namespace calc::univariate
