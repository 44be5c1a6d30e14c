// Sign decisions and root specialization at points with algebraic coordinates.

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "calc/real_algebraic.hpp"

namespace calc {

using univariate::UPoly;
using univariate::ZPoly;

namespace {

struct Box {
  Rational lo, hi;
};

Box box_mul(const Box& a, const Box& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return Box{*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Box box_pow(const Box& a, unsigned e) {
  if (e == 0) return Box{Rational(1), Rational(1)};
  Box r = a;
  for (unsigned i = 1; i < e; ++i) r = box_mul(r, a);
  if (e % 2 == 0 && sgn(a.lo) < 0 && sgn(a.hi) > 0) r.lo = 0;
  return r;
}

// Enclosure of p over the box spanned by the coordinates' intervals.
Box evaluate_box(const Polynomial& p, std::span<const RealAlgebraicNumber> s) {
  Box sum{Rational(0), Rational(0)};
  for (const auto& t : p.terms()) {
    Box term{t.coeff, t.coeff};
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (!t.exponents[i]) continue;
      term = box_mul(term, box_pow(Box{s[i].lower(), s[i].upper()}, t.exponents[i]));
    }
    sum.lo += term.lo;
    sum.hi += term.hi;
  }
  return sum;
}


// Binds the rational coordinates of s that p actually uses.
Polynomial bind_rationals(const Polynomial& p, std::span<const RealAlgebraicNumber> s,
                          std::vector<std::size_t>& algebraic) {
  Polynomial q = p;
  algebraic.clear();
  for (std::size_t i = 0; i < s.size() && i < p.num_vars(); ++i) {
    if (q.degree(i) == 0) continue;
    if (s[i].is_rational()) {
      q = substitute(q, i, s[i].rational());
    } else {
      algebraic.push_back(i);
    }
  }
  return q;
}

// Sign of a univariate q (in its only variable) at an algebraic number.
Sign univariate_sign(const UPoly& q, const RealAlgebraicNumber& a) {
  if (a.is_rational()) return sign_of(univariate::eval(q, a.rational()));
  const UPoly d = univariate::to_rational(a.defining());
  const UPoly g = univariate::gcd(q, d);
  if (univariate::degree(g) > 0) {
    const ZPoly gz = univariate::primitive_integer(g);
    if (sign_at(gz, a.lower()) * sign_at(gz, a.upper()) < 0) return Sign::Zero;
  }
  const std::size_t n = 1;
  const Polynomial qp = univariate::to_polynomial(q, n, 0);
  std::vector<RealAlgebraicNumber> pt{a};
  while (true) {
    if (pt[0].is_rational()) return sign_of(univariate::eval(q, pt[0].rational()));
    const Box b = evaluate_box(qp, pt);
    if (sgn(b.lo) > 0) return Sign::Positive;
    if (sgn(b.hi) < 0) return Sign::Negative;
    pt[0].refine();
  }
}

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t var) {
  auto c = coefficients(p, var);
  return c.empty() ? p : c.front();
}

// Determinant of a square matrix over the polynomial ring by fraction-free
// elimination.
Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(0, Rational(1));
  const std::size_t nv = m[0][0].num_vars();
  Polynomial prev = Polynomial::constant(nv, Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(nv);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Polynomial(nv);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Signed subresultant coefficients of p and its derivative w.r.t. var,
// from index deg p down to 0.
std::vector<Polynomial> sturm_habicht_coefficients(const Polynomial& p, std::size_t var) {
  const Polynomial dp = derivative(p, var);
  const auto a = coefficients_by_degree(p, var);
  const auto b = coefficients_by_degree(dp, var);
  const std::size_t deg_p = a.size() - 1, deg_q = b.size() - 1;
  const std::size_t nv = p.num_vars();
  std::vector<Polynomial> out(deg_p + 1, Polynomial(nv));
  out[deg_p] = a[deg_p];
  out[deg_q] = b[deg_q];
  for (std::size_t j = 0; j < deg_q; ++j) {
    const std::size_t size = deg_p + deg_q - 2 * j;
    std::vector<std::vector<Polynomial>> m(size, std::vector<Polynomial>(size, Polynomial(nv)));
    // Column c holds the coefficient of x^(deg_p + deg_q - j - 1 - c).
    const std::size_t top = deg_p + deg_q - j - 1;
    std::size_t row = 0;
    auto place = [&](const std::vector<Polynomial>& coeffs, std::size_t shift) {
      for (std::size_t e = 0; e < coeffs.size(); ++e) {
        const std::size_t power = e + shift;
        if (power > top || top - power >= size) continue;
        m[row][top - power] = coeffs[e];
      }
      ++row;
    };
    for (std::size_t i = 0; i < deg_q - j; ++i) place(a, deg_q - j - 1 - i);
    for (std::size_t i = 0; i < deg_p - j; ++i) place(b, deg_p - j - 1 - i);
    Polynomial d = determinant(std::move(m));
    const std::size_t gap = deg_p - j;
    if ((gap * (gap - 1) / 2) % 2 == 1) d = -d;
    out[j] = std::move(d);
  }
  return out;
}

// Permanences minus variations of a sign list, highest index first.
int permanences_minus_variations(const std::vector<Sign>& signs) {
  int total = 0;
  std::size_t p = 0;
  while (p < signs.size() && signs[p] == Sign::Zero) ++p;
  while (p < signs.size()) {
    std::size_t q = p + 1;
    while (q < signs.size() && signs[q] == Sign::Zero) ++q;
    if (q == signs.size()) break;
    const std::size_t gap = q - p;
    if (gap % 2 == 1) {
      const int eps = ((gap * (gap - 1) / 2) % 2 == 0) ? 1 : -1;
      total += eps * static_cast<int>(signs[p]) * static_cast<int>(signs[q]);
    }
    p = q;
  }
  return total;
}

}  // namespace

int count_real_roots(const Polynomial& p, std::span<const RealAlgebraicNumber> s) {
  const std::size_t var = s.size();
  if (sign_at(leading_coefficient_in(p, var), s) == Sign::Zero)
    throw std::invalid_argument("count_real_roots: leading coefficient vanishes");
  if (p.degree(var) == 0) return 0;
  const auto sh = sturm_habicht_coefficients(p, var);
  std::vector<Sign> signs;
  for (auto it = sh.rbegin(); it != sh.rend(); ++it) signs.push_back(sign_at(*it, s));
  return permanences_minus_variations(signs);
}

namespace {

// Origin polynomial of s[j] with the rational coordinates bound, when the
// origin was recorded over exactly s[0..j); zero otherwise.
Polynomial origin_polynomial(std::span<const RealAlgebraicNumber> s, std::size_t j, std::size_t num_vars) {
  const RootOrigin* o = s[j].origin();
  if (!o || o->poly.num_vars() != num_vars || o->prefix.size() != j) return Polynomial(num_vars);
  for (std::size_t i = 0; i < j; ++i)
    if (o->prefix[i] != s[i]) return Polynomial(num_vars);
  std::vector<std::size_t> unused;
  return bind_rationals(o->poly, s.first(j), unused);
}

}  // namespace

Sign sign_at(const Polynomial& p, std::span<const RealAlgebraicNumber> s) {
  std::vector<std::size_t> algebraic;
  const Polynomial q = bind_rationals(p, s, algebraic);
  if (q.main_var() >= 0 && static_cast<std::size_t>(q.main_var()) >= s.size())
    throw std::invalid_argument("sign_at: sample point too short");
  if (q.is_constant()) return sign_of(q.constant_value());
  if (algebraic.size() == 1) {
    return univariate_sign(univariate::from_polynomial(q, algebraic[0]), s[algebraic[0]]);
  }

  std::vector<RealAlgebraicNumber> pt(s.begin(), s.end());
  auto decide = [&]() -> std::optional<Sign> {
    const Box b = evaluate_box(q, pt);
    if (sgn(b.lo) > 0) return Sign::Positive;
    if (sgn(b.hi) < 0) return Sign::Negative;
    return std::nullopt;
  };
  auto refine_all = [&] {
    for (auto j : algebraic) pt[j].refine();
  };
  // Cheap attempts by interval arithmetic first.
  for (int round = 0; round < 8; ++round) {
    if (auto r = decide()) return *r;
    refine_all();
    for (auto j : algebraic)
      if (pt[j].is_rational()) return sign_at(q, pt);
  }

  // Zero test: is the last algebraic coordinate a root of q over the others?
  const std::size_t last = algebraic.back();
  const auto line = specialize_roots(q, std::span<const RealAlgebraicNumber>(pt.data(), last));
  if (line.nullified) return Sign::Zero;
  for (const auto& r : line.roots)
    if (r == pt[last]) return Sign::Zero;
  while (true) {
    if (auto r = decide()) return *r;
    refine_all();
  }
}

SpecializedRoots specialize_roots(const Polynomial& p, std::span<const RealAlgebraicNumber> s) {
  const std::size_t k = s.size();
  if (k >= p.num_vars()) throw std::invalid_argument("specialize_roots: no variable left");
  SpecializedRoots out;
  std::vector<std::size_t> algebraic;
  Polynomial q = bind_rationals(p, s, algebraic);
  for (std::size_t i = k + 1; i < q.num_vars(); ++i)
    if (q.degree(i) > 0) throw std::invalid_argument("specialize_roots: variables beyond the next one");

  // Nullification: every coefficient in x_k vanishes at s. Leading
  // coefficients vanishing at s are dropped.
  auto coeffs = coefficients_by_degree(q, k);
  while (!coeffs.empty() && sign_at(coeffs.back(), s) == Sign::Zero) coeffs.pop_back();
  if (coeffs.empty()) {
    out.nullified = true;
    return out;
  }
  if (coeffs.size() == 1) return out;
  q = from_coefficients_by_degree(coeffs, k);

  if (algebraic.empty()) {
    out.roots = isolate_roots(univariate::from_polynomial(q, k));
    return out;
  }

  // Eliminate the algebraic coordinates from the top down; a coordinate with
  // a matching origin is eliminated through its origin polynomial, otherwise
  // through its defining polynomial. Removing the univariate content first
  // keeps the resultant nonzero. The real roots of the result include every
  // root over s.
  Polynomial r = q;
  for (std::size_t j = k; j-- > 0;) {
    if (r.degree(j) == 0) continue;
    const Polynomial c = univariate_content(r, j);
    if (!c.is_constant()) r = divide_exact(r, c);
    if (r.degree(j) == 0) continue;
    Polynomial d = origin_polynomial(s, j, q.num_vars());
    if (d.is_zero()) d = univariate::to_polynomial(univariate::to_rational(s[j].defining()), q.num_vars(), j);
    Polynomial e = resultant(r, d, j);
    if (e.is_zero()) {
      r = divide_exact(r, gcd(r, d));
      e = resultant(r, d, j);
    }
    r = std::move(e);
  }
  if (r.is_zero()) throw std::logic_error("specialize_roots: elimination collapsed");
  std::vector<RealAlgebraicNumber> candidates = isolate_roots(univariate::from_polynomial(r, k));

  // Exactly `wanted` candidates are roots; drop the others once interval
  // arithmetic proves q nonzero there.
  const int wanted = count_real_roots(q, s);
  if (wanted < 0 || static_cast<std::size_t>(wanted) > candidates.size())
    throw std::logic_error("specialize_roots: inconsistent root count");
  std::vector<RealAlgebraicNumber> pt(s.begin(), s.end());
  pt.emplace_back();
  std::vector<bool> alive(candidates.size(), true);
  std::size_t remaining = candidates.size();
  while (remaining > static_cast<std::size_t>(wanted)) {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (!alive[c]) continue;
      pt.back() = candidates[c];
      bool excluded;
      if (std::all_of(algebraic.begin(), algebraic.end(), [&](std::size_t j) { return pt[j].is_rational(); })) {
        excluded = sign_at(q, pt) != Sign::Zero;
      } else {
        const Box b = evaluate_box(q, pt);
        excluded = sgn(b.lo) > 0 || sgn(b.hi) < 0;
      }
      if (excluded) {
        alive[c] = false;
        --remaining;
      }
    }
    if (remaining <= static_cast<std::size_t>(wanted)) break;
    for (auto j : algebraic) pt[j].refine();
    for (std::size_t c = 0; c < candidates.size(); ++c)
      if (alive[c]) candidates[c].refine();
  }
  auto origin = std::make_shared<const RootOrigin>(RootOrigin{q, SamplePoint(s.begin(), s.end())});
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (!alive[c]) continue;
    if (!candidates[c].is_rational()) candidates[c].set_origin(origin);
    out.roots.push_back(std::move(candidates[c]));
  }
  return out;
}

}  // namespace calc
