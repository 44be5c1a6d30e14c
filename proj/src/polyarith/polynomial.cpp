#include "calc/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace calc {

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("polynomial arithmetic across different variable counts");
}

const Rational kZero(0);

Rational rational_pow(const Rational& r, unsigned e) {
  if (e == 0) return Rational(1);
  if (e == 1) return r;
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), e);
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  if (sgn(c) != 0) p.terms_.push_back(Term{Monomial(num_vars, 0), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t var) {
  if (var >= num_vars) throw std::invalid_argument("variable index out of range");
  Polynomial p(num_vars);
  Monomial m(num_vars, 0);
  m[var] = 1;
  p.terms_.push_back(Term{std::move(m), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t num_vars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exponents.size() != num_vars)
      throw std::invalid_argument("monomial length does not match variable count");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grlex_compare(a.exponents, b.exponents) > 0;
  });
  Polynomial p(num_vars);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_[0].exponents)
    if (e) return false;
  return true;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::invalid_argument("constant_value of a non-constant polynomial");
  return terms_[0].coeff;
}

unsigned Polynomial::degree(std::size_t var) const {
  if (var >= num_vars_) return 0;
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exponents[var]);
  return d;
}

unsigned Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = 0;
  for (auto e : terms_[0].exponents) d += e;
  return d;
}

int Polynomial::main_var() const {
  int v = -1;
  for (const auto& t : terms_) {
    for (std::size_t i = t.exponents.size(); i-- > 0;) {
      if (t.exponents[i] != 0) {
        v = std::max(v, static_cast<int>(i));
        break;
      }
    }
  }
  return v;
}

const Rational& Polynomial::leading_coefficient() const {
  return terms_.empty() ? kZero : terms_[0].coeff;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merges two sorted term lists; sign selects addition or subtraction.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
      continue;
    }
    const auto c = grlex_compare(a[i].exponents, b[j].exponents);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(s) != 0) out.push_back(Term{a[i].exponents, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(*this, o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(*this, o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.num_vars());
  if (b.size() == 1 && b.is_constant()) return a * b.terms_[0].coeff;
  if (a.size() == 1 && a.is_constant()) return b * a.terms_[0].coeff;
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  const std::size_t n = a.num_vars();
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Monomial m(n);
      for (std::size_t k = 0; k < n; ++k) m[k] = s.exponents[k] + t.exponents[k];
      prod.push_back(Term{std::move(m), s.coeff * t.coeff});
    }
  }
  return Polynomial::from_terms(n, std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponents != b.terms_[i].exponents) return false;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) return a.num_vars_ <=> b.num_vars_;
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = grlex_compare(a.terms_[i].exponents, b.terms_[i].exponents);
    if (c != 0) return c;
    const int d = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (d != 0) return d <=> 0;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Polynomial Polynomial::extend(std::size_t num_vars) const {
  if (num_vars < num_vars_) throw std::invalid_argument("extend cannot drop variables");
  Polynomial p(num_vars);
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.exponents.resize(num_vars, 0);
  return p;
}

std::string Polynomial::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_vars_; ++i) names.push_back("x" + std::to_string(i + 1));
  return to_string(names);
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    bool has_monomial = false;
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i]) has_monomial = true;
    bool need_star = false;
    if (c != 1 || !has_monomial) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (!t.exponents[i]) continue;
      if (need_star) os << "*";
      os << names[i];
      if (t.exponents[i] > 1) os << "^" << t.exponents[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(p.num_vars(), Rational(1));
  Polynomial base = p;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial evaluate_partial(const Polynomial& p, std::span<const Rational> prefix) {
  if (prefix.size() > p.num_vars()) throw std::invalid_argument("prefix longer than variable count");
  if (prefix.empty()) return p;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    Monomial m = t.exponents;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (m[i]) {
        c *= rational_pow(prefix[i], m[i]);
        m[i] = 0;
      }
    }
    if (sgn(c) != 0) out.push_back(Term{std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(p.num_vars(), std::move(out));
}

Polynomial substitute(const Polynomial& p, std::size_t var, const Rational& value) {
  if (var >= p.num_vars()) throw std::invalid_argument("variable index out of range");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    Monomial m = t.exponents;
    if (m[var]) {
      c *= rational_pow(value, m[var]);
      m[var] = 0;
    }
    if (sgn(c) != 0) out.push_back(Term{std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(p.num_vars(), std::move(out));
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  Rational sum(0);
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (!t.exponents[i]) continue;
      if (i >= point.size()) throw std::invalid_argument("evaluate: point too short");
      c *= rational_pow(point[i], t.exponents[i]);
    }
    sum += c;
  }
  return sum;
}

std::vector<Polynomial> coefficients_by_degree(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return {};
  const unsigned d = p.degree(var);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : p.terms()) {
    Term u = t;
    const unsigned k = var < u.exponents.size() ? u.exponents[var] : 0;
    if (var < u.exponents.size()) u.exponents[var] = 0;
    buckets[k].push_back(std::move(u));
  }
  std::vector<Polynomial> out;
  out.reserve(d + 1);
  // Removing one exponent keeps the relative grlex order inside a bucket
  // except for ties broken by that variable, so re-canonicalize.
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(p.num_vars(), std::move(b)));
  return out;
}

std::vector<Polynomial> coefficients(const Polynomial& p, std::size_t var) {
  if (var >= p.num_vars() && !p.is_zero() && !p.is_constant())
    throw std::invalid_argument("variable index out of range");
  auto c = coefficients_by_degree(p, var);
  std::reverse(c.begin(), c.end());
  return c;
}

Polynomial from_coefficients_by_degree(std::span<const Polynomial> coeffs, std::size_t var) {
  if (coeffs.empty()) return Polynomial();
  const std::size_t n = coeffs[0].num_vars();
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      Term u = t;
      u.exponents[var] += static_cast<std::uint32_t>(k);
      out.push_back(std::move(u));
    }
  }
  return Polynomial::from_terms(n, std::move(out));
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (var >= t.exponents.size() || t.exponents[var] == 0) continue;
    Term u = t;
    u.coeff *= u.exponents[var];
    u.exponents[var] -= 1;
    out.push_back(std::move(u));
  }
  return Polynomial::from_terms(p.num_vars(), std::move(out));
}

void insert_sorted_unique(std::vector<Polynomial>& set, const Polynomial& p) {
  auto it = std::lower_bound(set.begin(), set.end(), p);
  if (it != set.end() && *it == p) return;
  set.insert(it, p);
}

void insert_sorted_unique(std::vector<Polynomial>& set, std::span<const Polynomial> ps) {
  for (const auto& p : ps) insert_sorted_unique(set, p);
}

}  // namespace calc

std::size_t std::hash<calc::Polynomial>::operator()(const calc::Polynomial& p) const noexcept {
  std::size_t h = p.num_vars() * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& t : p.terms()) {
    for (auto e : t.exponents) mix(e);
    mix(mpz_get_ui(t.coeff.get_num_mpz_t()));
    mix(mpz_get_ui(t.coeff.get_den_mpz_t()));
    mix(static_cast<std::size_t>(sgn(t.coeff) + 1));
  }
  return h;
}
