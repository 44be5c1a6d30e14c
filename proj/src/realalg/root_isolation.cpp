// Real root isolation by Descartes' rule of signs with dyadic bisection.

#include <algorithm>
#include <stdexcept>

#include "calc/real_algebraic.hpp"

namespace calc {

using univariate::UPoly;
using univariate::ZPoly;

int sign_at(const ZPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = p.back();
  Integer bp = 1;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    bp *= b;
    acc *= a;
    acc += p[k] * bp;
  }
  return sgn(acc);
}

namespace {

void taylor_shift_one(ZPoly& a) {
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = n - 1;; --j) {
      a[j] += a[j + 1];
      if (j == i) break;
    }
}

// Sign variations of (x+1)^n q(1/(x+1)), capped at 2.
int descartes_unit(const ZPoly& q) {
  ZPoly t(q.rbegin(), q.rend());
  taylor_shift_one(t);
  int changes = 0, last = 0;
  for (const auto& c : t) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last && ++changes >= 2) return changes;
    last = s;
  }
  return changes;
}

// 2^n q(x/2)
ZPoly halve(const ZPoly& q) {
  ZPoly h(q.size());
  const std::size_t n = q.size() - 1;
  for (std::size_t k = 0; k <= n; ++k) h[k] = q[k] << static_cast<mp_bitcnt_t>(n - k);
  return h;
}

struct Isolated {
  bool exact;  // lo is the root itself
  Rational lo, hi;
};

// Roots of p in (0, inf); p square-free with p(0) != 0.
std::vector<Isolated> positive_roots(const ZPoly& p) {
  std::vector<Isolated> out;
  const std::size_t n = p.size() - 1;
  if (n == 0) return out;
  std::size_t max_bits = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(p[i]) != 0) max_bits = std::max(max_bits, mpz_sizeinbase(p[i].get_mpz_t(), 2));
  const long lead_bits = static_cast<long>(mpz_sizeinbase(p[n].get_mpz_t(), 2));
  const long k = std::max(1L, static_cast<long>(max_bits) - lead_bits + 2);

  ZPoly q(n + 1);
  for (std::size_t i = 0; i <= n; ++i) q[i] = p[i] << static_cast<mp_bitcnt_t>(k * static_cast<long>(i));

  const Rational scale(Integer(1) << static_cast<mp_bitcnt_t>(k));
  struct Node {
    ZPoly q;
    Integer c;
    unsigned long depth;
  };
  std::vector<Node> stack;
  stack.push_back(Node{std::move(q), Integer(0), 0});
  auto point = [&](const Integer& c, unsigned long depth) {
    Rational r(c, Integer(1) << depth);
    r.canonicalize();
    return Rational(r * scale);
  };
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (sgn(node.q[0]) == 0) {
      if (sgn(node.c) != 0) out.push_back(Isolated{true, point(node.c, node.depth), {}});
      node.q.erase(node.q.begin());
    }
    if (node.q.size() <= 1) continue;
    const int v = descartes_unit(node.q);
    if (v == 0) continue;
    if (v == 1) {
      out.push_back(Isolated{false, point(node.c, node.depth), point(node.c + 1, node.depth)});
      continue;
    }
    ZPoly left = halve(node.q);
    ZPoly right = left;
    taylor_shift_one(right);
    stack.push_back(Node{std::move(right), 2 * node.c + 1, node.depth + 1});
    stack.push_back(Node{std::move(left), 2 * node.c, node.depth + 1});
  }
  return out;
}

ZPoly reflect(const ZPoly& p) {
  ZPoly r = p;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return r;
}

// For a root of p in (lo, hi), decides whether it is rational: such a root
// has the form m/L with L the leading coefficient, so once the interval is
// narrower than 1/L a single candidate remains.
bool rational_root_in(const ZPoly& p, Rational& lo, Rational& hi, Rational& root) {
  if (p.size() == 2) {
    root = Rational(-p[0], p[1]);
    root.canonicalize();
    return true;
  }
  const Integer lead = abs(p.back());
  int s_lo = sign_at(p, lo);
  while ((hi - lo) * lead >= 1) {
    const Rational mid = (lo + hi) / 2;
    const int s = sign_at(p, mid);
    if (s == 0) {
      root = mid;
      return true;
    }
    if (s == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const Integer m = floor_of(lo * lead) + 1;
  if (m >= hi * lead) return false;
  Rational cand(m, lead);
  cand.canonicalize();
  if (sign_at(p, cand) == 0) {
    root = cand;
    return true;
  }
  return false;
}

// Shrinks the interval of a until neither endpoint is a root of z.
void move_endpoints_off_roots(const RealAlgebraicNumber& a, const ZPoly& z) {
  for (int side = 0; side < 2 && !a.is_rational(); ++side) {
    for (unsigned j = 1; !a.is_rational(); ++j) {
      const Rational& end = side == 0 ? a.lower() : a.upper();
      if (sign_at(z, end) != 0) break;
      Rational step = (a.upper() - a.lower()) / Rational(Integer(1) << j);
      const Rational cut = side == 0 ? Rational(a.lower() + step) : Rational(a.upper() - step);
      if (sign_at(z, cut) == 0) continue;
      a.compare_with(cut);
    }
  }
}

}  // namespace

std::vector<RealAlgebraicNumber> isolate_roots(const UPoly& input) {
  UPoly p = input;
  univariate::trim(p);
  if (p.empty()) throw std::invalid_argument("isolate_roots of the zero polynomial");
  if (p.size() == 1) return {};
  ZPoly z = univariate::primitive_integer(univariate::squarefree_part(p));
  const ZPoly full = z;

  bool zero_root = false;
  if (sgn(z[0]) == 0) {
    zero_root = true;
    z.erase(z.begin());
  }
  std::vector<Isolated> items;
  {
    auto neg = positive_roots(reflect(z));
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) {
      if (it->exact) {
        items.push_back(Isolated{true, -it->lo, {}});
      } else {
        items.push_back(Isolated{false, -it->hi, -it->lo});
      }
    }
  }
  if (zero_root) items.push_back(Isolated{true, Rational(0), {}});
  for (auto& it : positive_roots(z)) items.push_back(std::move(it));

  // Exact roots sit on bisection points, possibly shared with neighbouring
  // intervals; divide them out before looking for rational roots inside.
  UPoly rest = univariate::to_rational(z);
  for (const auto& it : items)
    if (it.exact && sgn(it.lo) != 0) rest = univariate::quotient(rest, UPoly{-it.lo, Rational(1)});
  ZPoly inner = univariate::primitive_integer(rest);
  bool found = false;
  for (auto& it : items) {
    if (it.exact) continue;
    Rational root;
    if (rational_root_in(inner, it.lo, it.hi, root)) {
      it = Isolated{true, root, {}};
      rest = univariate::quotient(rest, UPoly{-root, Rational(1)});
      found = true;
    }
  }
  if (found) inner = univariate::primitive_integer(rest);
  const auto shared = std::make_shared<const ZPoly>(std::move(inner));

  std::vector<RealAlgebraicNumber> out;
  out.reserve(items.size());
  for (const auto& it : items) {
    if (it.exact) {
      out.emplace_back(it.lo);
      continue;
    }
    out.push_back(RealAlgebraicNumber::from_irrational(shared, it.lo, it.hi));
    move_endpoints_off_roots(out.back(), full);
  }
  return out;
}

std::vector<RealAlgebraicNumber> isolate_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots of the zero polynomial");
  const int v = p.main_var();
  if (v < 0) return {};
  return isolate_roots(univariate::from_polynomial(p, static_cast<std::size_t>(v)));
}

namespace detail {

bool find_rational_root(const ZPoly& p, Rational& lo, Rational& hi, Rational& root) {
  return rational_root_in(p, lo, hi, root);
}

}  // namespace detail

}  // namespace calc
