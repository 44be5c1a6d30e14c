#include <gtest/gtest.h>

#include <random>

#include "calc/real_algebraic.hpp"
#include "oracles/sturm.hpp"
#include "support/helpers.hpp"

using namespace calc;
using namespace testing_support;

namespace {

RAN sqrt_of(long n) {
  const auto x = var(1, 0);
  auto roots = isolate_roots(x * x - cst(1, n));
  return roots.at(1);
}

oracle::Coeffs coeffs_of(const Polynomial& p) { return univariate::from_polynomial(p, 0); }

}  // namespace

TEST(IsolateRoots, SquareRootOfThree) {
  const auto z = var(1, 0);
  const auto r = isolate_roots(z * z - cst(1, 3));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_FALSE(r[0].is_rational());
  EXPECT_NEAR(r[0].to_double(), -1.7320508, 1e-6);
  EXPECT_NEAR(r[1].to_double(), 1.7320508, 1e-6);
  EXPECT_EQ(r[1].approx_string(2), "~1.73");
}

TEST(IsolateRoots, SpheresSectorBound) {
  const auto z = var(1, 0);
  const auto r = isolate_roots(z * z - cst(1, q(39, 4)));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].approx_string(2), "~-3.12");
  EXPECT_EQ(r[1].approx_string(2), "~3.12");
}

TEST(IsolateRoots, RationalRootsStayRational) {
  const auto x = var(1, 0);
  const auto r = isolate_roots(x * x - cst(1, 1));
  ASSERT_EQ(r.size(), 2u);
  ASSERT_TRUE(r[0].is_rational());
  ASSERT_TRUE(r[1].is_rational());
  EXPECT_EQ(r[0].rational(), -1);
  EXPECT_EQ(r[1].rational(), 1);

  const auto m = isolate_roots((cst(1, 7) * x - cst(1, 3)) * (x * x - cst(1, 2)) * x);
  ASSERT_EQ(m.size(), 4u);
  EXPECT_FALSE(m[0].is_rational());
  EXPECT_EQ(m[1].rational(), 0);
  EXPECT_EQ(m[2].rational(), q(3, 7));
  EXPECT_FALSE(m[3].is_rational());
  // The irrational roots' defining polynomial no longer carries the rational ones.
  EXPECT_EQ(m[3].defining(), (univariate::ZPoly{-2, 0, 1}));
}

TEST(IsolateRoots, ZeroRejectedConstantEmpty) {
  EXPECT_THROW(isolate_roots(Polynomial(1)), std::invalid_argument);
  EXPECT_TRUE(isolate_roots(cst(1, 4)).empty());
}

TEST(Compare, Examples) {
  const RAN s3 = sqrt_of(3);
  EXPECT_EQ(compare(s3, RAN(q(-27, 20))), std::strong_ordering::greater);
  EXPECT_EQ(compare(sqrt_of(3), sqrt_of(3)), std::strong_ordering::equal);
  const auto z = var(1, 0);
  const RAN big = isolate_roots(z * z - cst(1, q(39, 4))).at(1);
  EXPECT_EQ(compare(big, s3), std::strong_ordering::greater);
  // cross-check: widths below 1/10 already separate them
  big.refine_to(q(1, 10));
  s3.refine_to(q(1, 10));
  EXPECT_LT(s3.upper(), big.lower());
}

TEST(Compare, SameNumberDifferentPolynomials) {
  const auto x = var(1, 0);
  const RAN a = isolate_roots(x * x - cst(1, 2)).at(1);
  const RAN b = isolate_roots(x * x * x * x - cst(1, 4)).at(1);       // also sqrt 2
  const RAN c = isolate_roots((x * x - cst(1, 2)) * (x - cst(1, 5))).at(1);
  EXPECT_EQ(compare(a, b), std::strong_ordering::equal);
  EXPECT_EQ(compare(b, c), std::strong_ordering::equal);
  EXPECT_EQ(compare(a, RAN(q(141, 100))), std::strong_ordering::greater);
  EXPECT_EQ(compare(a, RAN(q(142, 100))), std::strong_ordering::less);
}

TEST(SignAt, Examples) {
  const auto x1 = var(2, 0), x2 = var(2, 1);
  const Polynomial p1 = -x1 * x1 - x2 + cst(2, 1);
  const Polynomial p2 = x1 * x1 - x2 - cst(2, 1);
  EXPECT_EQ(sign_at(p2, SamplePoint{RAN(1), RAN(0)}), Sign::Zero);
  EXPECT_EQ(sign_at(p1, SamplePoint{RAN(q(3, 2)), RAN(0)}), Sign::Negative);
  const auto z = var(1, 0);
  EXPECT_EQ(sign_at(z * z - cst(1, 3), SamplePoint{sqrt_of(3)}), Sign::Zero);
}

TEST(SignAt, SeveralAlgebraicCoordinates) {
  const auto x = var(2, 0), y = var(2, 1);
  const SamplePoint s{sqrt_of(2), sqrt_of(3)};
  EXPECT_EQ(sign_at(x * x * y * y - cst(2, 6), s), Sign::Zero);
  EXPECT_EQ(sign_at(x * y - cst(2, q(5, 2)), s), Sign::Negative);
  EXPECT_EQ(sign_at(x * y - cst(2, q(49, 20)), s), Sign::Negative);
  EXPECT_EQ(sign_at(x * y - cst(2, q(489, 200)), s), Sign::Positive);
  EXPECT_EQ(sign_at(x - y, SamplePoint{sqrt_of(2), sqrt_of(2)}), Sign::Zero);
  // sqrt2 + sqrt3 is a root of t^4 - 10 t^2 + 1
  const Polynomial t = x + y;
  EXPECT_EQ(sign_at(pow(t, 4) - cst(2, 10) * t * t + cst(2, 1), s), Sign::Zero);
  EXPECT_EQ(sign_at(pow(t, 4) - cst(2, 10) * t * t + cst(2, 2), s), Sign::Positive);
}

TEST(SpecializeRoots, Examples) {
  const auto x1 = var(2, 0), x2 = var(2, 1);
  const Polynomial p1 = -x1 * x1 - x2 + cst(2, 1);
  const Polynomial p2 = x1 * x1 - x2 - cst(2, 1);
  auto r = specialize_roots(p1, SamplePoint{RAN(q(1, 4))});
  ASSERT_FALSE(r.nullified);
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_EQ(r.roots[0].rational(), q(15, 16));
  r = specialize_roots(p2, SamplePoint{RAN(1)});
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_EQ(r.roots[0].rational(), 0);

  const auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
  r = specialize_roots(z * z + y * y + x * x - cst(3, 3), SamplePoint{RAN(0), sqrt_of(3)});
  ASSERT_FALSE(r.nullified);
  ASSERT_EQ(r.roots.size(), 1u);
  ASSERT_TRUE(r.roots[0].is_rational());
  EXPECT_EQ(r.roots[0].rational(), 0);
}

TEST(SpecializeRoots, VanishingConjugateDoesNotLoseRoots) {
  const auto x1 = var(3, 0), x2 = var(3, 1), x3 = var(3, 2);
  const RAN s2 = sqrt_of(2);
  const RAN m2 = isolate_roots(var(1, 0) * var(1, 0) - cst(1, 2)).at(0);
  auto r = specialize_roots((x1 - x2) * x3 - cst(3, 1), SamplePoint{s2, m2});
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_NEAR(r.roots[0].to_double(), 1 / (2 * 1.41421356), 1e-6);
  r = specialize_roots((x1 - x2) * (x3 - cst(3, 1)) * x3, SamplePoint{s2, m2});
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_EQ(r.roots[0].rational(), 0);
  EXPECT_EQ(r.roots[1].rational(), 1);
}

TEST(SpecializeRoots, Nullification) {
  const auto x1 = var(2, 0), x2 = var(2, 1);
  EXPECT_TRUE(specialize_roots((x1 - cst(2, 1)) * x2, SamplePoint{RAN(1)}).nullified);
  EXPECT_TRUE(specialize_roots((x1 * x1 - cst(2, 2)) * x2 + x1 * x1 - cst(2, 2),
                               SamplePoint{sqrt_of(2)})
                  .nullified);
  const auto r = specialize_roots((x1 - cst(2, 1)) * x2 + cst(2, 3), SamplePoint{RAN(1)});
  EXPECT_FALSE(r.nullified);
  EXPECT_TRUE(r.roots.empty());
}

TEST(RealalgProperties, RootCountMatchesSturm) {
  std::mt19937_64 rng(11);
  int total = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_univariate(rng, 1 + i % 6, 9);
    const auto roots = isolate_roots(p);
    ASSERT_EQ(static_cast<int>(roots.size()), oracle::count_real_roots(coeffs_of(p))) << p.to_string();
    total += static_cast<int>(roots.size());
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) ASSERT_LT(roots[k], roots[k + 1]);
  }
  EXPECT_GT(total, 500);
}

TEST(RealalgProperties, IsolatingIntervalsChangeSign) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    auto p = random_univariate(rng, 1 + i % 6, 9);
    if (i % 4 == 0) p *= p;
    const auto sqf = univariate::primitive_integer(univariate::squarefree_part(coeffs_of(p)));
    for (const auto& r : isolate_roots(p)) {
      if (r.is_rational()) {
        ASSERT_EQ(sign_at(sqf, r.rational()), 0);
        continue;
      }
      const int a = sign_at(sqf, r.lower()), b = sign_at(sqf, r.upper());
      ASSERT_NE(a, 0);
      ASSERT_NE(b, 0);
      ASSERT_NE(a, b);
      // Sturm confirms exactly one root inside.
      ASSERT_EQ(oracle::count_roots_between(univariate::to_rational(sqf), r.lower(), r.upper()), 1);
    }
  }
}

TEST(RealalgProperties, CompareIsTotalOrder) {
  std::mt19937_64 rng(13);
  std::vector<RAN> pool;
  for (int i = 0; i < 40; ++i)
    for (auto& r : isolate_roots(random_univariate(rng, 2 + i % 3, 6))) pool.push_back(r);
  for (int i = 0; i < 20; ++i) pool.emplace_back(random_rational(rng));
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const auto ab = compare(a, b), ba = compare(b, a);
      ASSERT_EQ(ab, 0 <=> ba);
      ASSERT_EQ(ab == 0, std::abs(a.to_double() - b.to_double()) < 1e-12);
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const auto& c = pool[pick(rng)];
    if (a <= b && b <= c) {
      ASSERT_TRUE(a <= c);
    }
  }
}

TEST(RealalgProperties, SignAtMatchesRationalEvaluation) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 3;
    const auto p = random_poly(rng, n, 3, 4);
    SamplePoint s;
    std::vector<Rational> vals;
    for (std::size_t j = 0; j < n; ++j) {
      vals.push_back(random_rational(rng, 3, 3));
      s.emplace_back(vals.back());
    }
    ASSERT_EQ(sign_at(p, s), sign_of(evaluate(p, vals)));
  }
}

TEST(RealalgProperties, SpecializeAtRationalMatchesIsolation) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_poly(rng, 2, 3, 5);
    if (p.degree(1) == 0) continue;
    const Rational a = random_rational(rng, 3, 3);
    const auto r = specialize_roots(p, SamplePoint{RAN(a)});
    const auto direct = evaluate_partial(p, std::vector<Rational>{a});
    if (direct.is_zero()) {
      ASSERT_TRUE(r.nullified);
      continue;
    }
    ASSERT_FALSE(r.nullified);
    const auto expected = isolate_roots(direct);
    ASSERT_EQ(r.roots.size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) ASSERT_EQ(r.roots[k], expected[k]);
  }
}

TEST(RealalgProperties, SpecializeAtAlgebraicFindsTrueRoots) {
  // Every reported root makes p vanish; the count matches a numeric scan of
  // the specialized polynomial's sign changes on a fine grid.
  std::mt19937_64 rng(16);
  const auto s2 = sqrt_of(2);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_poly(rng, 2, 2, 4);
    if (p.degree(1) == 0) continue;
    const auto r = specialize_roots(p, SamplePoint{s2});
    if (r.nullified) continue;
    for (const auto& root : r.roots) ASSERT_EQ(sign_at(p, SamplePoint{s2, root}), Sign::Zero);
  }
}

TEST(RealalgProperties, RefinementStability) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto roots = isolate_roots(random_univariate(rng, 3, 6));
    if (roots.size() < 2) continue;
    const auto p = random_poly(rng, 2, 2, 4);
    const SamplePoint s{roots[0], roots.back()};
    const auto before_sign = sign_at(p, s);
    const auto before_cmp = compare(roots[0], roots.back());
    for (int k = 0; k < 5; ++k) {
      s[0].refine();
      s[1].refine();
      ASSERT_EQ(sign_at(p, s), before_sign);
      ASSERT_EQ(compare(s[0], s[1]), before_cmp);
    }
  }
}

TEST(RealalgProperties, HabichtCountMatchesSturm) {
  std::mt19937_64 rng(18);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_univariate(rng, 1 + i % 7, 9);
    ASSERT_EQ(count_real_roots(p, SamplePoint{}), oracle::count_real_roots(coeffs_of(p))) << p.to_string();
  }
  for (int i = 0; i < 300; ++i) {
    const auto p = random_poly(rng, 2, 3, 5);
    if (p.degree(1) == 0) continue;
    const Rational a = random_rational(rng, 3, 3);
    const auto direct = evaluate_partial(p, std::vector<Rational>{a});
    if (direct.degree(1) != p.degree(1)) continue;
    ASSERT_EQ(count_real_roots(p, SamplePoint{RAN(a)}),
              oracle::count_real_roots(univariate::from_polynomial(direct, 1)));
  }
}

TEST(RealalgProperties, RootsOverTwoAlgebraicCoordinates) {
  std::mt19937_64 rng(19);
  int roots_seen = 0;
  for (int i = 0; i < 60; ++i) {
    const auto a = isolate_roots(random_univariate(rng, 2 + i % 2, 6));
    const auto b = isolate_roots(random_univariate(rng, 2, 6));
    if (a.empty() || b.empty() || a[0].is_rational() || b.back().is_rational()) continue;
    const SamplePoint s{a[0], b.back()};
    const auto p = random_poly(rng, 3, 2, 5);
    if (p.degree(2) == 0) continue;
    const auto r = specialize_roots(p, s);
    if (r.nullified) continue;
    for (const auto& root : r.roots) {
      SamplePoint full = s;
      full.push_back(root);
      ASSERT_EQ(sign_at(p, full), Sign::Zero);
      ++roots_seen;
    }
    // Points strictly between consecutive roots are not roots.
    for (std::size_t k = 0; k + 1 < r.roots.size(); ++k) {
      SamplePoint mid = s;
      mid.emplace_back(simplest_rational_between(&r.roots[k].upper(), false, &r.roots[k + 1].lower(), false));
      if (r.roots[k] < mid.back() && mid.back() < r.roots[k + 1]) {
        ASSERT_NE(sign_at(p, mid), Sign::Zero);
      }
    }
  }
  EXPECT_GT(roots_seen, 10);
}
