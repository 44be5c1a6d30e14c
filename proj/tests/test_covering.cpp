#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "calc/covering.hpp"
#include "oracles/probe.hpp"
#include "support/helpers.hpp"

using namespace calc;
using namespace testing_support;

namespace {

RAN sqrt_of(const Rational& n) {
  const auto x = var(1, 0);
  return isolate_roots(x * x - cst(1, n)).at(1);
}

Bound op(const RAN& v) { return Bound::open(v); }
Bound cl(const RAN& v) { return Bound::closed(v); }
const Bound ninf = Bound::neg_inf();
const Bound pinf = Bound::pos_inf();

CellRep cell(int id, Interval in, std::vector<Polynomial> polys, bool closed = false) {
  CellRep c;
  c.id = id;
  c.interval = std::move(in);
  c.polys = std::move(polys);
  c.closed_flag = closed;
  return c;
}

std::vector<int> ids(const std::vector<CellRep>& cells) {
  std::vector<int> v;
  for (const auto& c : cells) v.push_back(c.id);
  return v;
}

// Sphere instance z-line over (0, 0).
struct SpheresLine {
  Polynomial p1, p2, p3;
  RAN r3 = sqrt_of(3), r975 = sqrt_of(q(39, 4));
  SpheresLine() {
    const auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
    p1 = z - y * y - x * x;
    p2 = z * z + y * y + x * x - cst(3, 3);
    const auto y5 = y - cst(3, q(5, 2));
    p3 = z * z + y5 * y5 + x * x - cst(3, 16);
  }
};

}  // namespace

TEST(IsCovering, Examples) {
  const std::vector<Interval> ex2{{ninf, op(q(15, 16))}, {op(q(-15, 16)), pinf}};
  EXPECT_TRUE(is_covering(ex2));

  const RAN r3 = sqrt_of(3), r975 = sqrt_of(q(39, 4));
  const std::vector<Interval> line{{ninf, op(-r3)}, {op(-r975), op(r975)}, {op(r3), pinf}};
  EXPECT_TRUE(is_covering(line));

  const std::vector<Interval> split{{ninf, op(0)}, {op(0), pinf}};
  EXPECT_FALSE(is_covering(split));
  const std::vector<Interval> half_closed{{ninf, cl(0)}, {op(0), pinf}};
  EXPECT_TRUE(is_covering(half_closed));
  EXPECT_FALSE(is_covering(std::vector<Interval>{}));
  EXPECT_TRUE(is_covering(std::vector<Interval>{Interval::whole()}));
}

TEST(Gaps, ShapesAndEndpoints) {
  const std::vector<Interval> in{{op(1), cl(2)}, {cl(3), op(4)}};
  const auto g = gaps(in);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0].to_string(), "(-inf, 1]");
  EXPECT_EQ(g[1].to_string(), "(2, 3)");
  EXPECT_EQ(g[2].to_string(), "[4, inf)");

  const std::vector<Interval> touching{{ninf, op(0)}, {op(0), pinf}};
  const auto p = gaps(touching);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_TRUE(p[0].is_point());
}

TEST(SampleOutside, Examples) {
  EXPECT_EQ(*sample_outside(std::vector<Interval>{}), RAN(0));

  const std::vector<Interval> ex2{{ninf, op(q(-1, 2))}, {op(-1), op(1)}};
  EXPECT_EQ(*sample_outside(ex2), RAN(1));

  const std::vector<Interval> split{{ninf, op(0)}, {op(0), pinf}};
  EXPECT_EQ(*sample_outside(split), RAN(0));

  const RAN r3 = sqrt_of(3);
  const std::vector<Interval> one_point{{ninf, op(r3)}, {op(r3), pinf}};
  const auto s = sample_outside(one_point);
  ASSERT_TRUE(s.has_value());
  EXPECT_FALSE(s->is_rational());
  EXPECT_EQ(*s, r3);

  const std::vector<Interval> full{{ninf, cl(r3)}, {op(r3), pinf}};
  EXPECT_FALSE(sample_outside(full).has_value());
}

TEST(SampleOutside, SpheresSampleSequence) {
  const RAN r3 = sqrt_of(3);
  const RAN lo = RAN(q(-27, 20));
  std::vector<Interval> in{{cl(lo), cl(r3)}};
  EXPECT_EQ(*sample_outside(in), RAN(2));
  in.push_back({cl(q(3, 2)), pinf});
  EXPECT_EQ(*sample_outside(in), RAN(-2));
}

TEST(SampleOutside, SimplestRationalWithAlgebraicBounds) {
  const std::vector<Interval> in{{ninf, cl(sqrt_of(2))}, {op(sqrt_of(3)), pinf}};
  EXPECT_EQ(*sample_outside(in), RAN(q(3, 2)));
  const std::vector<Interval> narrow{{ninf, cl(sqrt_of(2))}, {op(sqrt_of(q(201, 100))), pinf}};
  const auto s = sample_outside(narrow);
  ASSERT_TRUE(s->is_rational());
  EXPECT_EQ(s->rational(), q(17, 12));
}

TEST(CloseUp, Examples) {
  const RAN r3 = sqrt_of(3), r975 = sqrt_of(q(39, 4));
  const std::vector<Interval> c2{{ninf, op(-r3)}, Interval::point(-r3), Interval::point(r3), {op(r3), pinf}};
  const auto a = close_up(c2);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], (Interval{ninf, cl(-r3)}));
  EXPECT_EQ(a[1], (Interval{cl(r3), pinf}));
  EXPECT_EQ(a[0].to_string(), "(-inf, ~-1.732]");

  const std::vector<Interval> c3{Interval::point(-r975), {op(-r975), op(r975)}, Interval::point(r975)};
  const auto b = close_up(c3);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], (Interval{cl(-r975), cl(r975)}));

  const auto w = close_up(std::vector<Interval>{Interval::whole()});
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0], Interval::whole());
}

TEST(SelectCovering, SpheresLineUnderMinCount) {
  SpheresLine a;
  const auto& r3 = a.r3;
  const auto& r975 = a.r975;
  const std::vector<CellRep> cells{
      cell(0, {ninf, op(0)}, {a.p1}),
      cell(1, {ninf, op(-r3)}, {a.p2}),
      cell(2, Interval::point(-r3), {a.p2}),
      cell(3, Interval::point(r3), {a.p2}),
      cell(4, {op(r3), pinf}, {a.p2}),
      cell(5, Interval::point(-r975), {a.p3}),
      cell(6, {op(-r975), op(r975)}, {a.p3}),
      cell(7, Interval::point(r975), {a.p3}),
  };
  const auto sel = select_covering(cells, Heuristic::MinCount);
  EXPECT_EQ(ids(sel), (std::vector<int>{1, 6, 4}));
}

TEST(SelectCovering, SpheresLineClosedFirst) {
  SpheresLine a;
  const std::vector<CellRep> cells{
      cell(0, {ninf, op(0)}, {a.p1}, false),
      cell(1, {ninf, cl(-a.r3)}, {a.p2}, true),
      cell(2, {cl(a.r3), pinf}, {a.p2}, true),
      cell(3, {cl(-a.r975), cl(a.r975)}, {a.p3}, true),
  };
  const auto sel = select_covering(cells, Heuristic::ClosedFirst);
  EXPECT_EQ(ids(sel), (std::vector<int>{1, 3, 2}));
  for (const auto& c : sel) EXPECT_TRUE(c.closed_flag);
}

TEST(SelectCovering, ClosedFirstFallsBack) {
  const auto x = var(1, 0);
  const std::vector<CellRep> cells{
      cell(0, {ninf, op(1)}, {x}, false),
      cell(1, {cl(0), pinf}, {x}, true),
  };
  EXPECT_EQ(ids(select_covering(cells, Heuristic::ClosedFirst)), (std::vector<int>{0, 1}));
}

TEST(SelectCovering, DropsContainedIntervals) {
  const auto x = var(1, 0);
  const std::vector<CellRep> cells{
      cell(0, {ninf, op(1)}, {x}),
      cell(1, {op(-2), op(-1)}, {x}),
      cell(2, {op(0), pinf}, {x}),
      cell(3, {op(5), op(6)}, {x}),
  };
  EXPECT_EQ(ids(select_covering(cells, Heuristic::MinCount)), (std::vector<int>{0, 2}));
}

TEST(SelectCovering, RejectsNonCovering) {
  const auto x = var(1, 0);
  const std::vector<CellRep> cells{cell(0, {ninf, op(0)}, {x}), cell(1, {op(0), pinf}, {x})};
  EXPECT_THROW(select_covering(cells, Heuristic::MinCount), std::invalid_argument);
  EXPECT_THROW(select_covering(cells, Heuristic::ClosedFirst), std::invalid_argument);
}

// Random families against the dense-probe oracle.
TEST(CoveringProperties, RandomFamilies) {
  std::mt19937_64 rng(20240611);
  oracle::IntervalFamilyGenerator gen(rng);
  const auto x = var(1, 0);
  const std::vector<Polynomial> pool{x, x - cst(1, 1), x * x - cst(1, 2), x + cst(1, 3)};
  int covering_count = 0;
  for (int round = 0; round < 1000; ++round) {
    const auto family = gen.family();
    const auto probes = oracle::dense_probes(family);
    const bool expected = oracle::covers_by_probes(family, probes);
    ASSERT_EQ(is_covering(family), expected) << "round " << round;

    const auto s = sample_outside(family);
    ASSERT_EQ(s.has_value(), !expected) << "round " << round;
    if (s) {
      for (const auto& in : family) ASSERT_FALSE(in.contains(*s)) << "round " << round;
    }

    const auto closed = close_up(family);
    for (const auto& p : probes) {
      const bool in_before = oracle::member(family, p);
      const bool in_after = oracle::member(closed, p);
      if (in_before) {
        ASSERT_TRUE(in_after) << "round " << round;
      } else if (in_after) {
        ASSERT_TRUE(oracle::is_endpoint(family, p)) << "round " << round;
      }
    }

    if (!expected) continue;
    ++covering_count;
    std::vector<CellRep> cells;
    std::uniform_int_distribution<int> coin(0, 1), pick(0, static_cast<int>(pool.size()) - 1);
    for (std::size_t i = 0; i < family.size(); ++i)
      cells.push_back(cell(static_cast<int>(i), family[i], {pool[pick(rng)]}, coin(rng) == 1));

    for (auto h : {Heuristic::MinCount, Heuristic::ClosedFirst}) {
      const auto sel = select_covering(cells, h);
      ASSERT_TRUE(is_covering(sel)) << "round " << round;
      for (std::size_t i = 0; i < sel.size(); ++i) {
        auto without = sel;
        without.erase(without.begin() + static_cast<long>(i));
        ASSERT_FALSE(is_covering(without)) << "redundant cell, round " << round;
        if (i > 0) {
          const auto& lo_a = sel[i - 1].interval.lower;
          const auto& lo_b = sel[i].interval.lower;
          ASSERT_TRUE(lo_a.kind == BoundKind::NegInf ||
                      (lo_b.finite() && compare(lo_a.value, lo_b.value) <= 0))
              << "unordered, round " << round;
        }
      }
      if (h == Heuristic::MinCount) {
        ASSERT_EQ(sel.size(), oracle::minimum_cover_size(family)) << "round " << round;
      }
      if (h == Heuristic::ClosedFirst) {
        std::vector<Interval> closed_only;
        for (const auto& c : cells)
          if (c.closed_flag) closed_only.push_back(c.interval);
        if (oracle::covers_by_probes(closed_only, oracle::dense_probes(closed_only))) {
          for (const auto& c : sel) ASSERT_TRUE(c.closed_flag) << "round " << round;
        }
      }
    }
  }
  EXPECT_GT(covering_count, 100);
}
