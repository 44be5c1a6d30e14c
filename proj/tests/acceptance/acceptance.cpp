// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "calc/harness.hpp"
#include "oracles/probe.hpp"
#include "oracles/sturm.hpp"
#include "oracles/sylvester.hpp"
#include "support/helpers.hpp"
#include "support/instances.hpp"

using namespace calc;
using namespace testing_support;

namespace {

const std::vector<Variant> kVariants{Variant::Base, Variant::Closed, Variant::ClosedHeuristic};

struct Check {
  std::vector<std::string> failures;
  std::string note;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
};

RAN sqrt_of(const Rational& n) {
  const auto x = var(1, 0);
  return isolate_roots(x * x - cst(1, n)).at(1);
}

Bound op(const RAN& v) { return Bound::open(v); }
Bound cl(const RAN& v) { return Bound::closed(v); }

// Same intervals up to order, endpoints compared as algebraic numbers.
bool same_intervals(const std::vector<CellRep>& cells, std::vector<Interval> expected) {
  if (cells.size() != expected.size()) return false;
  for (const auto& c : cells) {
    auto it = std::find(expected.begin(), expected.end(), c.interval);
    if (it == expected.end()) return false;
    expected.erase(it);
  }
  return true;
}

bool satisfies(const Formula& f, const SamplePoint& s) {
  for (const auto& c : f.constraints)
    if (!holds(c.relation, sign_at(c.poly, s))) return false;
  return true;
}

std::vector<Polynomial> sphere_projection() {
  const auto x = var(3, 0), y = var(3, 1);
  std::vector<Polynomial> v;
  for (const auto& p : {y * y + x * x - cst(3, 3), y * y - y * cst(3, 5) + x * x - cst(3, q(39, 4)),
                        y + cst(3, q(27, 20))})
    for (auto& f : normalize(p)) v.push_back(f);
  std::sort(v.begin(), v.end());
  return v;
}

Heuristic heuristic_of(Variant v) {
  return v == Variant::ClosedHeuristic ? Heuristic::ClosedFirst : Heuristic::MinCount;
}

void projection_exactness(Check& c) {
  const auto f = paraboloid_spheres();
  const SamplePoint s{RAN(0), RAN(0)};
  for (auto v : kVariants) {
    const auto selected = select_covering(get_unsat_intervals(f, s, v), heuristic_of(v));
    auto got = construct_characterization(selected, s);
    std::sort(got.begin(), got.end());
    c.expect(got == sphere_projection(), "projection differs under " + to_string(v));
  }
}

void interval_tables(Check& c) {
  const auto f = paraboloid_spheres();
  const SamplePoint s{RAN(0), RAN(0)};
  const RAN r3 = sqrt_of(3), r975 = sqrt_of(q(39, 4)), zero(0);
  const Bound ninf = Bound::neg_inf(), pinf = Bound::pos_inf();

  const auto base = get_unsat_intervals(f, s, Variant::Base);
  const std::vector<Interval> base_table{
      {ninf, op(zero)},       {ninf, op(-r3)},        Interval::point(-r3),
      Interval::point(r3),    {op(r3), pinf},         Interval::point(-r975),
      {op(-r975), op(r975)},  Interval::point(r975)};
  c.expect(same_intervals(base, base_table), "BASE table differs");
  for (const auto& cell : base) c.expect(!cell.closed_flag, "BASE cell flagged");

  const auto closed = get_unsat_intervals(f, s, Variant::Closed);
  const std::vector<Interval> closed_table{
      {ninf, op(zero)}, {ninf, cl(-r3)}, {cl(r3), pinf}, {cl(-r975), cl(r975)}};
  c.expect(same_intervals(closed, closed_table), "CLOSED table differs");
  for (const auto& cell : closed)
    c.expect(cell.closed_flag == f.constraints[*cell.constraint_index].strict(), "CLOSED flag mismatch");
  for (const auto& cell : closed)
    for (const auto* b : {&cell.interval.lower, &cell.interval.upper})
      if (b->finite() && !b->value.is_rational())
        c.expect(b->value == r3 || b->value == -r3 || b->value == r975 || b->value == -r975, "unexpected endpoint");
}

void closed_generalization(Check& c) {
  const auto f = paraboloid_spheres();
  const RAN lo(q(-27, 20)), hi = sqrt_of(3);
  const auto closed = solve(f, Variant::Closed);
  c.expect(!closed.derived.empty(), "no CLOSED generalization");
  if (!closed.derived.empty()) {
    c.expect(closed.derived[0].interval == Interval{cl(lo), cl(hi)},
             "CLOSED first y-cell is " + closed.derived[0].interval.to_string());
    c.expect(closed.derived[0].closed_flag, "CLOSED first y-cell not flagged");
  }
  const auto base = solve(f, Variant::Base);
  c.expect(!base.derived.empty(), "no BASE generalization");
  if (!base.derived.empty()) {
    c.expect(base.derived[0].interval == Interval{op(lo), op(hi)},
             "BASE first y-cell is " + base.derived[0].interval.to_string());
    c.expect(!base.derived[0].closed_flag, "BASE first y-cell flagged");
  }
}

void sample_reduction(Check& c) {
  const auto f = paraboloid_spheres();
  const auto base = solve(f, Variant::Base);
  const auto closed = solve(f, Variant::Closed);
  c.expect(closed.stats.samples_per_level.at(1) < base.stats.samples_per_level.at(1),
           "level-2 samples not reduced");

  const RAN r3 = sqrt_of(3);
  const std::vector<RAN> sequence{RAN(0), RAN(q(-3, 2)), RAN(-2), RAN(2), -r3, r3};
  auto forced = [&](Variant v) {
    std::size_t taken = 0;
    SolveOptions o;
    o.sample_hook = [&](std::size_t level, const SamplePoint& prefix,
                        std::span<const CellRep> cells) -> std::optional<RAN> {
      if (level != 2 || prefix.size() != 1 || prefix[0] != RAN(0)) return std::nullopt;
      for (const auto& y : sequence) {
        if (std::any_of(cells.begin(), cells.end(), [&](const CellRep& cell) { return cell.interval.contains(y); }))
          continue;
        ++taken;
        return y;
      }
      return std::nullopt;
    };
    c.expect(!solve(f, v, o).sat, "forced run not unsat");
    return taken;
  };
  const auto closed_count = forced(Variant::Closed), base_count = forced(Variant::Base);
  c.expect(closed_count == 4, "CLOSED took " + std::to_string(closed_count) + " forced samples");
  c.expect(base_count == 6, "BASE took " + std::to_string(base_count) + " forced samples");
}

void instance_verdicts(Check& c) {
  const auto parabolas = two_parabolas();
  const auto spheres = paraboloid_spheres();
  const RAN r = sqrt_of(q(471, 400));
  for (auto v : kVariants) {
    const auto sat = solve(parabolas, v);
    c.expect(sat.sat && satisfies(parabolas, sat.model), "parabolas not sat with a model under " + to_string(v));
    const auto unsat = solve(spheres, v);
    c.expect(!unsat.sat, "spheres not unsat under " + to_string(v));
    auto first_x = std::find_if(unsat.derived.begin(), unsat.derived.end(),
                                [](const CellRep& cell) { return cell.level() == 1; });
    c.expect(first_x != unsat.derived.end(), "no x-cell under " + to_string(v));
    if (first_x == unsat.derived.end()) continue;
    c.expect(first_x->interval.lower.value == -r && first_x->interval.upper.value == r,
             "x-cell is " + first_x->interval.to_string() + " under " + to_string(v));
  }
}

void skipped_section(Check& c) {
  const auto f = two_parabolas(true);
  auto samples_at_one = [&](Variant v) {
    bool hit = false;
    SolveOptions o;
    o.sample_hook = [&](std::size_t level, const SamplePoint&, std::span<const CellRep> cells) {
      if (level == 1) {
        const auto s = sample_outside(cells);
        if (s && (*s == RAN(1) || *s == RAN(-1))) hit = true;
      }
      return std::optional<RAN>{};
    };
    c.expect(solve(f, v, o).sat, "core not sat under " + to_string(v));
    return hit;
  };
  c.expect(!samples_at_one(Variant::Closed), "CLOSED sampled x1 = +-1");
  c.expect(!samples_at_one(Variant::ClosedHeuristic), "CLOSED_HEURISTIC sampled x1 = +-1");
  c.expect(samples_at_one(Variant::Base), "BASE never sampled x1 = +-1");
}

void differential(Check& c) {
  std::mt19937_64 rng(20261016);
  std::size_t sat = 0, unsat = 0, pins = 0;
  for (int k = 0; k < 500; ++k) {
    FuzzOptions opts;
    opts.vars = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 3)(rng));
    opts.degree = 3;
    opts.max_constraints = 3;
    const auto f = random_formula(rng, opts);
    std::optional<bool> verdict;
    for (auto v : kVariants) {
      const auto r = solve(f, v);
      c.expect(!verdict || *verdict == r.sat, "disagreement on " + f.to_string());
      verdict = r.sat;
      if (r.sat) {
        c.expect(satisfies(f, r.model), "bad model for " + f.to_string());
        continue;
      }
      const auto report = verify_result(f, r);
      c.expect(report.violations.empty(), "pin violation (" + to_string(v) + ") on " + f.to_string());
      pins += report.pins_checked;
    }
    ++(*verdict ? sat : unsat);
  }
  c.note = std::to_string(sat) + " sat, " + std::to_string(unsat) + " unsat, " + std::to_string(pins) + " pins";
  c.expect(sat > 50 && unsat > 50, "degenerate corpus: " + std::to_string(sat) + " sat, " +
                                       std::to_string(unsat) + " unsat");
}

void kernel_suites(Check& c) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_univariate(rng, 1 + i % 6, 9);
    const auto roots = isolate_roots(p);
    c.expect(static_cast<int>(roots.size()) == oracle::count_real_roots(univariate::from_polynomial(p, 0)),
             "root count differs for " + p.to_string());
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) c.expect(roots[k] < roots[k + 1], "roots unordered");
  }

  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 3, v = n - 1;
    const auto p = random_poly(rng, n, 4, 5), r = random_poly(rng, n, 4, 5);
    if (p.degree(v) == 0 || r.degree(v) == 0) {
      --i;
      continue;
    }
    c.expect(resultant(p, r, v) == oracle::sylvester_resultant(p, r, v),
             "resultant differs for " + p.to_string() + " | " + r.to_string());
  }

  oracle::IntervalFamilyGenerator gen(rng);
  const auto x = var(1, 0);
  for (int round = 0; round < 1000; ++round) {
    const auto family = gen.family();
    const auto probes = oracle::dense_probes(family);
    const bool covers = oracle::covers_by_probes(family, probes);
    c.expect(is_covering(family) == covers, "is_covering differs");
    const auto s = sample_outside(family);
    c.expect(s.has_value() != covers, "sample_outside existence differs");
    if (s) c.expect(!oracle::member(family, *s), "sample inside the family");
    const auto closed = close_up(family);
    for (const auto& pt : probes)
      c.expect(!oracle::member(family, pt) || oracle::member(closed, pt), "close_up lost a point");
    if (!covers) continue;
    std::vector<CellRep> cells;
    for (std::size_t i = 0; i < family.size(); ++i) {
      CellRep cell;
      cell.id = static_cast<int>(i);
      cell.interval = family[i];
      cell.polys = {x};
      cell.closed_flag = i % 2 == 0;
      cells.push_back(std::move(cell));
    }
    for (auto h : {Heuristic::MinCount, Heuristic::ClosedFirst}) {
      const auto sel = select_covering(cells, h);
      c.expect(is_covering(sel), "selection does not cover");
      if (h == Heuristic::MinCount)
        c.expect(sel.size() == oracle::minimum_cover_size(family), "selection not minimal");
    }
  }
}

void stats_plumbing(Check& c) {
  std::mt19937_64 rng(31);
  std::vector<Formula> instances{two_parabolas(), two_parabolas(true), paraboloid_spheres()};
  for (int k = 0; k < 600; ++k) {
    FuzzOptions opts;
    auto f = random_formula(rng, opts);
    // Mostly all-strict, without disequalities.
    if (k % 4 != 0)
      for (auto& con : f.constraints) con.relation = con.relation == Relation::Lt || con.relation == Relation::Le
                                                         ? Relation::Lt
                                                         : Relation::Gt;
    instances.push_back(std::move(f));
  }
  std::size_t fully_closed = 0;
  for (const auto& f : instances) {
    const bool all_strict = std::all_of(f.constraints.begin(), f.constraints.end(), [](const Constraint& con) {
      return con.relation == Relation::Lt || con.relation == Relation::Gt;
    });
    for (auto v : kVariants) {
      SolveResult result;
      const auto r = solve_and_report("i", f, v, &result);
      c.expect(r.verdict != "error", "solver error on " + f.to_string());
      const double ratio = r.closed_ratio(), depth = r.relative_max_closed_depth();
      c.expect(ratio >= 0 && ratio <= 1, "closed_ratio out of range");
      c.expect(depth >= 0 && depth <= 1, "relative depth out of range");
      c.expect(r.stats.max_closed_depth <= r.stats.max_depth, "max_closed_depth > max_depth");
      c.expect(StatsReport::from_json(r.to_json()).to_json() == r.to_json(), "JSON round trip");
      if (v == Variant::Base) c.expect(r.stats.cells_closed == 0, "BASE closed a cell");
      if (v != Variant::Base && all_strict && !result.sat && r.stats.cells_created > 0) {
        c.expect(ratio == 1, "closed_ratio " + std::to_string(ratio) + " on strict " + f.to_string());
        ++fully_closed;
      }
    }
  }
  c.note = std::to_string(fully_closed) + " fully closed unsat runs";
  c.expect(fully_closed > 10, "too few all-strict unsat instances: " + std::to_string(fully_closed));
}

struct Criterion {
  int number;
  std::string name;
  double limit_s;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "projection exactness", 1, projection_exactness},
      {2, "interval tables", 1, interval_tables},
      {3, "closed generalization", 2, closed_generalization},
      {4, "sample-count reduction", 5, sample_reduction},
      {5, "instance verdicts", 5, instance_verdicts},
      {6, "skipped section", 1, skipped_section},
      {7, "differential soundness", 600, differential},
      {8, "kernel property suites", 300, kernel_suites},
      {9, "stats plumbing", 60, stats_plumbing},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s > cr.limit_s) check.failures.push_back("over the time limit");
    const bool ok = check.failures.empty();
    failed += ok ? 0 : 1;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " " << cr.number << " " << cr.name << " (" << std::fixed
         << std::setprecision(2) << s << " s, limit " << std::setprecision(0) << cr.limit_s << " s)";
    if (!check.note.empty()) line << " [" << check.note << "]";
    for (const auto& why : check.failures) line << "; " << why;
    std::cout << line.str() << std::endl;
  }
  return failed ? 1 : 0;
}
