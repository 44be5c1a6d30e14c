#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "calc/harness.hpp"

namespace calc {

Formula random_formula(std::mt19937_64& rng, const FuzzOptions& options) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Formula f;
  const std::size_t n = options.vars ? options.vars : static_cast<std::size_t>(uniform(2, 3));
  for (std::size_t i = 0; i < n; ++i) f.variables.push_back("x" + std::to_string(i + 1));

  const int count = uniform(1, static_cast<int>(options.max_constraints));
  while (f.constraints.size() < static_cast<std::size_t>(count)) {
    std::vector<Term> terms;
    const int size = uniform(1, 4);
    for (int t = 0; t < size; ++t) {
      Monomial m(n, 0);
      const int deg = uniform(0, static_cast<int>(options.degree));
      for (int d = 0; d < deg; ++d) ++m[static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1))];
      int c = 0;
      while (c == 0) c = uniform(-options.coefficient_range, options.coefficient_range);
      terms.push_back(Term{std::move(m), Rational(c)});
    }
    auto p = Polynomial::from_terms(n, std::move(terms));
    if (p.is_constant()) continue;
    f.constraints.push_back({std::move(p), static_cast<Relation>(uniform(0, 5))});
  }
  return f;
}

namespace {

bool origin_matches(const RootOrigin* o, std::size_t var, std::size_t n,
                    std::span<const RealAlgebraicNumber> prefix) {
  if (!o || o->poly.num_vars() != n || o->prefix.size() != var || prefix.size() < var) return false;
  for (std::size_t j = 0; j < var; ++j)
    if (o->prefix[j] != prefix[j]) return false;
  return true;
}

}  // namespace

Formula pin(const Formula& f, std::size_t var, const RealAlgebraicNumber& v,
            std::span<const RealAlgebraicNumber> prefix) {
  Formula g = f;
  const std::size_t n = f.num_vars();
  const auto x = Polynomial::variable(n, var);
  if (v.is_rational()) {
    g.constraints.push_back({x - Polynomial::constant(n, v.rational()), Relation::Eq});
    return g;
  }
  // The isolating interval separates v from every root of the origin
  // polynomial over the prefix, as those are roots of the defining one.
  const auto q = origin_matches(v.origin(), var, n, prefix)
                     ? v.origin()->poly
                     : univariate::to_polynomial(univariate::to_rational(v.defining()), n, var);
  g.constraints.push_back({q, Relation::Eq});
  g.constraints.push_back({x - Polynomial::constant(n, v.lower()), Relation::Gt});
  g.constraints.push_back({x - Polynomial::constant(n, v.upper()), Relation::Lt});
  return g;
}

namespace {

void check_cell(const Formula& f, const CellRep& c, VerifyReport& report) {
  const std::size_t level = c.sample.size();
  Formula prefix = f;
  for (std::size_t j = 0; j + 1 < level; ++j) prefix = pin(prefix, j, c.sample[j], c.sample);

  std::vector<RealAlgebraicNumber> points;
  if (c.interval.is_point()) {
    points.push_back(c.interval.lower.value);
  } else {
    points.emplace_back(simplest_rational_in(c.interval));
    if (c.interval.lower.is_closed()) points.push_back(c.interval.lower.value);
    if (c.interval.upper.is_closed()) points.push_back(c.interval.upper.value);
  }
  ++report.cells_checked;
  for (const auto& v : points) {
    ++report.pins_checked;
    if (!solve(pin(prefix, level - 1, v, c.sample), Variant::Base).sat) continue;
    std::string where;
    for (std::size_t j = 0; j + 1 < level; ++j) where += c.sample[j].approx_string() + ", ";
    report.violations.push_back(PinViolation{c.id, level, "(" + where + v.approx_string() + ")"});
  }
}

}  // namespace

VerifyReport verify_result(const Formula& f, const SolveResult& result) {
  VerifyReport report;
  report.unsat = !result.sat;
  std::set<int> seen;
  if (!result.sat) {
    for (const auto& c : result.covering) {
      seen.insert(c.id);
      check_cell(f, c, report);
    }
  }
  for (const auto& c : result.derived)
    if (seen.insert(c.id).second) check_cell(f, c, report);
  return report;
}

VerifyReport run_verify(const Formula& f, Variant variant) { return verify_result(f, solve(f, variant)); }

StatsReport solve_and_report(const std::string& name, const Formula& f, Variant variant,
                             SolveResult* result) {
  StatsReport r;
  r.instance = name;
  r.variant = to_string(variant);
  const auto start = std::chrono::steady_clock::now();
  try {
    auto res = solve(f, variant);
    r.verdict = res.sat ? "sat" : "unsat";
    r.stats = res.stats;
    if (result) *result = std::move(res);
  } catch (const std::exception&) {
    r.verdict = "error";
  }
  r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CompareOutcome run_compare(const std::vector<Instance>& instances, const std::vector<Variant>& variants,
                           unsigned jobs) {
  const std::size_t total = instances.size() * variants.size();
  std::vector<StatsReport> rows(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      const auto& inst = instances[k / variants.size()];
      rows[k] = solve_and_report(inst.name, inst.formula, variants[k % variants.size()]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(jobs, 1u); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<std::string> names;
  for (const auto& inst : instances) names.push_back(inst.name);
  return summarize(std::move(rows), names, variants.size());
}

CompareOutcome summarize(std::vector<StatsReport> rows, const std::vector<std::string>& names,
                         std::size_t variants) {
  CompareOutcome out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::set<std::string> verdicts;
    for (std::size_t v = 0; v < variants; ++v) verdicts.insert(rows[i * variants + v].verdict);
    if (verdicts.size() > 1) out.disagreements.push_back(names[i]);
  }
  out.rows = std::move(rows);
  return out;
}

}  // namespace calc
