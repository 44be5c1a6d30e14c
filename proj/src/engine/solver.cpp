#include <algorithm>
#include <stdexcept>

#include "calc/solver.hpp"

namespace calc {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Base:
      return "base";
    case Variant::Closed:
      return "closed";
    case Variant::ClosedHeuristic:
      return "closed-heuristic";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "base") return Variant::Base;
  if (s == "closed") return Variant::Closed;
  if (s == "closed-heuristic") return Variant::ClosedHeuristic;
  return std::nullopt;
}

namespace {

struct LineRoot {
  RealAlgebraicNumber value;
  std::vector<std::size_t> factors;
};

// Distinct roots of the factors on the line over s, increasing.
std::vector<LineRoot> line_roots(const std::vector<Polynomial>& factors, const SamplePoint& s) {
  std::vector<LineRoot> roots;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (auto& r : specialize_roots(factors[i], s).roots) {
      auto it = std::lower_bound(roots.begin(), roots.end(), r,
                                 [](const LineRoot& a, const RealAlgebraicNumber& b) { return a.value < b; });
      if (it != roots.end() && it->value == r) {
        it->factors.push_back(i);
      } else {
        roots.insert(it, LineRoot{std::move(r), {i}});
      }
    }
  }
  return roots;
}

struct Piece {
  Interval interval;
  RealAlgebraicNumber sample;
};

CellRep whole_line_cell(std::vector<Polynomial> polys, const SamplePoint& s, bool flag) {
  CellRep c;
  c.polys = std::move(polys);
  c.sample = s;
  c.sample.emplace_back(0);
  c.interval = Interval::whole();
  c.closed_flag = flag;
  return c;
}

void cells_for_constraint(const Constraint& con, std::size_t index, const SamplePoint& s,
                          Variant variant, std::vector<CellRep>& out) {
  const std::size_t var = s.size();
  const bool flags = uses_flags(variant);
  if (con.poly.is_constant()) {
    if (!holds(con.relation, sign_of(con.poly.constant_value()))) {
      out.push_back(whole_line_cell({}, s, flags));
      out.back().constraint_index = index;
    }
    return;
  }
  const auto factors = normalize(con.poly);
  for (const auto& f : factors) {
    if (!specialize_roots(f, s).nullified) continue;
    // The constraint reads 0 ~ 0 on the whole line, as long as all
    // coefficients of this factor keep vanishing.
    if (!holds(con.relation, Sign::Zero)) {
      std::vector<Polynomial> coeffs;
      for (const auto& c : coefficients(f, var))
        if (!c.is_zero() && !c.is_constant()) insert_sorted_unique(coeffs, normalize(c));
      out.push_back(whole_line_cell(std::move(coeffs), s, flags));
      out.back().constraint_index = index;
    }
    return;
  }

  const auto roots = line_roots(factors, s);
  SamplePoint point = s;
  point.emplace_back(0);
  auto is_false_at = [&](const RealAlgebraicNumber& v) {
    point.back() = v;
    return !holds(con.relation, sign_at(con.poly, point));
  };

  std::vector<Piece> pieces;
  for (std::size_t j = 0; j <= roots.size(); ++j) {
    Interval sector{j == 0 ? Bound::neg_inf() : Bound::open(roots[j - 1].value),
                    j == roots.size() ? Bound::pos_inf() : Bound::open(roots[j].value)};
    RealAlgebraicNumber sample(simplest_rational_in(sector));
    if (is_false_at(sample)) pieces.push_back(Piece{std::move(sector), std::move(sample)});
    if (j < roots.size() && is_false_at(roots[j].value))
      pieces.push_back(Piece{Interval::point(roots[j].value), roots[j].value});
  }

  auto factors_at = [&](const Bound& b) {
    std::vector<Polynomial> ps;
    if (!b.finite()) return ps;
    for (const auto& r : roots) {
      if (r.value != b.value) continue;
      for (std::size_t i : r.factors) ps.push_back(factors[i]);
      break;
    }
    return ps;
  };
  auto emit = [&](Interval in, RealAlgebraicNumber sample, bool flag) {
    CellRep c;
    c.polys = factors;
    c.lower_polys = factors_at(in.lower);
    c.upper_polys = factors_at(in.upper);
    c.sample = s;
    c.sample.push_back(std::move(sample));
    c.interval = std::move(in);
    c.closed_flag = flag;
    c.constraint_index = index;
    out.push_back(std::move(c));
  };

  if (!flags || !con.strict()) {
    for (auto& p : pieces) emit(std::move(p.interval), std::move(p.sample), false);
    return;
  }
  std::vector<Interval> raw;
  for (const auto& p : pieces) raw.push_back(p.interval);
  for (auto& in : close_up(raw)) {
    // Prefer a sector sample, which lies in the interior.
    const Piece* chosen = nullptr;
    for (const auto& p : pieces) {
      if (!in.contains(p.sample)) continue;
      if (!chosen || (chosen->interval.is_point() && !p.interval.is_point())) chosen = &p;
    }
    bool flag = true;
    if (con.relation == Relation::Ne) flag = in.is_point() && in.lower.value.is_rational();
    emit(std::move(in), chosen->sample, flag);
  }
}

struct LevelOutcome {
  bool sat = false;
  CellRep cell;
};

class Search {
 public:
  Search(const Formula& f, Variant variant, const SolveOptions& options)
      : f_(f), variant_(variant), options_(options) {
    result_.stats.samples_per_level.assign(f.num_vars(), 0);
  }

  SolveResult run() {
    SamplePoint s;
    level(s);
    return std::move(result_);
  }

 private:
  void track(CellRep& c) {
    c.id = next_id_++;
    auto& st = result_.stats;
    st.max_depth = std::max(st.max_depth, c.depth);
    if (c.closed_flag) st.max_closed_depth = std::max(st.max_closed_depth, c.depth);
  }

  LevelOutcome level(SamplePoint& s) {
    const std::size_t i = s.size() + 1;
    const std::size_t n = f_.num_vars();
    auto cells = get_unsat_intervals(f_, s, variant_);
    for (auto& c : cells) track(c);
    const Heuristic h = variant_ == Variant::ClosedHeuristic ? Heuristic::ClosedFirst : Heuristic::MinCount;

    while (true) {
      std::optional<RealAlgebraicNumber> v;
      if (options_.sample_hook) {
        v = options_.sample_hook(i, s, cells);
        if (v) {
          for (const auto& c : cells)
            if (c.interval.contains(*v)) throw std::invalid_argument("forced sample lies in an unsat cell");
        }
      }
      if (!v) v = sample_outside(std::span<const CellRep>(cells));
      if (!v) {
        auto selected = select_covering(cells, h);
        if (i == 1) {
          result_.covering = std::move(selected);
          return {};
        }
        ++result_.stats.characterization_calls;
        const auto P = construct_characterization(selected, s);
        SamplePoint prefix(s.begin(), s.end() - 1);
        CellRep cell = interval_from_characterization(P, prefix, s.back(), selected, variant_);
        track(cell);
        ++result_.stats.cells_created;
        if (cell.closed_flag) ++result_.stats.cells_closed;
        result_.derived.push_back(cell);
        return LevelOutcome{false, std::move(cell)};
      }

      ++result_.stats.samples_per_level[i - 1];
      s.push_back(*v);
      if (i == n) {
        for (const auto& c : f_.constraints) {
          if (!holds(c.relation, sign_at(c.poly, s)))
            throw std::logic_error("sample outside all unsat cells violates " + f_.to_string());
        }
        result_.sat = true;
        result_.model = s;
        return LevelOutcome{true, {}};
      }
      auto sub = level(s);
      if (sub.sat) return sub;
      s.pop_back();
      cells.push_back(std::move(sub.cell));
    }
  }

  const Formula& f_;
  Variant variant_;
  const SolveOptions& options_;
  SolveResult result_;
  int next_id_ = 0;
};

}  // namespace

std::vector<CellRep> get_unsat_intervals(const Formula& f, const SamplePoint& s, Variant variant) {
  if (s.size() >= f.num_vars()) throw std::invalid_argument("sample already has full dimension");
  const std::size_t level = s.size() + 1;
  std::vector<CellRep> out;
  for (std::size_t k = 0; k < f.constraints.size(); ++k) {
    if (level_of(f.constraints[k]) != level) continue;
    cells_for_constraint(f.constraints[k], k, s, variant, out);
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k].id = static_cast<int>(k);
  return out;
}

SolveResult solve(const Formula& f, Variant variant, const SolveOptions& options) {
  f.validate();
  Search search(f, variant, options);
  return search.run();
}

}  // namespace calc
