#include <algorithm>

#include "calc/solver.hpp"

namespace calc {

namespace {

class Collector {
 public:
  Collector(std::size_t var, const SamplePoint& s) : var_(var), s_(s) {}

  void add(const Polynomial& p) {
    if (p.is_zero() || p.is_constant()) return;
    insert_sorted_unique(out_, normalize(p));
  }

  void discriminant_of(const Polynomial& p) {
    if (p.degree(var_) >= 2) add(discriminant(p, var_));
  }

  // Leading coefficient downwards until one is nonzero at s; all of them if
  // p vanishes identically over s.
  void required_coefficients(const Polynomial& p) {
    for (const auto& c : coefficients(p, var_)) {
      if (c.is_zero()) continue;
      add(c);
      if (sign_at(c, s_) != Sign::Zero) return;
    }
  }

  void resultant_of(const Polynomial& p, const Polynomial& q) {
    if (p == q || p.degree(var_) == 0 || q.degree(var_) == 0) return;
    const Polynomial r = resultant(p, q, var_);
    if (!r.is_zero()) {
      add(r);
      return;
    }
    // Common factor: its roots are ordered against the rest by the
    // discriminants, so only the cofactors need a resultant.
    const Polynomial g = gcd(p, q);
    resultant_of(divide_exact(p, g), divide_exact(q, g));
  }

  std::vector<Polynomial> take() { return coprime_basis(std::move(out_)); }

 private:
  std::size_t var_;
  const SamplePoint& s_;
  std::vector<Polynomial> out_;
};

}  // namespace

std::vector<Polynomial> construct_characterization(std::span<const CellRep> selected,
                                                   const SamplePoint& s) {
  const std::size_t var = s.size();
  Collector out(var, s);
  const bool single_line = selected.size() == 1 && !selected[0].interval.lower.finite() &&
                           !selected[0].interval.upper.finite();
  for (std::size_t j = 0; j < selected.size(); ++j) {
    const CellRep& c = selected[j];
    for (const auto& p : c.polys) {
      if (p.degree(var) == 0) {
        out.add(p);
        continue;
      }
      out.discriminant_of(p);
      out.required_coefficients(p);
    }
    if (single_line) break;
    for (const auto& p : c.polys) {
      for (const auto& q : c.lower_polys) out.resultant_of(p, q);
      for (const auto& q : c.upper_polys) out.resultant_of(p, q);
    }
    if (j + 1 < selected.size()) {
      for (const auto& p : c.upper_polys)
        for (const auto& q : selected[j + 1].lower_polys) out.resultant_of(p, q);
    }
  }
  return out.take();
}

CellRep interval_from_characterization(const std::vector<Polynomial>& P, const SamplePoint& s,
                                       const RealAlgebraicNumber& s_last,
                                       std::span<const CellRep> parents, Variant variant) {
  const std::size_t var = s.size();
  struct Root {
    RealAlgebraicNumber value;
    std::size_t poly;
  };
  std::optional<Root> below, above;
  std::vector<std::size_t> at_point;
  std::vector<std::size_t> below_polys, above_polys;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (P[i].main_var() != static_cast<int>(var)) continue;
    const auto sr = specialize_roots(P[i], s);
    if (sr.nullified) continue;
    for (const auto& r : sr.roots) {
      const auto c = compare(r, s_last);
      if (c == 0) {
        at_point.push_back(i);
      } else if (c < 0) {
        const auto d = below ? compare(r, below->value) : std::strong_ordering::greater;
        if (d > 0) {
          below = Root{r, i};
          below_polys.assign(1, i);
        } else if (d == 0) {
          below_polys.push_back(i);
        }
      } else {
        const auto d = above ? compare(r, above->value) : std::strong_ordering::less;
        if (d < 0) {
          above = Root{r, i};
          above_polys.assign(1, i);
        } else if (d == 0) {
          above_polys.push_back(i);
        }
      }
    }
  }

  CellRep cell;
  cell.polys = P;
  cell.sample = s;
  cell.sample.push_back(s_last);
  bool flag = uses_flags(variant);
  unsigned depth = 0;
  for (const auto& p : parents) {
    flag = flag && p.closed_flag;
    depth = std::max(depth, p.depth);
    cell.parents.push_back(p.id);
  }
  cell.closed_flag = flag;
  cell.depth = depth + 1;

  if (!at_point.empty()) {
    cell.interval = Interval::point(s_last);
    for (std::size_t i : at_point) {
      cell.lower_polys.push_back(P[i]);
      cell.upper_polys.push_back(P[i]);
    }
    return cell;
  }
  auto make = [&](const RealAlgebraicNumber& v) { return flag ? Bound::closed(v) : Bound::open(v); };
  cell.interval.lower = below ? make(below->value) : Bound::neg_inf();
  cell.interval.upper = above ? make(above->value) : Bound::pos_inf();
  for (std::size_t i : below_polys) cell.lower_polys.push_back(P[i]);
  for (std::size_t i : above_polys) cell.upper_polys.push_back(P[i]);
  return cell;
}

}  // namespace calc
