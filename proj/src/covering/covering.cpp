#include <algorithm>
#include <limits>
#include <stdexcept>

#include "calc/covering.hpp"

namespace calc {

namespace {

std::vector<Interval> intervals_of(std::span<const CellRep> cells) {
  std::vector<Interval> v;
  v.reserve(cells.size());
  for (const auto& c : cells) v.push_back(c.interval);
  return v;
}

constexpr std::size_t kNodeBudget = 2000;
constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max() / 2;

struct Selector {
  std::span<const CellRep> cells;
  std::size_t n = 0;
  std::vector<std::size_t> upper_rank;  // equal uppers share a rank
  std::size_t top_rank = 0;             // rank of +inf, if present
  std::vector<std::vector<bool>> follows;  // follows[i][j]: j starts without a hole after i
  std::vector<std::size_t> remaining;      // greedy steps needed after i

  std::size_t k = kUnreachable;
  std::size_t nodes = 0;
  std::vector<std::size_t> best;
  std::size_t best_polys = kUnreachable;
  std::vector<std::size_t> best_sorted;

  explicit Selector(std::span<const CellRep> c) : cells(c), n(c.size()) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    auto upper_less = [&](std::size_t a, std::size_t b) {
      const Bound& x = cells[a].interval.upper;
      const Bound& y = cells[b].interval.upper;
      if (y.kind == BoundKind::PosInf) return x.kind != BoundKind::PosInf;
      if (x.kind == BoundKind::PosInf) return false;
      const auto c = compare(x.value, y.value);
      if (c != 0) return c < 0;
      return !x.is_closed() && y.is_closed();
    };
    std::stable_sort(order.begin(), order.end(), upper_less);
    upper_rank.assign(n, 0);
    for (std::size_t i = 1; i < n; ++i)
      upper_rank[order[i]] = upper_rank[order[i - 1]] + (upper_less(order[i - 1], order[i]) ? 1 : 0);

    follows.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      const Bound& reach = cells[i].interval.upper;
      for (std::size_t j = 0; j < n; ++j) {
        const Bound& lower = cells[j].interval.lower;
        bool ok;
        if (lower.kind == BoundKind::NegInf || reach.kind == BoundKind::PosInf) {
          ok = true;
        } else {
          const auto c = compare(reach.value, lower.value);
          ok = c > 0 || (c == 0 && (reach.is_closed() || lower.is_closed()));
        }
        follows[i][j] = ok && upper_rank[j] > upper_rank[i];
      }
    }

    // Greedy from the cell with the largest upper bound first.
    remaining.assign(n, kUnreachable);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t i = *it;
      if (at_end(i)) {
        remaining[i] = 0;
        continue;
      }
      std::size_t next = n;
      for (std::size_t j = 0; j < n; ++j)
        if (follows[i][j] && (next == n || upper_rank[j] > upper_rank[next])) next = j;
      if (next != n && remaining[next] != kUnreachable) remaining[i] = remaining[next] + 1;
    }
  }

  bool at_end(std::size_t i) const { return cells[i].interval.upper.kind == BoundKind::PosInf; }

  std::vector<std::size_t> candidates_first() const {
    std::vector<std::size_t> v;
    for (std::size_t j = 0; j < n; ++j)
      if (cells[j].interval.lower.kind == BoundKind::NegInf) v.push_back(j);
    sort_candidates(v);
    return v;
  }

  std::vector<std::size_t> candidates_after(std::size_t i) const {
    std::vector<std::size_t> v;
    for (std::size_t j = 0; j < n; ++j)
      if (follows[i][j]) v.push_back(j);
    sort_candidates(v);
    return v;
  }

  void sort_candidates(std::vector<std::size_t>& v) const {
    std::stable_sort(v.begin(), v.end(),
                     [&](std::size_t a, std::size_t b) { return upper_rank[a] > upper_rank[b]; });
  }

  void consider(const std::vector<std::size_t>& chain) {
    std::vector<Polynomial> polys;
    for (std::size_t i : chain) insert_sorted_unique(polys, cells[i].polys);
    std::vector<std::size_t> sorted = chain;
    std::sort(sorted.begin(), sorted.end());
    if (polys.size() < best_polys || (polys.size() == best_polys && sorted < best_sorted)) {
      best = chain;
      best_polys = polys.size();
      best_sorted = std::move(sorted);
    }
  }

  void search(std::vector<std::size_t>& chain) {
    const std::size_t i = chain.back();
    if (at_end(i)) {
      consider(chain);
      return;
    }
    for (std::size_t j : candidates_after(i)) {
      if (nodes >= kNodeBudget) return;
      if (chain.size() + 1 + remaining[j] > k) continue;
      ++nodes;
      chain.push_back(j);
      search(chain);
      chain.pop_back();
    }
  }

  std::vector<std::size_t> run() {
    for (std::size_t j : candidates_first())
      if (remaining[j] != kUnreachable) k = std::min(k, remaining[j] + 1);
    if (k == kUnreachable) throw std::invalid_argument("select_covering: cells do not cover the line");
    std::vector<std::size_t> chain;
    for (std::size_t j : candidates_first()) {
      if (1 + remaining[j] > k) continue;
      if (nodes >= kNodeBudget) break;
      ++nodes;
      chain.assign(1, j);
      search(chain);
    }
    return best;
  }
};

std::vector<CellRep> min_count(std::span<const CellRep> cells) {
  Selector s(cells);
  const auto chain = s.run();
  std::vector<CellRep> out;
  out.reserve(chain.size());
  for (std::size_t i : chain) out.push_back(cells[i]);
  return out;
}

}  // namespace

bool is_covering(std::span<const CellRep> cells) {
  const auto v = intervals_of(cells);
  return is_covering(std::span<const Interval>(v));
}

std::optional<RealAlgebraicNumber> sample_outside(std::span<const CellRep> cells) {
  const auto v = intervals_of(cells);
  return sample_outside(std::span<const Interval>(v));
}

std::vector<CellRep> select_covering(std::span<const CellRep> cells, Heuristic h) {
  if (h == Heuristic::ClosedFirst) {
    std::vector<CellRep> closed;
    for (const auto& c : cells)
      if (c.closed_flag) closed.push_back(c);
    if (!closed.empty() && is_covering(std::span<const CellRep>(closed))) return min_count(closed);
  }
  return min_count(cells);
}

}  // namespace calc
