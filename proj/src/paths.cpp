#include "affschur/paths.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace affschur {

namespace {

int ceil_div(int a, int b) { return -floor_div(-a, b); }

/// Range of shifts k putting (hi.row + kn, hi.col + kn) weakly up-right of
/// the explicit cell (row, col).
std::pair<int, int> shift_range(const MatrixEntry& hi, int row, int col, int n) {
  return {ceil_div(col - hi.col, n), floor_div(row - hi.row, n)};
}

std::vector<int> best_unions(const std::vector<unsigned>& masks, const std::vector<int>& weight, int n) {
  // masks must be closed under subsets; then j chains can be taken disjoint.
  const unsigned full = (1u << weight.size());
  std::vector<char> cover(full, 0);
  for (unsigned m : masks) cover[m] = 1;
  std::vector<char> cur = cover;
  auto w = [&](unsigned m) {
    int s = 0;
    for (std::size_t t = 0; t < weight.size(); ++t)
      if (m & (1u << t)) s += weight[t];
    return s;
  };
  std::vector<int> d;
  for (int j = 1; j <= n; ++j) {
    if (j > 1) {
      std::vector<char> next(full, 0);
      for (unsigned m = 0; m < full; ++m) {
        if (!cur[m]) continue;
        // extend by a chain disjoint from m
        const unsigned rest = (full - 1) & ~m;
        for (unsigned s = rest;; s = (s - 1) & rest) {
          if (cover[s]) next[m | s] = 1;
          if (s == 0) break;
        }
      }
      cur = std::move(next);
    }
    int best = 0;
    for (unsigned m = 0; m < full; ++m)
      if (cur[m]) best = std::max(best, w(m));
    d.push_back(best);
  }
  return d;
}

}  // namespace

bool up_right_of(const MatrixEntry& hi, const MatrixEntry& lo, int n) {
  if (hi.row == lo.row && hi.col == lo.col) return false;
  auto [k0, k1] = shift_range(hi, lo.row, lo.col, n);
  return k0 <= k1;
}

std::vector<int> d_values(const PeriodicMatrix& a) {
  const auto& es = a.entries();
  const int m = static_cast<int>(es.size());
  if (m > 20) throw std::invalid_argument("d_values: too many entry classes");
  std::vector<int> weight;
  for (const auto& e : es) weight.push_back(e.value);
  std::vector<unsigned> comparable(static_cast<std::size_t>(m), 0);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      if (s != t && (up_right_of(es[s], es[t], a.n()) || up_right_of(es[t], es[s], a.n())))
        comparable[static_cast<std::size_t>(s)] |= 1u << t;
  std::vector<unsigned> chains;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    bool ok = true;
    for (int s = 0; s < m && ok; ++s)
      if (mask & (1u << s)) ok = ((mask & ~(1u << s)) & ~comparable[static_cast<std::size_t>(s)]) == 0;
    if (ok) chains.push_back(mask);
  }
  return best_unions(chains, weight, a.n());
}

std::vector<int> d_values_exhaustive(const PeriodicMatrix& a) {
  const int n = a.n();
  const auto& es = a.entries();
  const int m = static_cast<int>(es.size());
  if (m > 12) throw std::invalid_argument("d_values_exhaustive: too many entry classes");

  // Cells covered by the column segment rows [lo, hi] of column c
  // (lo = -inf / hi = +inf allowed through the flags).
  auto column_cells = [&](int c, long lo, long hi, unsigned& mask) {
    for (int s = 0; s < m; ++s) {
      const auto& e = es[static_cast<std::size_t>(s)];
      if ((c - e.col) % n != 0) continue;
      const long row = e.row + (c - e.col);
      if (row >= lo && row <= hi) mask |= 1u << s;
    }
  };
  auto row_cells = [&](int x, int c0, int c1, unsigned& mask) {
    for (int s = 0; s < m; ++s) {
      const auto& e = es[static_cast<std::size_t>(s)];
      if ((x - e.row) % n != 0) continue;
      const int col = e.col + (x - e.row);
      if (col >= c0 && col <= c1) mask |= 1u << s;
    }
  };
  constexpr long kInf = 1L << 40;

  std::set<unsigned> covered{0u};
  struct Cell {
    int row, col;
  };
  std::vector<Cell> anchors;
  std::function<void(unsigned)> extend = [&](unsigned used) {
    // Literal staircase through the anchors: bottom tail, up then right
    // between anchors, top tail.
    unsigned mask = 0;
    column_cells(anchors.front().col, anchors.front().row, kInf, mask);
    for (std::size_t k = 0; k + 1 < anchors.size(); ++k) {
      const auto& p = anchors[k];
      const auto& q = anchors[k + 1];
      column_cells(p.col, q.row, p.row, mask);
      row_cells(q.row, p.col, q.col, mask);
    }
    column_cells(anchors.back().col, -kInf, anchors.back().row, mask);
    covered.insert(mask);
    const Cell last = anchors.back();
    for (int s = 0; s < m; ++s) {
      if (used & (1u << s)) continue;
      auto [k0, k1] = shift_range(es[static_cast<std::size_t>(s)], last.row, last.col, n);
      for (int k = k0; k <= k1; ++k) {
        anchors.push_back({es[static_cast<std::size_t>(s)].row + k * n, es[static_cast<std::size_t>(s)].col + k * n});
        extend(used | (1u << s));
        anchors.pop_back();
      }
    }
  };
  for (int s = 0; s < m; ++s) {
    anchors = {{es[static_cast<std::size_t>(s)].row, es[static_cast<std::size_t>(s)].col}};
    extend(1u << s);
  }

  std::vector<int> weight;
  for (const auto& e : es) weight.push_back(e.value);
  // Close under subsets so best_unions may treat chains as disjoint.
  std::set<unsigned> closed;
  for (unsigned c : covered)
    for (unsigned s = c;; s = (s - 1) & c) {
      closed.insert(s);
      if (s == 0) break;
    }
  return best_unions({closed.begin(), closed.end()}, weight, n);
}

}  // namespace affschur
