#include "affschur/periodic_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace affschur {

PeriodicMatrix::PeriodicMatrix(int n, std::vector<MatrixEntry> entries) : n_(n) {
  if (n < 1) throw std::invalid_argument("period n must be positive");
  for (auto& e : entries) {
    if (e.value <= 0) throw std::invalid_argument("periodic matrix entries must be positive");
    int k = floor_div(e.row - 1, n);
    e.row -= k * n;
    e.col -= k * n;
  }
  std::sort(entries.begin(), entries.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  for (const auto& e : entries) {
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
      entries_.back().value += e.value;
    } else {
      entries_.push_back(e);
    }
    r_ += e.value;
  }
}

int PeriodicMatrix::at(int i, int j) const {
  int k = floor_div(i - 1, n_);
  i -= k * n_;
  j -= k * n_;
  for (const auto& e : entries_)
    if (e.row == i && e.col == j) return e.value;
  return 0;
}

Composition PeriodicMatrix::row_sums() const {
  std::vector<int> s(static_cast<std::size_t>(n_), 0);
  for (const auto& e : entries_) s[static_cast<std::size_t>(e.row - 1)] += e.value;
  return Composition(std::move(s));
}

Composition PeriodicMatrix::col_sums() const {
  std::vector<int> s(static_cast<std::size_t>(n_), 0);
  for (const auto& e : entries_) s[static_cast<std::size_t>(residue(e.col, n_) - 1)] += e.value;
  return Composition(std::move(s));
}

int PeriodicMatrix::spread() const {
  int s = 0;
  for (const auto& e : entries_) s = std::max(s, std::abs(floor_div(e.col - 1, n_)));
  return s;
}

PeriodicMatrix PeriodicMatrix::transpose() const {
  std::vector<MatrixEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return PeriodicMatrix(n_, std::move(t));
}

bool PeriodicMatrix::is_translation_type() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const MatrixEntry& e) { return residue(e.col, n_) == e.row; });
}

std::size_t PeriodicMatrix::hash() const {
  // FNV-1a over (n, row, col, value).
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
    h *= 1099511628211ull;
  };
  mix(n_);
  for (const auto& e : entries_) {
    mix(e.row);
    mix(e.col);
    mix(e.value);
  }
  return h;
}

PeriodicMatrix diag(const Composition& lam) {
  std::vector<MatrixEntry> es;
  for (int i = 1; i <= lam.n(); ++i)
    if (lam.part(i) > 0) es.push_back({i, i, lam.part(i)});
  return PeriodicMatrix(lam.n(), std::move(es));
}

PeriodicMatrix matrix_of_pair(const MultiIndex& i, const MultiIndex& j, int n) {
  if (i.size() != j.size()) throw std::invalid_argument("matrix_of_pair: length mismatch");
  std::vector<MatrixEntry> es;
  es.reserve(static_cast<std::size_t>(i.size()));
  for (int t = 0; t < i.size(); ++t) es.push_back({i[t], j[t], 1});
  return PeriodicMatrix(n, std::move(es));
}

IndexPair pair_of_matrix(const PeriodicMatrix& a) {
  IndexPair out;
  for (const auto& e : a.entries()) {
    for (int k = 0; k < e.value; ++k) {
      out.first.entries.push_back(e.row);
      out.second.entries.push_back(e.col);
    }
  }
  return out;
}

namespace {

struct BasisEnumerator {
  int n;
  int max_spread;
  std::vector<int> row_target;
  std::optional<std::vector<int>> col_budget;
  std::vector<int> cols;  // candidate columns, shared by every row
  std::vector<MatrixEntry> cur;
  std::vector<PeriodicMatrix> out;

  void run_row(int row) {
    if (row > n) {
      if (col_budget && std::any_of(col_budget->begin(), col_budget->end(), [](int b) { return b != 0; })) return;
      out.emplace_back(n, cur);
      return;
    }
    fill(row, 0, row_target[static_cast<std::size_t>(row - 1)]);
  }

  void fill(int row, std::size_t col_idx, int remaining) {
    if (remaining == 0) {
      run_row(row + 1);
      return;
    }
    if (col_idx == cols.size()) return;
    const int col = cols[col_idx];
    const auto res = static_cast<std::size_t>(residue(col, n) - 1);
    int cap = remaining;
    if (col_budget) cap = std::min(cap, (*col_budget)[res]);
    for (int v = cap; v >= 0; --v) {
      if (v > 0) {
        cur.push_back({row, col, v});
        if (col_budget) (*col_budget)[res] -= v;
      }
      fill(row, col_idx + 1, remaining - v);
      if (v > 0) {
        cur.pop_back();
        if (col_budget) (*col_budget)[res] += v;
      }
    }
  }
};

}  // namespace

std::vector<PeriodicMatrix> enumerate_basis(int n, int r, int max_spread, const std::optional<Composition>& row,
                                            const std::optional<Composition>& col) {
  if (n < 1 || r < 0 || max_spread < 0) throw std::invalid_argument("enumerate_basis: bad parameters");
  if ((row && (row->n() != n || row->r() != r)) || (col && (col->n() != n || col->r() != r)))
    throw std::invalid_argument("enumerate_basis: marginal does not lie in Lambda(n, r)");
  BasisEnumerator en{n, max_spread, {}, std::nullopt, {}, {}, {}};
  for (int c = 1 - max_spread * n; c <= n + max_spread * n; ++c) en.cols.push_back(c);
  if (col) en.col_budget = col->parts();
  std::vector<Composition> rows = row ? std::vector<Composition>{*row} : compositions(n, r);
  for (const auto& rw : rows) {
    en.row_target = rw.parts();
    en.run_row(1);
  }
  std::sort(en.out.begin(), en.out.end());
  return en.out;
}

}  // namespace affschur
