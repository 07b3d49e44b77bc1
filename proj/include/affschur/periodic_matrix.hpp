#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "affschur/combinatorics.hpp"

namespace affschur {

struct MatrixEntry {
  int row = 0;
  int col = 0;
  int value = 0;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
  friend auto operator<=>(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Element of Theta(n, r): an n-periodic ZxZ matrix (a_{i+n,j+n} = a_{i,j})
/// stored by its fundamental rows 1..n. Entries are kept sorted by
/// (row, col) with no zeros, so equality is plain vector equality and the
/// ordering is row-major on the fundamental window.
class PeriodicMatrix {
 public:
  PeriodicMatrix() = default;
  /// Rows are normalized into [1, n] along the period; repeated positions
  /// are summed. Throws std::invalid_argument on nonpositive values.
  PeriodicMatrix(int n, std::vector<MatrixEntry> entries);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<MatrixEntry>& entries() const { return entries_; }
  /// a_{i,j} for arbitrary integers i, j.
  int at(int i, int j) const;

  Composition row_sums() const;
  Composition col_sums() const;
  /// Largest distance, in periods, between a column block and the
  /// fundamental block [1, n]; zero iff supported on the n x n window.
  int spread() const;
  PeriodicMatrix transpose() const;
  /// Every entry sits on a period translate of the diagonal.
  bool is_translation_type() const;

  std::size_t hash() const;

  friend bool operator==(const PeriodicMatrix&, const PeriodicMatrix&) = default;
  friend auto operator<=>(const PeriodicMatrix& a, const PeriodicMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<MatrixEntry> entries_;
};

struct PeriodicMatrixHash {
  std::size_t operator()(const PeriodicMatrix& m) const { return m.hash(); }
};

PeriodicMatrix diag(const Composition& lam);
/// a_{x,y} = #{s : i_s = x, j_s = y}, extended periodically.
PeriodicMatrix matrix_of_pair(const MultiIndex& i, const MultiIndex& j, int n);
/// Canonical representative (see orbit_canonical) of the orbit encoded by A.
IndexPair pair_of_matrix(const PeriodicMatrix& a);

/// All A in Theta(n, r) with spread(A) <= max_spread, optionally with fixed
/// row and/or column sums. Sorted.
std::vector<PeriodicMatrix> enumerate_basis(int n, int r, int max_spread,
                                            const std::optional<Composition>& row = std::nullopt,
                                            const std::optional<Composition>& col = std::nullopt);

}  // namespace affschur
