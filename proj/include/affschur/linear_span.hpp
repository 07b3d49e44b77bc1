#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "affschur/periodic_matrix.hpp"
#include "affschur/scalar.hpp"

namespace affschur {

/// Interns basis keys as dense integer ids, in insertion order.
class KeyIndex {
 public:
  int id(const PeriodicMatrix& key);
  /// -1 when the key has never been interned.
  int find(const PeriodicMatrix& key) const;
  const PeriodicMatrix& key(int id) const { return keys_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return keys_.size(); }

 private:
  std::unordered_map<PeriodicMatrix, int, PeriodicMatrixHash> ids_;
  std::vector<PeriodicMatrix> keys_;
};

using SparseVector = std::map<int, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

/// Row-echelon span over Q. Each stored row remembers which combination of
/// the inserted vectors produced it, so reductions come with witnesses.
class RationalSpan {
 public:
  struct Reduction {
    SparseVector residual;     // v minus the part explained by the span
    SparseVector combination;  // source id -> coefficient
  };

  /// Inserts v tagged with `source`; returns true if the rank grew.
  bool add(const SparseVector& v, int source);
  /// v = sum combination[s] * vector(s) + residual, residual supported
  /// off every pivot.
  Reduction reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).residual.empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    SparseVector vec;  // leading entry 1 at the pivot (its smallest key)
    SparseVector provenance;
  };
  std::map<int, Row> rows_;
};

}  // namespace affschur
