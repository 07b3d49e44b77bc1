#include "affschur/linear_span.hpp"

namespace affschur {

int KeyIndex::id(const PeriodicMatrix& key) {
  auto [it, inserted] = ids_.try_emplace(key, static_cast<int>(keys_.size()));
  if (inserted) keys_.push_back(key);
  return it->second;
}

int KeyIndex::find(const PeriodicMatrix& key) const {
  auto it = ids_.find(key);
  return it == ids_.end() ? -1 : it->second;
}

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (sgn(a) == 0) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (sgn(it->second) == 0) y.erase(it);
    }
  }
}

RationalSpan::Reduction RationalSpan::reduce(const SparseVector& v) const {
  Reduction out;
  SparseVector work = v;
  while (!work.empty()) {
    auto first = work.begin();
    const int k = first->first;
    const Rational c = first->second;
    auto row = rows_.find(k);
    if (row == rows_.end()) {
      out.residual.emplace(k, c);
      work.erase(first);
      continue;
    }
    axpy(work, -c, row->second.vec);
    axpy(out.combination, c, row->second.provenance);
  }
  return out;
}

bool RationalSpan::add(const SparseVector& v, int source) {
  auto red = reduce(v);
  if (red.residual.empty()) return false;
  Row row;
  row.provenance.emplace(source, Rational(1));
  axpy(row.provenance, Rational(-1), red.combination);
  const Rational lead = red.residual.begin()->second;
  const Rational inv = 1 / lead;
  for (auto& [k, c] : red.residual) c *= inv;
  for (auto& [k, c] : row.provenance) c *= inv;
  row.vec = std::move(red.residual);
  rows_.emplace(row.vec.begin()->first, std::move(row));
  return true;
}

}  // namespace affschur
