#include "affschur/algebra.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

namespace affschur {

AlgebraElement::AlgebraElement(int n, int r) : n_(n), r_(r) {
  if (n < 1 || r < 0) throw std::invalid_argument("algebra element needs n >= 1, r >= 0");
}

AlgebraElement AlgebraElement::basis(const PeriodicMatrix& a) {
  AlgebraElement x(a.n(), a.r());
  x.terms_.emplace(a, Integer(1));
  return x;
}

Integer AlgebraElement::coefficient(const PeriodicMatrix& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Integer(0) : it->second;
}

void AlgebraElement::add_term(const PeriodicMatrix& a, const Integer& c) {
  if (a.n() != n_ || a.r() != r_) throw AmbientMismatch("basis key does not lie in S(n, r) of this element");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void AlgebraElement::check_ambient(const AlgebraElement& o) const {
  if (o.n_ != n_ || o.r_ != r_) throw AmbientMismatch("algebra elements live in different S(n, r)");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_ambient(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_ambient(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    os << (first ? "" : " + ") << c.get_str() << "*e[";
    bool f2 = true;
    for (const auto& e : k.entries()) {
      os << (f2 ? "" : " ") << e.row << ',' << e.col << ':' << e.value;
      f2 = false;
    }
    os << ']';
    first = false;
  }
  return os.str();
}

namespace {

void check_pair(const PeriodicMatrix& a, const PeriodicMatrix& b) {
  if (a.n() != b.n() || a.r() != b.r()) throw AmbientMismatch("basis elements live in different S(n, r)");
}

/// Calls f(s) for every s with matrix_of_pair(p, s) == a. Positions are
/// grouped by the residue of p_t; each group receives a distinct arrangement
/// of the column offsets that row of `a` carries.
void for_each_partner(const PeriodicMatrix& a, const MultiIndex& p, const std::function<void(const MultiIndex&)>& f) {
  const int n = a.n();
  const int r = p.size();
  if (r != a.r()) return;
  std::vector<std::vector<int>> positions(static_cast<std::size_t>(n));
  for (int t = 0; t < r; ++t) positions[static_cast<std::size_t>(residue(p[t], n) - 1)].push_back(t);
  std::vector<std::vector<int>> offsets(static_cast<std::size_t>(n));
  for (const auto& e : a.entries())
    for (int k = 0; k < e.value; ++k) offsets[static_cast<std::size_t>(e.row - 1)].push_back(e.col - e.row);
  for (int x = 0; x < n; ++x)
    if (positions[static_cast<std::size_t>(x)].size() != offsets[static_cast<std::size_t>(x)].size()) return;

  MultiIndex s(std::vector<int>(static_cast<std::size_t>(r), 0));
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      f(s);
      return;
    }
    const auto& pos = positions[static_cast<std::size_t>(x)];
    std::vector<int> arr = offsets[static_cast<std::size_t>(x)];
    std::sort(arr.begin(), arr.end());
    do {
      for (std::size_t k = 0; k < pos.size(); ++k) s[pos[k]] = p[pos[k]] + arr[k];
      rec(x + 1);
    } while (std::next_permutation(arr.begin(), arr.end()));
  };
  rec(0);
}

}  // namespace

Integer structure_constant(const PeriodicMatrix& a, const PeriodicMatrix& b, const MultiIndex& p,
                           const MultiIndex& q) {
  check_pair(a, b);
  Integer count = 0;
  for_each_partner(a, p, [&](const MultiIndex& s) {
    if (matrix_of_pair(s, q, a.n()) == b) ++count;
  });
  return count;
}

AlgebraElement multiply_basis_oracle(const PeriodicMatrix& a, const PeriodicMatrix& b) {
  check_pair(a, b);
  AlgebraElement out(a.n(), a.r());
  if (a.col_sums() != b.row_sums()) return out;
  const MultiIndex p = pair_of_matrix(a).first;
  std::set<PeriodicMatrix> candidates;
  for_each_partner(a, p, [&](const MultiIndex& s) {
    for_each_partner(b, s, [&](const MultiIndex& q) { candidates.insert(matrix_of_pair(p, q, a.n())); });
  });
  for (const auto& c : candidates) {
    auto [pc, qc] = pair_of_matrix(c);
    Integer coeff = structure_constant(a, b, pc, qc);
    if (sgn(coeff) == 0) throw std::logic_error("discovered product key has zero structure constant");
    out.add_term(c, coeff);
  }
  return out;
}

AlgebraElement multiply_basis_coset(const PeriodicMatrix& a, const PeriodicMatrix& b) {
  check_pair(a, b);
  const int n = a.n();
  AlgebraElement out(n, a.r());
  if (a.col_sums() != b.row_sums()) return out;
  const auto [i, j] = pair_of_matrix(a);
  const auto [jb, lb] = pair_of_matrix(b);
  const int r = i.size();

  // Move (jb, lb) along its orbit so its first index becomes j.
  std::vector<std::vector<int>> by_residue(static_cast<std::size_t>(n));
  for (int t = r - 1; t >= 0; --t) by_residue[static_cast<std::size_t>(jb[t] - 1)].push_back(t);
  std::vector<int> sigma(static_cast<std::size_t>(r));
  std::vector<int> eps(static_cast<std::size_t>(r));
  for (int t = 0; t < r; ++t) {
    auto& pool = by_residue[static_cast<std::size_t>(residue(j[t], n) - 1)];
    sigma[static_cast<std::size_t>(t)] = pool.back();
    pool.pop_back();
    eps[static_cast<std::size_t>(t)] = (j[t] - jb[sigma[static_cast<std::size_t>(t)]]) / n;
  }
  const MultiIndex l = act(lb, {Permutation(sigma), eps}, n);

  std::vector<int> key_j;
  std::vector<std::pair<int, int>> key_jl, key_ij;
  for (int t = 0; t < r; ++t) {
    key_j.push_back(residue(j[t], n));
    key_jl.emplace_back(residue(j[t], n), l[t] - j[t]);
    key_ij.emplace_back(i[t], j[t] - i[t]);
  }
  const auto g_j = YoungSubgroup::from_keys(key_j);
  const auto g_jl = YoungSubgroup::from_keys(key_jl);
  const auto g_ij = YoungSubgroup::from_keys(key_ij);

  for (const auto& delta : double_cosets(g_jl, g_j, g_ij)) {
    std::vector<int> lift(static_cast<std::size_t>(r));
    for (int t = 0; t < r; ++t) lift[static_cast<std::size_t>(t)] = (j[t] - j[delta(t)]) / n;
    const MultiIndex ld = act(l, {delta, lift}, n);
    std::vector<std::pair<int, int>> key_il;
    std::vector<std::tuple<int, int, int>> key_ijl;
    for (int t = 0; t < r; ++t) {
      key_il.emplace_back(i[t], ld[t] - i[t]);
      key_ijl.emplace_back(i[t], j[t] - i[t], ld[t] - i[t]);
    }
    const auto idx = subgroup_index(YoungSubgroup::from_keys(key_il), YoungSubgroup::from_keys(key_ijl));
    out.add_term(matrix_of_pair(i, ld, n), Integer(static_cast<unsigned long>(idx)));
  }
  return out;
}

std::string to_string(MultiplyMethod m) {
  switch (m) {
    case MultiplyMethod::Oracle:
      return "oracle";
    case MultiplyMethod::Coset:
      return "coset";
    case MultiplyMethod::CrossCheck:
      return "cross-check";
  }
  return "?";
}

MultiplyMethod parse_method(std::string_view text) {
  if (text == "oracle") return MultiplyMethod::Oracle;
  if (text == "coset") return MultiplyMethod::Coset;
  if (text == "cross-check" || text == "crosscheck") return MultiplyMethod::CrossCheck;
  throw std::invalid_argument("unknown method '" + std::string(text) + "' (oracle | coset | cross-check)");
}

std::shared_ptr<const AlgebraElement> StructureConstantTable::find(const PeriodicMatrix& a,
                                                                   const PeriodicMatrix& b) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find({a, b});
  return it == table_.end() ? nullptr : it->second;
}

std::shared_ptr<const AlgebraElement> StructureConstantTable::store(const PeriodicMatrix& a, const PeriodicMatrix& b,
                                                                    AlgebraElement value) {
  auto ptr = std::make_shared<const AlgebraElement>(std::move(value));
  std::unique_lock lock(mutex_);
  table_[{a, b}] = ptr;
  return ptr;
}

std::size_t StructureConstantTable::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

Multiplier::Multiplier(MultiplyMethod method)
    : method_(method), table_(std::make_shared<StructureConstantTable>()) {}

const AlgebraElement& Multiplier::basis_product(const PeriodicMatrix& a, const PeriodicMatrix& b) {
  if (auto hit = table_->find(a, b)) return *hit;
  AlgebraElement value(a.n(), a.r());
  switch (method_) {
    case MultiplyMethod::Oracle:
      value = multiply_basis_oracle(a, b);
      break;
    case MultiplyMethod::Coset:
      value = multiply_basis_coset(a, b);
      break;
    case MultiplyMethod::CrossCheck: {
      value = multiply_basis_oracle(a, b);
      auto other = multiply_basis_coset(a, b);
      if (value != other) {
        throw MethodDisagreement("oracle and coset products disagree: oracle " + to_string(value) + " vs coset " +
                                 to_string(other));
      }
      break;
    }
  }
  return *table_->store(a, b, std::move(value));
}

AlgebraElement Multiplier::operator()(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.n() != y.n() || x.r() != y.r()) throw AmbientMismatch("cannot multiply elements of different S(n, r)");
  AlgebraElement out(x.n(), x.r());
  for (const auto& [ka, ca] : x.terms()) {
    for (const auto& [kb, cb] : y.terms()) {
      if (ka.col_sums() != kb.row_sums()) continue;
      const auto& prod = basis_product(ka, kb);
      Integer c = ca * cb;
      for (const auto& [k, v] : prod.terms()) out.add_term(k, c * v);
    }
  }
  return out;
}

AlgebraElement identity(int n, int r) {
  AlgebraElement x(n, r);
  for (const auto& lam : compositions(n, r)) x.add_term(diag(lam), 1);
  return x;
}

AlgebraElement idempotent(const Composition& lam) { return AlgebraElement::basis(diag(lam)); }

AlgebraElement antiauto(const AlgebraElement& x) {
  AlgebraElement out(x.n(), x.r());
  for (const auto& [k, c] : x.terms()) out.add_term(k.transpose(), c);
  return out;
}

}  // namespace affschur
