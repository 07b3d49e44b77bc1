#include "affschur/stratification.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affschur {

std::vector<int> rho_vector(const PeriodicMatrix& a) {
  const auto d = d_values(a);
  std::vector<int> out;
  int prev = 0;
  for (int x : d) {
    out.push_back(x - prev);
    prev = x;
  }
  return out;
}

Partition rho(const PeriodicMatrix& a) {
  auto v = rho_vector(a);
  int sum = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    sum += v[k];
    if (v[k] < 0 || (k > 0 && v[k] > v[k - 1]))
      throw std::logic_error("rho: increments of d are not a partition");
  }
  if (sum != a.r()) throw std::logic_error("rho: d_n differs from r");
  return Partition(std::move(v));
}

CellLabel cell_label(const PeriodicMatrix& a) {
  CellLabel c{rho(a), 0};
  c.chain_index = total_order_index(c.label);
  return c;
}

IdealHandle chain_ideal(int n, int r, int i) {
  const auto order = total_order(n, r);
  if (i < 0 || i > static_cast<int>(order.size())) throw std::invalid_argument("chain index out of range");
  IdealHandle h{n, r, i, {}};
  for (int k = 0; k < i; ++k) h.generators.push_back(order[static_cast<std::size_t>(k)].composition());
  return h;
}

std::vector<IdealHandle> chain(int n, int r) {
  const int t = static_cast<int>(total_order(n, r).size());
  std::vector<IdealHandle> out;
  for (int i = 1; i <= t; ++i) out.push_back(chain_ideal(n, r, i));
  return out;
}

std::string to_string(Verdict v) { return v == Verdict::Confirmed ? "Confirmed" : "UnknownAtBound"; }

RationalElement to_rational(const AlgebraElement& x) {
  RationalElement out;
  for (const auto& [k, c] : x.terms()) out.emplace(k, Rational(c));
  return out;
}

std::size_t hash_element(const RationalElement& x) {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& [k, c] : x) {
    mix(k.hash());
    for (char ch : c.get_str()) mix(static_cast<unsigned char>(ch));
  }
  return h;
}

namespace {

void add_into(RationalElement& acc, const Rational& c, const AlgebraElement& x) {
  for (const auto& [k, v] : x.terms()) {
    auto [it, inserted] = acc.try_emplace(k, c * v);
    if (!inserted) {
      it->second += c * v;
      if (sgn(it->second) == 0) acc.erase(it);
    }
  }
}

using Block = std::pair<Composition, Composition>;

std::map<Block, RationalElement> split_blocks(const RationalElement& x) {
  std::map<Block, RationalElement> out;
  for (const auto& [k, c] : x) out[{k.row_sums(), k.col_sums()}].emplace(k, c);
  return out;
}

}  // namespace

MembershipSolver::BlockSpan& MembershipSolver::block(const Composition& row, const Composition& col,
                                                     const std::vector<Composition>& generators, int window) {
  BlockKey key{row, col, generators, window};
  auto it = cache_.find(key);
  if (it != cache_.end()) return *it->second;
  auto bs = std::make_unique<BlockSpan>();
  const int n = row.n();
  const int r = row.r();
  for (const auto& mu : generators) {
    if (mu.n() != n || mu.r() != r) throw AmbientMismatch("ideal generator outside Lambda(n, r)");
    auto lefts = enumerate_basis(n, r, window, row, mu);
    auto rights = enumerate_basis(n, r, window, mu, col);
    // Narrow factors first, so witnesses prefer short products.
    auto by_spread = [](const PeriodicMatrix& a, const PeriodicMatrix& b) { return a.spread() < b.spread(); };
    std::stable_sort(lefts.begin(), lefts.end(), by_spread);
    std::stable_sort(rights.begin(), rights.end(), by_spread);
    for (const auto& b : lefts) {
      for (const auto& c : rights) {
        const auto& prod = mul_.basis_product(b, c);
        SparseVector v;
        for (const auto& [k, coeff] : prod.terms()) v.emplace(bs->keys.id(k), Rational(coeff));
        const int source = static_cast<int>(bs->sources.size());
        if (bs->span.add(v, source)) bs->sources.emplace_back(b, mu, c);
      }
    }
  }
  return *cache_.emplace(std::move(key), std::move(bs)).first->second;
}

MembershipCertificate MembershipSolver::prove(const AlgebraElement& x, const std::vector<Composition>& generators,
                                              int window) {
  if (window < 0) throw std::invalid_argument("window must be nonnegative");
  MembershipCertificate cert;
  cert.window = window;
  for (const auto& [blk, part] : split_blocks(to_rational(x))) {
    auto& bs = block(blk.first, blk.second, generators, window);
    SparseVector v;
    for (const auto& [k, c] : part) v.emplace(bs.keys.id(k), c);
    auto red = bs.span.reduce(v);
    if (!red.residual.empty()) {
      cert.witness.clear();
      return cert;
    }
    for (const auto& [src, c] : red.combination) {
      const auto& [b, mu, cm] = bs.sources[static_cast<std::size_t>(src)];
      cert.witness.push_back({c, b, mu, cm});
    }
  }
  cert.verdict = Verdict::Confirmed;
  if (!verify(cert, x)) throw std::logic_error("membership witness failed to re-verify");
  RationalElement rebuilt;
  for (const auto& w : cert.witness)
    add_into(rebuilt, w.coefficient,
             mul_(mul_(AlgebraElement::basis(w.left), idempotent(w.middle)), AlgebraElement::basis(w.right)));
  cert.product_hash = hash_element(rebuilt);
  return cert;
}

bool MembershipSolver::verify(const MembershipCertificate& cert, const AlgebraElement& x) {
  if (cert.verdict != Verdict::Confirmed) return false;
  RationalElement rebuilt;
  for (const auto& w : cert.witness) {
    if (w.left.col_sums() != w.middle || w.right.row_sums() != w.middle) return false;
    if (w.left.spread() > cert.window || w.right.spread() > cert.window) return false;
    add_into(rebuilt, w.coefficient,
             mul_(mul_(AlgebraElement::basis(w.left), idempotent(w.middle)), AlgebraElement::basis(w.right)));
  }
  return rebuilt == to_rational(x);
}

RationalElement MembershipSolver::residual(const RationalElement& x, const std::vector<Composition>& generators,
                                           int window) {
  RationalElement out;
  for (const auto& [blk, part] : split_blocks(x)) {
    auto& bs = block(blk.first, blk.second, generators, window);
    SparseVector v;
    for (const auto& [k, c] : part) v.emplace(bs.keys.id(k), c);
    for (const auto& [id, c] : bs.span.reduce(v).residual) out.emplace(bs.keys.key(id), c);
  }
  return out;
}

OrbitIdealVerdict sn_orbit_ideal_equality(const Composition& lam, const Composition& mu, int window,
                                          MembershipSolver& solver) {
  auto a = lam.parts(), b = mu.parts();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw std::invalid_argument("orbit ideal equality needs mu to be a rearrangement of lam");
  OrbitIdealVerdict v;
  v.forward = solver.prove(idempotent(lam), {mu}, window);
  v.backward = solver.prove(idempotent(mu), {lam}, window);
  return v;
}

namespace {

std::string key_string(const PeriodicMatrix& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : a.entries()) {
    os << (first ? "" : " ") << e.row << ',' << e.col << ':' << e.value;
    first = false;
  }
  return "[" + os.str() + "]";
}

}  // namespace

StratumReport stratum_report(const Partition& lam, int window, MembershipSolver& solver) {
  const int n = lam.n();
  const int r = lam.r();
  StratumReport rep;
  rep.lambda = lam;
  rep.chain_index = total_order_index(lam);
  rep.window = window;
  const auto below = chain_ideal(n, r, rep.chain_index - 1).generators;
  const auto keys = enumerate_basis(n, r, window, lam.composition(), lam.composition());
  rep.keys = keys.size();

  auto reduce_mod_ideal = [&](const RationalElement& x) { return solver.residual(x, below, window); };

  KeyIndex ids;
  RationalSpan trans;
  auto to_sparse = [&](const RationalElement& x) {
    SparseVector v;
    for (const auto& [k, c] : x) v.emplace(ids.id(k), c);
    return v;
  };
  std::vector<PeriodicMatrix> translation;
  for (const auto& k : keys) {
    if (!k.is_translation_type()) continue;
    translation.push_back(k);
    trans.add(to_sparse(reduce_mod_ideal(to_rational(AlgebraElement::basis(k)))),
              static_cast<int>(translation.size()) - 1);
  }
  rep.translation_keys = translation.size();

  for (const auto& k : keys) {
    const auto red = reduce_mod_ideal(to_rational(AlgebraElement::basis(k)));
    if (red.empty()) ++rep.keys_in_ideal;
    if (trans.contains(to_sparse(red)))
      ++rep.keys_in_translation_span;
    else
      rep.unspanned.push_back(key_string(k));
  }

  auto& mul = solver.multiplier();
  for (std::size_t s = 0; s < keys.size(); ++s) {
    for (std::size_t t = s + 1; t < keys.size(); ++t) {
      const auto x = AlgebraElement::basis(keys[s]);
      const auto y = AlgebraElement::basis(keys[t]);
      ++rep.pairs_tested;
      const auto comm = reduce_mod_ideal(to_rational(mul(x, y) - mul(y, x)));
      if (!comm.empty()) rep.noncommuting.push_back(key_string(keys[s]) + " " + key_string(keys[t]));
    }
  }
  return rep;
}

LaurentPresentation b_lambda(const Partition& lam) {
  LaurentPresentation p;
  p.variables = lam.part(1);
  for (int i = 1; i <= lam.n(); ++i) {
    const int m = lam.part(1) - lam.part(i + 1);
    if (m > 0) p.inverted.push_back(m);
  }
  std::sort(p.inverted.begin(), p.inverted.end());
  p.inverted.erase(std::unique(p.inverted.begin(), p.inverted.end()), p.inverted.end());
  return p;
}

std::string to_string(const LaurentPresentation& p) {
  std::ostringstream os;
  os << "Z[";
  for (int k = 1; k <= p.variables; ++k) {
    os << (k > 1 ? ", " : "") << 'x' << k;
    if (std::binary_search(p.inverted.begin(), p.inverted.end(), k)) os << ", x" << k << "^-1";
  }
  os << ']';
  return os.str();
}

}  // namespace affschur
