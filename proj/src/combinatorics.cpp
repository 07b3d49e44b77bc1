#include "affschur/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace affschur {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("composition part is negative");
    r_ += p;
  }
}

bool Composition::is_partition() const { return std::is_sorted(parts_.rbegin(), parts_.rend()); }

Partition::Partition(std::vector<int> parts) : comp_(std::move(parts)) {
  if (!comp_.is_partition()) throw std::invalid_argument("partition parts must be weakly decreasing");
}

int Partition::length() const {
  return static_cast<int>(std::count_if(parts().begin(), parts().end(), [](int p) { return p > 0; }));
}

Partition Partition::padded(int n) const {
  if (n < length()) throw std::invalid_argument("cannot pad partition below its length");
  std::vector<int> p(parts().begin(), parts().begin() + std::min(n, this->n()));
  p.resize(static_cast<std::size_t>(n), 0);
  return Partition(std::move(p));
}

std::string to_string(const Composition& c) {
  std::ostringstream os;
  for (int k = 0; k < c.n(); ++k) os << (k ? "," : "") << c.parts()[static_cast<std::size_t>(k)];
  return os.str();
}

Composition parse_composition(std::string_view text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    auto b = cur.find_first_not_of(" \t()");
    auto e = cur.find_last_not_of(" \t()");
    if (b == std::string::npos) throw std::invalid_argument("empty part in '" + std::string(text) + "'");
    std::string tok = cur.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("malformed part '" + tok + "'");
    parts.push_back(v);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') flush();
    else cur.push_back(ch);
  }
  flush();
  return Composition(std::move(parts));
}

Partition parse_partition(std::string_view text) { return Partition(parse_composition(text).parts()); }

namespace {

void compositions_rec(int n, int remaining, std::vector<int>& cur, std::vector<Composition>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur.push_back(v);
    compositions_rec(n, remaining - v, cur, out);
    cur.pop_back();
  }
}

void partitions_rec(int n, int remaining, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
  if (static_cast<int>(cur.size()) == n) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  int slots = n - static_cast<int>(cur.size());
  for (int v = std::min(cap, remaining); v >= 0; --v) {
    if (v * slots < remaining) break;
    cur.push_back(v);
    partitions_rec(n, remaining - v, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("compositions: need n >= 1, r >= 0");
  std::vector<Composition> out;
  std::vector<int> cur;
  compositions_rec(n, r, cur, out);
  return out;
}

std::vector<Partition> partitions(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("partitions: need n >= 1, r >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, r, r, cur, out);
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
  if (mu.n() != lam.n() || mu.r() != lam.r())
    throw std::invalid_argument("dominance_leq: partitions must share (n, r)");
  int sm = 0, sl = 0;
  for (int i = 1; i <= mu.n(); ++i) {
    sm += mu.part(i);
    sl += lam.part(i);
    if (sl < sm) return false;
  }
  return true;
}

std::vector<Partition> total_order(int n, int r) {
  // partitions() already yields descending lex order.
  return partitions(n, r);
}

int total_order_index(const Partition& lam) {
  auto order = total_order(lam.n(), lam.r());
  auto it = std::find(order.begin(), order.end(), lam);
  if (it == order.end()) throw std::invalid_argument("partition not in Lambda^+(n, r)");
  return static_cast<int>(it - order.begin()) + 1;
}

Partition dual_partition(const Partition& lam) {
  int len = std::max(lam.n(), lam.part(1));
  std::vector<int> dual(static_cast<std::size_t>(len), 0);
  for (int i = 1; i <= len; ++i) {
    int c = 0;
    for (int p : lam.parts())
      if (p >= i) ++c;
    dual[static_cast<std::size_t>(i - 1)] = c;
  }
  return Partition(std::move(dual));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int r) {
  std::vector<int> im(static_cast<std::size_t>(r));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int r, int a, int b) {
  auto p = identity(r);
  std::swap(p.images_.at(static_cast<std::size_t>(a - 1)), p.images_.at(static_cast<std::size_t>(b - 1)));
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t t = 0; t < images_.size(); ++t) inv[static_cast<std::size_t>(images_[t])] = static_cast<int>(t);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t t = 0; t < images_.size(); ++t)
    if (images_[t] != static_cast<int>(t)) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> im(b.images_.size());
  for (std::size_t t = 0; t < im.size(); ++t) im[t] = a.images_[static_cast<std::size_t>(b.images_[t])];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  for (int t = 0; t < p.degree(); ++t) os << (t ? "," : "") << p(t) + 1;
  return os.str();
}

std::string to_string(const MultiIndex& i) {
  std::ostringstream os;
  os << '(';
  for (int t = 0; t < i.size(); ++t) os << (t ? "," : "") << i[t];
  os << ')';
  return os.str();
}

AffineWeylElement AffineWeylElement::identity(int r) {
  return {Permutation::identity(r), std::vector<int>(static_cast<std::size_t>(r), 0)};
}

AffineWeylElement operator*(const AffineWeylElement& g, const AffineWeylElement& h) {
  const int r = g.degree();
  if (h.degree() != r || static_cast<int>(g.epsilon.size()) != r || static_cast<int>(h.epsilon.size()) != r)
    throw std::invalid_argument("affine Weyl element degree mismatch");
  std::vector<int> eps(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k)
    eps[static_cast<std::size_t>(k)] =
        g.epsilon[static_cast<std::size_t>(h.sigma(k))] + h.epsilon[static_cast<std::size_t>(k)];
  return {g.sigma * h.sigma, std::move(eps)};
}

MultiIndex act(const MultiIndex& i, const AffineWeylElement& g, int n) {
  const int r = i.size();
  if (g.degree() != r || static_cast<int>(g.epsilon.size()) != r)
    throw std::invalid_argument("act: length mismatch");
  MultiIndex out(std::vector<int>(static_cast<std::size_t>(r)));
  for (int t = 0; t < r; ++t) out[t] = i[g.sigma(t)] + n * g.epsilon[static_cast<std::size_t>(t)];
  return out;
}

IndexPair orbit_canonical(const MultiIndex& i, const MultiIndex& j, int n) {
  if (i.size() != j.size()) throw std::invalid_argument("orbit_canonical: length mismatch");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(i.size()));
  for (int t = 0; t < i.size(); ++t) {
    int k = floor_div(i[t] - 1, n);
    pairs.emplace_back(i[t] - k * n, j[t] - k * n);
  }
  std::sort(pairs.begin(), pairs.end());
  IndexPair out;
  for (auto& [a, b] : pairs) {
    out.first.entries.push_back(a);
    out.second.entries.push_back(b);
  }
  return out;
}

YoungSubgroup::YoungSubgroup(int degree, std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  block_of_.assign(static_cast<std::size_t>(degree), -1);
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("empty block in Young subgroup");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (int t : blocks_[k]) {
      if (t < 0 || t >= degree || block_of_[static_cast<std::size_t>(t)] != -1)
        throw std::invalid_argument("blocks do not partition the positions");
      block_of_[static_cast<std::size_t>(t)] = static_cast<int>(k);
    }
  }
  for (int b : block_of_)
    if (b == -1) throw std::invalid_argument("blocks do not cover all positions");
}

YoungSubgroup YoungSubgroup::trivial(int degree) {
  std::vector<std::vector<int>> blocks;
  for (int t = 0; t < degree; ++t) blocks.push_back({t});
  return YoungSubgroup(degree, std::move(blocks));
}

YoungSubgroup YoungSubgroup::full(int degree) {
  std::vector<int> all(static_cast<std::size_t>(degree));
  std::iota(all.begin(), all.end(), 0);
  return YoungSubgroup(degree, {all});
}

std::uint64_t YoungSubgroup::order() const {
  std::uint64_t ord = 1;
  for (const auto& b : blocks_)
    for (std::uint64_t k = 2; k <= b.size(); ++k) ord *= k;
  return ord;
}

bool YoungSubgroup::contains(const Permutation& p) const {
  if (p.degree() != degree()) return false;
  for (int t = 0; t < degree(); ++t)
    if (block_of_[static_cast<std::size_t>(p(t))] != block_of_[static_cast<std::size_t>(t)]) return false;
  return true;
}

bool YoungSubgroup::is_subgroup_of(const YoungSubgroup& h) const {
  if (h.degree() != degree()) return false;
  for (const auto& b : blocks_)
    for (int t : b)
      if (h.block_of_[static_cast<std::size_t>(t)] != h.block_of_[static_cast<std::size_t>(b.front())]) return false;
  return true;
}

YoungSubgroup YoungSubgroup::intersect(const YoungSubgroup& other) const {
  if (other.degree() != degree()) throw std::invalid_argument("Young subgroup degree mismatch");
  std::vector<std::pair<int, int>> keys;
  for (int t = 0; t < degree(); ++t)
    keys.emplace_back(block_of_[static_cast<std::size_t>(t)], other.block_of_[static_cast<std::size_t>(t)]);
  return from_keys(keys);
}

std::vector<Permutation> YoungSubgroup::elements() const {
  // Enumerate all block-internal arrangements, then sort.
  std::vector<std::vector<int>> images{std::vector<int>(static_cast<std::size_t>(degree()), -1)};
  for (const auto& b : blocks_) {
    std::vector<std::vector<int>> next;
    std::vector<int> arr = b;
    do {
      for (const auto& partial : images) {
        auto img = partial;
        for (std::size_t k = 0; k < b.size(); ++k) img[static_cast<std::size_t>(b[k])] = arr[k];
        next.push_back(std::move(img));
      }
    } while (std::next_permutation(arr.begin(), arr.end()));
    images = std::move(next);
  }
  std::vector<Permutation> out;
  out.reserve(images.size());
  for (auto& im : images) out.emplace_back(std::move(im));
  std::sort(out.begin(), out.end());
  return out;
}

YoungSubgroup stabilizer_young(const MultiIndex& i) { return YoungSubgroup::from_keys(i.entries); }

std::vector<Permutation> double_cosets(const YoungSubgroup& h, const YoungSubgroup& g, const YoungSubgroup& k) {
  if (!h.is_subgroup_of(g) || !k.is_subgroup_of(g))
    throw std::invalid_argument("double_cosets: H and K must be subgroups of G");
  const auto hs = h.elements();
  const auto ks = k.elements();
  std::set<Permutation> seen;
  std::vector<Permutation> reps;
  for (const auto& x : g.elements()) {
    if (seen.contains(x)) continue;
    reps.push_back(x);
    for (const auto& a : hs) {
      auto ax = a * x;
      for (const auto& b : ks) seen.insert(ax * b);
    }
  }
  return reps;
}

std::uint64_t subgroup_index(const YoungSubgroup& h, const YoungSubgroup& k) {
  if (!k.is_subgroup_of(h)) throw std::invalid_argument("subgroup_index: K is not a subgroup of H");
  return h.order() / k.order();
}

}  // namespace affschur
