#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace affschur {

/// Element of Lambda(n, r): n nonnegative parts summing to r.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  int n() const { return static_cast<int>(parts_.size()); }
  int r() const { return r_; }
  const std::vector<int>& parts() const { return parts_; }
  /// 1-based, matching the usual lambda_i notation.
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }

  bool is_partition() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int r_ = 0;
};

/// Element of Lambda^+(n, r): weakly decreasing composition. Trailing zeros
/// are kept, so n() is the ambient number of parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int n() const { return comp_.n(); }
  int r() const { return comp_.r(); }
  const std::vector<int>& parts() const { return comp_.parts(); }
  int part(int i) const { return i <= n() ? comp_.part(i) : 0; }
  int length() const;  // number of nonzero parts
  const Composition& composition() const { return comp_; }
  operator const Composition&() const { return comp_; }  // NOLINT

  /// Same partition with zeros appended or removed to reach `n` parts.
  Partition padded(int n) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.comp_ <=> b.comp_; }

 private:
  Composition comp_;
};

std::string to_string(const Composition& c);
inline std::string to_string(const Partition& p) { return to_string(p.composition()); }
/// Comma-separated list, e.g. "2,1,0".
Composition parse_composition(std::string_view text);
Partition parse_partition(std::string_view text);

/// All of Lambda(n, r), lexicographically descending.
std::vector<Composition> compositions(int n, int r);
/// All of Lambda^+(n, r), lexicographically descending.
std::vector<Partition> partitions(int n, int r);

bool dominance_leq(const Partition& mu, const Partition& lam);
/// Linear extension of dominance; incomparable pairs broken by descending
/// lexicographic order (which is itself a linear extension).
std::vector<Partition> total_order(int n, int r);
/// 1-based position of lam in total_order(lam.n(), lam.r()).
int total_order_index(const Partition& lam);

/// Conjugate partition with max(n, lambda_1) parts.
Partition dual_partition(const Partition& lam);

/// Permutation of {0..r-1} in one-line form: image_[t] = sigma(t).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int r);
  /// Transposition of 1-based positions a and b.
  static Permutation transposition(int r, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int t) const { return images_[static_cast<std::size_t>(t)]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  bool is_identity() const;

  /// (a * b)(t) = a(b(t)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// 1-based one-line notation, e.g. "2,1,3".
std::string to_string(const Permutation& p);

/// Point of I(Z, r). A "finite index" is one with entries in [1, n].
struct MultiIndex {
  std::vector<int> entries;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) {}
  MultiIndex(std::initializer_list<int> e) : entries(e) {}

  int size() const { return static_cast<int>(entries.size()); }
  int operator[](int t) const { return entries[static_cast<std::size_t>(t)]; }
  int& operator[](int t) { return entries[static_cast<std::size_t>(t)]; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.entries <=> b.entries; }
};

using IndexPair = std::pair<MultiIndex, MultiIndex>;

std::string to_string(const MultiIndex& i);

/// (sigma, epsilon) in S_r semidirect Z^r.
struct AffineWeylElement {
  Permutation sigma;
  std::vector<int> epsilon;

  static AffineWeylElement identity(int r);
  int degree() const { return sigma.degree(); }

  /// Composition law making act() a right action:
  /// (s, e)(t, h) = (s t, e.t + h) with (e.t)_k = e_{t(k)}.
  friend AffineWeylElement operator*(const AffineWeylElement& g, const AffineWeylElement& h);
  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;
};

/// Right action: place-permute by sigma, then add n * epsilon.
MultiIndex act(const MultiIndex& i, const AffineWeylElement& g, int n);

/// Canonical representative of the diagonal orbit of (i, j): every position
/// shifted so the first index lies in [1, n], then pairs sorted.
IndexPair orbit_canonical(const MultiIndex& i, const MultiIndex& j, int n);

/// Young subgroup of S_r given by a set partition of positions {0..r-1}.
class YoungSubgroup {
 public:
  YoungSubgroup() = default;
  YoungSubgroup(int degree, std::vector<std::vector<int>> blocks);

  /// Positions with equal keys share a block.
  template <class Key>
  static YoungSubgroup from_keys(const std::vector<Key>& keys) {
    std::map<Key, std::vector<int>> groups;
    for (std::size_t t = 0; t < keys.size(); ++t) groups[keys[t]].push_back(static_cast<int>(t));
    std::vector<std::vector<int>> blocks;
    blocks.reserve(groups.size());
    for (auto& [key, block] : groups) blocks.push_back(std::move(block));
    return YoungSubgroup(static_cast<int>(keys.size()), std::move(blocks));
  }
  static YoungSubgroup trivial(int degree);
  static YoungSubgroup full(int degree);

  int degree() const { return static_cast<int>(block_of_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const YoungSubgroup& h) const;
  YoungSubgroup intersect(const YoungSubgroup& other) const;
  /// Every element, in increasing one-line lexicographic order.
  std::vector<Permutation> elements() const;

  friend bool operator==(const YoungSubgroup& a, const YoungSubgroup& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<std::vector<int>> blocks_;  // each sorted; sorted by first element
  std::vector<int> block_of_;
};

/// Stabilizer of a finite index under place permutation.
YoungSubgroup stabilizer_young(const MultiIndex& i);

/// One representative per double coset H g K of G, each the lexicographically
/// least element of its double coset, listed in increasing order.
std::vector<Permutation> double_cosets(const YoungSubgroup& h, const YoungSubgroup& g, const YoungSubgroup& k);

/// [H : K]; throws std::invalid_argument unless K <= H.
std::uint64_t subgroup_index(const YoungSubgroup& h, const YoungSubgroup& k);

/// e_k(values). Works for any commutative ring type with 0/1 from int.
template <class T>
T elementary_symmetric(std::span<const T> values, int k) {
  if (k < 1 || k > static_cast<int>(values.size()))
    throw std::invalid_argument("elementary_symmetric: k out of range");
  // e[j] after processing a prefix; standard one-pass recurrence.
  std::vector<T> e(static_cast<std::size_t>(k) + 1, T(0));
  e[0] = T(1);
  for (const T& v : values) {
    for (int j = k; j >= 1; --j) e[static_cast<std::size_t>(j)] += v * e[static_cast<std::size_t>(j - 1)];
  }
  return e[static_cast<std::size_t>(k)];
}

int floor_div(int a, int b);
/// Representative of a mod n in [1, n].
inline int residue(int a, int n) { return a - n * floor_div(a - 1, n); }

}  // namespace affschur
