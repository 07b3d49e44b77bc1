#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "affschur/combinatorics.hpp"
#include "affschur/scalar.hpp"

using namespace affschur;

namespace {

std::vector<Permutation> all_permutations(int r) {
  std::vector<int> v(static_cast<std::size_t>(r));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Elements of S_r preserving each block of a set partition, by filtering S_r.
std::set<Permutation> brute_young(const YoungSubgroup& y) {
  std::set<Permutation> out;
  for (const auto& p : all_permutations(y.degree())) {
    bool ok = true;
    for (const auto& b : y.blocks())
      for (int t : b) ok = ok && std::find(b.begin(), b.end(), p(t)) != b.end();
    if (ok) out.insert(p);
  }
  return out;
}

std::set<std::set<Permutation>> brute_double_cosets(const YoungSubgroup& h, const YoungSubgroup& g,
                                                    const YoungSubgroup& k) {
  const auto hs = brute_young(h), ks = brute_young(k);
  std::set<std::set<Permutation>> out;
  for (const auto& x : brute_young(g)) {
    std::set<Permutation> cell;
    for (const auto& a : hs)
      for (const auto& b : ks) cell.insert(a * x * b);
    out.insert(cell);
  }
  return out;
}

bool brute_dominates(const Partition& mu, const Partition& lam) {
  int a = 0, b = 0;
  for (int i = 1; i <= lam.n(); ++i) {
    a += lam.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("dominance examples") {
  CHECK(dominance_leq(Partition({1, 1, 1}), Partition({3, 0, 0})));
  CHECK(dominance_leq(Partition({2, 1, 0}), Partition({2, 1, 0})));
  CHECK(dominance_leq(Partition({2, 2, 0}), Partition({3, 1, 0})));
  CHECK_FALSE(dominance_leq(Partition({3, 1, 0}), Partition({2, 2, 0})));
  CHECK_THROWS_AS(dominance_leq(Partition({2, 0}), Partition({2, 0, 0})), std::invalid_argument);
}

TEST_CASE("dominance is a partial order matching prefix sums, n,r <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= 5; ++r) {
      const auto ps = partitions(n, r);
      for (const auto& a : ps)
        for (const auto& b : ps) {
          CHECK(dominance_leq(a, b) == brute_dominates(a, b));
          if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
          for (const auto& c : ps)
            if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
        }
    }
}

TEST_CASE("total order") {
  CHECK(total_order(2, 2) == std::vector<Partition>{Partition({2, 0}), Partition({1, 1})});
  CHECK(total_order(3, 3) ==
        std::vector<Partition>{Partition({3, 0, 0}), Partition({2, 1, 0}), Partition({1, 1, 1})});
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= 5; ++r) {
      const auto ord = total_order(n, r);
      CHECK(ord.front().part(1) == r);
      CHECK(ord.size() == partitions(n, r).size());
      for (std::size_t a = 0; a < ord.size(); ++a) {
        CHECK(total_order_index(ord[a]) == static_cast<int>(a) + 1);
        for (std::size_t b = a + 1; b < ord.size(); ++b) CHECK_FALSE(dominance_leq(ord[a], ord[b]));
      }
    }
}

TEST_CASE("dual partition") {
  CHECK(dual_partition(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
  CHECK(dual_partition(Partition({3, 2, 1})) == Partition({3, 2, 1}));
  CHECK(dual_partition(Partition({5})) == Partition({1, 1, 1, 1, 1}));
  for (int r = 0; r <= 12; ++r)
    for (const auto& p : partitions(6, r)) {
      if (p.part(1) > 6) continue;
      CHECK(dual_partition(dual_partition(p)).padded(6) == p);
    }
}

TEST_CASE("affine Weyl action") {
  CHECK(act({1, 2}, AffineWeylElement::identity(2), 2) == MultiIndex{1, 2});
  CHECK(act({1, 2}, {Permutation::identity(2), {1, 0}}, 2) == MultiIndex{3, 2});
  CHECK(act({1, 2}, {Permutation::transposition(2, 1, 2), {1, 0}}, 2) == MultiIndex{4, 1});

  std::mt19937_64 rng(11);
  auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int k = 0; k < 200; ++k) {
    const int r = rnd(1, 4), n = rnd(1, 3);
    auto random_g = [&] {
      std::vector<int> p(static_cast<std::size_t>(r)), e;
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      for (int t = 0; t < r; ++t) e.push_back(rnd(-3, 3));
      return AffineWeylElement{Permutation(p), e};
    };
    MultiIndex i;
    for (int t = 0; t < r; ++t) i.entries.push_back(rnd(-6, 6));
    const auto g = random_g(), h = random_g();
    CHECK(act(act(i, g, n), h, n) == act(i, g * h, n));
  }
}

TEST_CASE("orbit canonical form") {
  CHECK(orbit_canonical({0}, {3}, 1) == orbit_canonical({5}, {8}, 1));
  const auto [ci, cj] = orbit_canonical({5, -1, 2}, {0, 4, 4}, 2);
  CHECK(std::is_sorted(ci.entries.begin(), ci.entries.end()));
  for (int x : ci.entries) CHECK((x >= 1 && x <= 2));

  // Same orbit iff some place permutation followed by a common shift in
  // nZ per position carries one pair onto the other.
  const int n = 2, r = 2;
  std::vector<IndexPair> pairs;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) pairs.push_back({{a, b}, {c, d}});
  auto same_orbit = [&](const IndexPair& x, const IndexPair& y) {
    for (const auto& s : all_permutations(r)) {
      MultiIndex xi = act(x.first, {s, {0, 0}}, n), xj = act(x.second, {s, {0, 0}}, n);
      bool ok = true;
      for (int t = 0; t < r && ok; ++t) {
        const int diff = y.first[t] - xi[t];
        ok = diff % n == 0 && y.second[t] - xj[t] == diff;
      }
      if (ok) return true;
    }
    return false;
  };
  std::mt19937_64 rng(3);
  for (int k = 0; k < 3000; ++k) {
    const auto& x = pairs[rng() % pairs.size()];
    const auto& y = pairs[rng() % pairs.size()];
    CHECK((orbit_canonical(x.first, x.second, n) == orbit_canonical(y.first, y.second, n)) == same_orbit(x, y));
  }
}

TEST_CASE("stabilizers") {
  const auto s = stabilizer_young({1, 1, 2});
  CHECK(s.order() == 2);
  CHECK(s.blocks() == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(stabilizer_young({1, 2, 3}).order() == 1);
  CHECK(stabilizer_young({1, 1, 1}).order() == 6);
}

TEST_CASE("double cosets against brute-force enumeration") {
  const auto g3 = YoungSubgroup::full(3);
  CHECK(double_cosets(g3, g3, g3).size() == 1);
  CHECK(double_cosets(YoungSubgroup::trivial(2), YoungSubgroup::full(2), YoungSubgroup::trivial(2)).size() == 2);
  const YoungSubgroup h(3, {{0, 1}, {2}}), k(3, {{0}, {1, 2}});
  CHECK(double_cosets(h, g3, k).size() == 2);

  std::mt19937_64 rng(5);
  for (int r = 1; r <= 6; ++r)
    for (int rep = 0; rep < 6; ++rep) {
      std::vector<int> kg, kh, kk;
      for (int t = 0; t < r; ++t) kg.push_back(static_cast<int>(rng() % 2));
      for (int t = 0; t < r; ++t) {
        kh.push_back(kg[static_cast<std::size_t>(t)] * 10 + static_cast<int>(rng() % 3));
        kk.push_back(kg[static_cast<std::size_t>(t)] * 10 + static_cast<int>(rng() % 3));
      }
      const auto g = YoungSubgroup::from_keys(kg), hh = YoungSubgroup::from_keys(kh),
                 kk2 = YoungSubgroup::from_keys(kk);
      const auto reps = double_cosets(hh, g, kk2);
      const auto cells = brute_double_cosets(hh, g, kk2);
      CHECK(reps.size() == cells.size());
      std::set<const std::set<Permutation>*> hit;
      std::uint64_t total = 0;
      for (const auto& d : reps)
        for (const auto& c : cells)
          if (c.count(d)) {
            hit.insert(&c);
            CHECK(d == *c.begin());
          }
      for (const auto& c : cells) total += c.size();
      CHECK(hit.size() == cells.size());
      CHECK(total == g.order());
    }
}

TEST_CASE("subgroup index") {
  CHECK(subgroup_index(YoungSubgroup::full(3), YoungSubgroup(3, {{0, 1}, {2}})) == 3);
  CHECK(subgroup_index(YoungSubgroup::full(4), YoungSubgroup::full(4)) == 1);
  CHECK_THROWS_AS(subgroup_index(YoungSubgroup(3, {{0, 1}, {2}}), YoungSubgroup(3, {{0}, {1, 2}})),
                  std::invalid_argument);
  const YoungSubgroup a(5, {{0, 1, 2}, {3, 4}}), b(5, {{0, 3}, {1, 2, 4}});
  const auto c = a.intersect(b);
  std::set<Permutation> ea = brute_young(a), eb = brute_young(b), both;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::inserter(both, both.begin()));
  CHECK(c.order() == both.size());
  CHECK(subgroup_index(a, c) == ea.size() / both.size());
}

TEST_CASE("elementary symmetric functions") {
  const std::vector<Rational> v{Rational(2), Rational(-3, 5)};
  CHECK(elementary_symmetric<Rational>(v, 1) == Rational(7, 5));
  CHECK(elementary_symmetric<Rational>(v, 2) == Rational(-6, 5));
  const std::vector<Integer> ones(6, Integer(1));
  CHECK(elementary_symmetric<Integer>(ones, 3) == 20);
  CHECK_THROWS_AS(elementary_symmetric<Integer>(ones, 7), std::invalid_argument);

  // Coefficients of prod (x - a_i), expanded directly.
  const std::vector<Integer> a{3, -1, 4, 1, -5};
  std::vector<Integer> poly{1};
  for (const auto& x : a) {
    std::vector<Integer> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= x * poly[k];
    }
    poly = next;
  }
  for (int k = 1; k <= 5; ++k) {
    Integer expect = poly[static_cast<std::size_t>(5 - k)];
    if (k % 2) expect = -expect;
    CHECK(elementary_symmetric<Integer>(a, k) == expect);
  }
}
