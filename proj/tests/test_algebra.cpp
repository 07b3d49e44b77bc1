#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "doctest.h"

#include "affschur/algebra.hpp"

using namespace affschur;

namespace {

using Multiset = std::vector<std::pair<int, int>>;

Multiset normal_form(const MultiIndex& i, const MultiIndex& j, int n) {
  Multiset v;
  for (int t = 0; t < i.size(); ++t) {
    const int k = floor_div(i[t] - 1, n);
    v.emplace_back(i[t] - k * n, j[t] - k * n);
  }
  std::sort(v.begin(), v.end());
  return v;
}

Multiset normal_form(const PeriodicMatrix& a) {
  Multiset v;
  for (const auto& e : a.entries())
    for (int k = 0; k < e.value; ++k) v.emplace_back(e.row, e.col);
  return v;
}

void for_each_in_box(const std::vector<int>& lo, const std::vector<int>& hi,
                     const std::function<void(const MultiIndex&)>& f) {
  const int r = static_cast<int>(lo.size());
  MultiIndex x(lo);
  while (true) {
    f(x);
    int t = 0;
    while (t < r && x[t] == hi[static_cast<std::size_t>(t)]) {
      x[t] = lo[static_cast<std::size_t>(t)];
      ++t;
    }
    if (t == r) return;
    ++x[t];
  }
}

std::pair<int, int> offset_range(const PeriodicMatrix& a) {
  int lo = 1 << 20, hi = -(1 << 20);
  for (const auto& e : a.entries()) {
    lo = std::min(lo, e.col - e.row);
    hi = std::max(hi, e.col - e.row);
  }
  return {lo, hi};
}

// e_A e_B straight from the counting definition: s and q range over boxes
// wide enough to hold every admissible value, with orbit equality tested
// on normal forms.
std::map<Multiset, long> brute_product(const PeriodicMatrix& a, const PeriodicMatrix& b) {
  const int n = a.n(), r = a.r();
  std::map<Multiset, long> out;
  if (a.col_sums() != b.row_sums()) return out;
  const auto na = normal_form(a), nb = normal_form(b);
  const auto [alo, ahi] = offset_range(a);
  const auto [blo, bhi] = offset_range(b);
  MultiIndex p;
  for (const auto& [x, y] : na) p.entries.push_back(x);
  std::vector<int> slo, shi;
  for (int t = 0; t < r; ++t) {
    slo.push_back(p[t] + alo);
    shi.push_back(p[t] + ahi);
  }
  std::vector<MultiIndex> partners;
  for_each_in_box(slo, shi, [&](const MultiIndex& s) {
    if (normal_form(p, s, n) == na) partners.push_back(s);
  });
  // Candidate product keys.
  std::map<Multiset, MultiIndex> keys;
  for (const auto& s : partners) {
    std::vector<int> qlo, qhi;
    for (int t = 0; t < r; ++t) {
      qlo.push_back(s[t] + blo);
      qhi.push_back(s[t] + bhi);
    }
    for_each_in_box(qlo, qhi, [&](const MultiIndex& q) {
      if (normal_form(s, q, n) == nb) keys.emplace(normal_form(p, q, n), q);
    });
  }
  // Literal structure constant with (p, q) fixed.
  for (const auto& [key, q] : keys) {
    long count = 0;
    for (const auto& s : partners)
      if (normal_form(s, q, n) == nb) ++count;
    out[key] = count;
  }
  return out;
}

std::map<Multiset, long> as_map(const AlgebraElement& x) {
  std::map<Multiset, long> out;
  for (const auto& [k, c] : x.terms()) out[normal_form(k)] = c.get_si();
  return out;
}

PeriodicMatrix pick(const std::vector<PeriodicMatrix>& v, std::mt19937_64& rng) { return v[rng() % v.size()]; }

}  // namespace

TEST_CASE("products agree with the counting definition, exhaustive at small sizes") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
    const auto basis = enumerate_basis(n, r, 1);
    for (const auto& a : basis)
      for (const auto& b : enumerate_basis(n, r, 1, a.col_sums())) {
        const auto expect = brute_product(a, b);
        CHECK(as_map(multiply_basis_oracle(a, b)) == expect);
        CHECK(as_map(multiply_basis_coset(a, b)) == expect);
      }
  }
}

TEST_CASE("products agree with the counting definition, sampled at (3,2), (2,3), (3,3)") {
  std::mt19937_64 rng(29);
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {3, 3}}) {
    const auto basis = enumerate_basis(n, r, 1);
    for (int k = 0; k < 40; ++k) {
      const auto a = pick(basis, rng);
      const auto b = pick(enumerate_basis(n, r, 1, a.col_sums()), rng);
      const auto expect = brute_product(a, b);
      CHECK(as_map(multiply_basis_oracle(a, b)) == expect);
      CHECK(as_map(multiply_basis_coset(a, b)) == expect);
    }
  }
}

TEST_CASE("structure constants do not depend on the orbit representative") {
  std::mt19937_64 rng(31);
  const auto basis = enumerate_basis(2, 3, 1);
  for (int k = 0; k < 60; ++k) {
    const auto a = pick(basis, rng);
    const auto b = pick(enumerate_basis(2, 3, 1, a.col_sums()), rng);
    const auto prod = multiply_basis_oracle(a, b);
    for (const auto& [c, coeff] : prod.terms()) {
      auto [p, q] = pair_of_matrix(c);
      std::vector<int> perm(3), eps;
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int t = 0; t < 3; ++t) eps.push_back(static_cast<int>(rng() % 5) - 2);
      const AffineWeylElement g{Permutation(perm), eps};
      CHECK(structure_constant(a, b, act(p, g, 2), act(q, g, 2)) == coeff);
    }
  }
}

TEST_CASE("support, sign and marginals of products") {
  const auto basis = enumerate_basis(3, 2, 1);
  for (const auto& a : basis)
    for (const auto& b : enumerate_basis(3, 2, 1, a.col_sums())) {
      const auto x = multiply_basis_oracle(a, b);
      CHECK_FALSE(x.is_zero());
      for (const auto& [c, coeff] : x.terms()) {
        CHECK(c.row_sums() == a.row_sums());
        CHECK(c.col_sums() == b.col_sums());
        CHECK(coeff > 0);
        CHECK(c.spread() <= a.spread() + b.spread());
      }
    }
  const auto a = diag(Composition({2, 0, 0}));
  const auto b = diag(Composition({1, 1, 0}));
  CHECK(multiply_basis_oracle(a, b).is_zero());
  CHECK(multiply_basis_coset(a, b).is_zero());
}

TEST_CASE("idempotents") {
  Multiplier mul;
  const PeriodicMatrix a(2, {{1, 2, 1}, {2, 3, 1}});
  const auto x = AlgebraElement::basis(a);
  CHECK(mul(idempotent(Composition({1, 1})), x) == x);
  CHECK(mul(idempotent(Composition({2, 0})), x).is_zero());
  CHECK(mul(x, idempotent(Composition({1, 1}))) == x);
  for (const auto& l1 : compositions(3, 2))
    for (const auto& l2 : compositions(3, 2))
      CHECK(mul(idempotent(l1), idempotent(l2)) == (l1 == l2 ? idempotent(l1) : AlgebraElement(3, 2)));
  CHECK(identity(2, 2).size() == 3);
  for (const auto& b : enumerate_basis(3, 2, 2)) {
    const auto y = AlgebraElement::basis(b);
    CHECK(mul(identity(3, 2), y) == y);
    CHECK(mul(y, identity(3, 2)) == y);
  }
}

TEST_CASE("rank one model is the Laurent ring") {
  Multiplier mul;
  for (int k = -5; k <= 5; ++k)
    for (int m = -5; m <= 5; ++m)
      CHECK(mul(AlgebraElement::basis(PeriodicMatrix(1, {{1, 1 + k, 1}})),
                AlgebraElement::basis(PeriodicMatrix(1, {{1, 1 + m, 1}}))) ==
            AlgebraElement::basis(PeriodicMatrix(1, {{1, 1 + k + m, 1}})));
}

TEST_CASE("bilinearity and zero") {
  Multiplier mul;
  std::mt19937_64 rng(37);
  const auto basis = enumerate_basis(2, 2, 1);
  auto random_element = [&] {
    AlgebraElement x(2, 2);
    for (int k = 0; k < 4; ++k) x.add_term(pick(basis, rng), static_cast<long>(rng() % 7) - 3);
    return x;
  };
  for (int k = 0; k < 30; ++k) {
    const auto x = random_element(), y = random_element(), z = random_element();
    CHECK(mul(x + y, z) == mul(x, z) + mul(y, z));
    CHECK(mul(z, x + y) == mul(z, x) + mul(z, y));
    CHECK(mul(AlgebraElement(2, 2), x).is_zero());
    CHECK(mul(Integer(3) * x, y) == Integer(3) * mul(x, y));
  }
}

TEST_CASE("ambient mismatch") {
  Multiplier mul;
  CHECK_THROWS_AS(mul(identity(2, 1), identity(2, 2)), AmbientMismatch);
  CHECK_THROWS_AS(identity(2, 1) + identity(3, 1), AmbientMismatch);
  CHECK_THROWS_AS(multiply_basis_oracle(diag(Composition({1, 0})), diag(Composition({1, 0, 0}))), AmbientMismatch);
}

TEST_CASE("transpose is an anti-automorphism") {
  Multiplier mul;
  for (const auto& lam : compositions(3, 3)) CHECK(antiauto(idempotent(lam)) == idempotent(lam));
  std::mt19937_64 rng(41);
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
    const auto basis = enumerate_basis(n, r, 1);
    for (int k = 0; k < 40; ++k) {
      const auto a = pick(basis, rng);
      const auto b = pick(enumerate_basis(n, r, 1, a.col_sums()), rng);
      const auto x = AlgebraElement::basis(a), y = AlgebraElement::basis(b);
      CHECK(antiauto(antiauto(x)) == x);
      CHECK(antiauto(mul(x, y)) == mul(antiauto(y), antiauto(x)));
    }
  }
}

TEST_CASE("methods") {
  CHECK(parse_method("coset") == MultiplyMethod::Coset);
  CHECK(to_string(parse_method("cross-check")) == "cross-check");
  CHECK_THROWS_AS(parse_method("fast"), std::invalid_argument);
  Multiplier cross(MultiplyMethod::CrossCheck);
  const auto basis = enumerate_basis(2, 2, 1);
  for (const auto& a : basis)
    for (const auto& b : enumerate_basis(2, 2, 1, a.col_sums()))
      CHECK_NOTHROW(cross.basis_product(a, b));
}

TEST_CASE("memo table under concurrent use") {
  Multiplier mul;
  const auto basis = enumerate_basis(2, 2, 1);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&] {
      for (const auto& a : basis)
        for (const auto& b : enumerate_basis(2, 2, 1, a.col_sums())) mul.basis_product(a, b);
    });
  for (auto& th : threads) th.join();
  for (const auto& a : basis)
    for (const auto& b : enumerate_basis(2, 2, 1, a.col_sums()))
      CHECK(mul.basis_product(a, b) == multiply_basis_oracle(a, b));
}
