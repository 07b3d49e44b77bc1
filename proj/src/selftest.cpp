#include "affschur/selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "affschur/classical.hpp"
#include "affschur/simple_modules.hpp"
#include "affschur/stratification.hpp"

namespace affschur {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

class Suite {
 public:
  Suite(std::string name, std::vector<CheckResult>& out) : name_(std::move(name)), out_(out) {}

  void check(const std::string& what, const std::function<std::string()>& body) {
    CheckResult res{name_, what, false, ""};
    try {
      res.detail = body();
      res.passed = res.detail.empty();
    } catch (const std::exception& e) {
      res.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(res));
  }

 private:
  std::string name_;
  std::vector<CheckResult>& out_;
};

std::vector<std::pair<int, int>> sizes(const SelftestConfig& c, int min_n = 1) {
  std::vector<std::pair<int, int>> out;
  for (int n = min_n; n <= c.max_n; ++n)
    for (int r = 1; r <= c.max_r; ++r) out.emplace_back(n, r);
  return out;
}

std::string where(int n, int r) { return " at (" + std::to_string(n) + "," + std::to_string(r) + ")"; }

MultiIndex random_index(Rng& rng, int r, int lo, int hi) {
  std::vector<int> v;
  for (int t = 0; t < r; ++t) v.push_back(uniform(rng, lo, hi));
  return MultiIndex(std::move(v));
}

AffineWeylElement random_weyl(Rng& rng, int r) {
  std::vector<int> perm(static_cast<std::size_t>(r));
  for (int t = 0; t < r; ++t) perm[static_cast<std::size_t>(t)] = t;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> eps;
  for (int t = 0; t < r; ++t) eps.push_back(uniform(rng, -2, 2));
  return {Permutation(perm), eps};
}

void combinatorics_suite(const SelftestConfig& c, Rng& rng, std::vector<CheckResult>& out) {
  Suite s("core-combinatorics", out);
  s.check("dominance is a partial order and total_order extends it", [&]() -> std::string {
    for (auto [n, r] : sizes(c)) {
      const auto ps = total_order(n, r);
      if (ps.front().part(1) != r) return "first element is not (r,0,...)" + where(n, r);
      for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = 0; b < ps.size(); ++b) {
          const bool ab = dominance_leq(ps[a], ps[b]), ba = dominance_leq(ps[b], ps[a]);
          if (ab && ba && a != b) return "antisymmetry fails" + where(n, r);
          if (ab && !ba && b > a) return "strictly larger partition comes later" + where(n, r);
        }
    }
    return "";
  });
  s.check("dual partition is an involution", [&]() -> std::string {
    for (int r = 1; r <= 6; ++r)
      for (const auto& p : partitions(6, r))
        if (dual_partition(dual_partition(p)).padded(6) != p) return "fails for " + to_string(p);
    return "";
  });
  s.check("act is a right action", [&]() -> std::string {
    for (int k = 0; k < c.samples; ++k) {
      const int r = uniform(rng, 1, 4), n = uniform(rng, 1, 3);
      const auto i = random_index(rng, r, -5, 5);
      const auto g = random_weyl(rng, r), h = random_weyl(rng, r);
      if (act(act(i, g, n), h, n) != act(i, g * h, n)) return "fails for i=" + to_string(i);
    }
    return "";
  });
  s.check("double cosets partition the group", [&]() -> std::string {
    for (int r = 1; r <= 5; ++r)
      for (int k = 0; k < 10; ++k) {
        const auto h = YoungSubgroup::from_keys(random_index(rng, r, 1, 3).entries);
        const auto kk = YoungSubgroup::from_keys(random_index(rng, r, 1, 3).entries);
        const auto g = YoungSubgroup::full(r);
        std::uint64_t total = 0;
        for (const auto& d : double_cosets(h, g, kk)) {
          std::vector<Permutation> cell;
          for (const auto& a : h.elements())
            for (const auto& b : kk.elements()) cell.push_back(a * d * b);
          std::sort(cell.begin(), cell.end());
          total += static_cast<std::uint64_t>(std::unique(cell.begin(), cell.end()) - cell.begin());
        }
        if (total != g.order()) return "double coset sizes do not add up for r=" + std::to_string(r);
      }
    return "";
  });
}

void matrix_suite(const SelftestConfig& c, Rng& rng, std::vector<CheckResult>& out) {
  Suite s("periodic-matrix", out);
  s.check("matrix_of_pair is constant on orbits and inverts pair_of_matrix", [&]() -> std::string {
    for (int k = 0; k < c.samples; ++k) {
      const int r = uniform(rng, 1, 4), n = uniform(rng, 1, 3);
      const auto i = random_index(rng, r, -2 * n, 2 * n), j = random_index(rng, r, -2 * n, 2 * n);
      const auto g = random_weyl(rng, r);
      const auto a = matrix_of_pair(i, j, n);
      if (matrix_of_pair(act(i, g, n), act(j, g, n), n) != a) return "orbit invariance fails";
      const auto [p, q] = pair_of_matrix(a);
      if (matrix_of_pair(p, q, n) != a) return "round trip fails";
      if (a.row_sums() != matrix_of_pair(i, i, n).row_sums()) return "row sums differ from content";
    }
    return "";
  });
  s.check("transpose is an involution swapping marginals", [&]() -> std::string {
    for (auto [n, r] : sizes(c))
      for (const auto& a : enumerate_basis(n, r, 1)) {
        const auto t = a.transpose();
        if (t.transpose() != a || t.row_sums() != a.col_sums()) return "fails" + where(n, r);
      }
    return "";
  });
}

void algebra_suite(const SelftestConfig& c, Rng& rng, std::vector<CheckResult>& out) {
  Suite s("schur-algebra", out);
  Multiplier mul(c.method);
  s.check("idempotents absorb on the matching side only", [&]() -> std::string {
    for (auto [n, r] : sizes(c))
      for (const auto& a : enumerate_basis(n, r, std::min(c.window, 1))) {
        const auto x = AlgebraElement::basis(a);
        for (const auto& lam : compositions(n, r)) {
          const AlgebraElement zero(n, r);
          if (mul(idempotent(lam), x) != (lam == a.row_sums() ? x : zero)) return "left absorption" + where(n, r);
          if (mul(x, idempotent(lam)) != (lam == a.col_sums() ? x : zero)) return "right absorption" + where(n, r);
        }
      }
    return "";
  });
  s.check("identity is a two-sided unit", [&]() -> std::string {
    for (auto [n, r] : sizes(c)) {
      const auto one = identity(n, r);
      for (const auto& a : enumerate_basis(n, r, 1)) {
        const auto x = AlgebraElement::basis(a);
        if (mul(one, x) != x || mul(x, one) != x) return "fails" + where(n, r);
      }
    }
    return "";
  });
  s.check("associativity on random triples", [&]() -> std::string {
    for (auto [n, r] : sizes(c, 2)) {
      const auto basis = enumerate_basis(n, r, 1);
      for (int k = 0; k < c.samples / 4; ++k) {
        const auto& a = basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))];
        const auto bs = enumerate_basis(n, r, 1, a.col_sums());
        const auto& b = bs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(bs.size()) - 1))];
        const auto cs = enumerate_basis(n, r, 1, b.col_sums());
        const auto& cc = cs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(cs.size()) - 1))];
        const auto x = AlgebraElement::basis(a), y = AlgebraElement::basis(b), z = AlgebraElement::basis(cc);
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return "fails" + where(n, r);
      }
    }
    return "";
  });
  s.check("coset formula agrees with the oracle", [&]() -> std::string {
    for (auto [n, r] : sizes(c)) {
      const auto basis = enumerate_basis(n, r, 1);
      for (int k = 0; k < c.samples / 4; ++k) {
        const auto& a = basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))];
        const auto bs = enumerate_basis(n, r, 1, a.col_sums());
        const auto& b = bs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(bs.size()) - 1))];
        if (multiply_basis_oracle(a, b) != multiply_basis_coset(a, b)) return "disagreement" + where(n, r);
      }
    }
    return "";
  });
  s.check("transpose is an anti-automorphism", [&]() -> std::string {
    for (auto [n, r] : sizes(c)) {
      const auto basis = enumerate_basis(n, r, 1);
      for (int k = 0; k < c.samples / 4; ++k) {
        const auto& a = basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))];
        const auto bs = enumerate_basis(n, r, 1, a.col_sums());
        const auto& b = bs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(bs.size()) - 1))];
        const auto x = AlgebraElement::basis(a), y = AlgebraElement::basis(b);
        if (antiauto(mul(x, y)) != mul(antiauto(y), antiauto(x))) return "fails" + where(n, r);
      }
    }
    return "";
  });
  s.check("S(1,1) is the Laurent ring in one variable", [&]() -> std::string {
    for (int k = -5; k <= 5; ++k)
      for (int m = -5; m <= 5; ++m) {
        const PeriodicMatrix a(1, {{1, 1 + k, 1}}), b(1, {{1, 1 + m, 1}}), ab(1, {{1, 1 + k + m, 1}});
        if (mul(AlgebraElement::basis(a), AlgebraElement::basis(b)) != AlgebraElement::basis(ab))
          return "offsets " + std::to_string(k) + ", " + std::to_string(m);
      }
    return "";
  });
  s.check("classical presentation relations", [&]() -> std::string {
    for (auto [n, r] : sizes(c, 2)) {
      const auto rep = verify_classical_presentation(n, r, mul);
      for (const auto& f : rep.families)
        if (!f.passed()) return "family " + std::to_string(f.family) + where(n, r) + ": " + f.failures.front();
    }
    return "";
  });
}

void stratification_suite(const SelftestConfig& c, Rng& rng, std::vector<CheckResult>& out) {
  Suite s("stratification", out);
  s.check("rho(diag(lam)) = lam", [&]() -> std::string {
    for (auto [n, r] : sizes(c))
      for (const auto& lam : partitions(n, r))
        if (rho(diag(lam)) != lam) return "fails for " + to_string(lam);
    return "";
  });
  s.check("rho is a partition and the DP matches the path oracle", [&]() -> std::string {
    for (auto [n, r] : sizes(c)) {
      const auto basis = enumerate_basis(n, r, 1);
      for (int k = 0; k < c.samples; ++k) {
        const auto& a = basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))];
        if (d_values(a) != d_values_exhaustive(a)) return "DP and oracle differ" + where(n, r);
        (void)rho(a);
      }
    }
    return "";
  });
  s.check("B_(4,2,1) inverts x2, x3, x4", [&]() -> std::string {
    const auto p = b_lambda(Partition({4, 2, 1}));
    return p.variables == 4 && p.inverted == std::vector<int>{2, 3, 4} ? "" : to_string(p);
  });
  Multiplier mul(c.method);
  MembershipSolver solver(mul);
  s.check("generators are members of their ideal", [&]() -> std::string {
    for (auto [n, r] : sizes(c, 2)) {
      for (const auto& h : chain(n, r)) {
        const auto lam = total_order(n, r)[static_cast<std::size_t>(h.index - 1)];
        const auto cert = solver.prove(idempotent(lam), h, c.window);
        if (cert.verdict != Verdict::Confirmed) return "l_" + to_string(lam) + where(n, r);
      }
    }
    return "";
  });
  s.check("(1,0) and (0,1) generate the same ideal at (2,1)", [&]() -> std::string {
    return sn_orbit_ideal_equality(Composition({1, 0}), Composition({0, 1}), c.window, solver).confirmed()
               ? ""
               : "not confirmed";
  });
}

void simple_modules_suite(const SelftestConfig& c, Rng& rng, std::vector<CheckResult>& out) {
  Suite s("simple-modules", out);
  s.check("worked examples and empty C blocks", [&]() -> std::string {
    const ComplexRational a1(Rational(2)), a2(Rational(-3, 5)), a3(Rational(7));
    const auto b = phi(SegmentMultiset({{a1, 3}, {a2, 2}, {a3, 1}}), 3);
    if (b.lambda != Partition({3, 2, 1}) || b.coords != std::vector<ComplexRational>{a1, a2, a3})
      return "lambda=(3,2,1) example gives " + to_string(b);
    const auto b2 = phi(SegmentMultiset({{a1, 3}, {a2, 3}, {a3, 1}}), 3);
    if (b2.lambda != Partition({3, 2, 2}) || b2.coords != std::vector<ComplexRational>{a1 + a2, a1 * a2, a3})
      return "mu=(3,3,1) example gives " + to_string(b2);
    if (!c_lambda_empty(Partition({4, 2, 1}), 3)) return "C_(4,2,1) is not empty at n=3";
    return "";
  });
  s.check("phi_inverse undoes phi", [&]() -> std::string {
    for (int k = 0; k < c.samples; ++k) {
      const int r = uniform(rng, 1, 8), n = uniform(rng, 1, r);
      std::vector<Segment> segs;
      for (int left = r; left > 0;) {
        const int len = uniform(rng, 1, std::min(n, left));
        int num = uniform(rng, -9, 9);
        if (num == 0) num = 1;
        Rational v(num, uniform(rng, 1, 9));
        v.canonicalize();
        segs.push_back({ComplexRational(v), len});
        left -= len;
      }
      const SegmentMultiset m(segs);
      for (auto order : {SlotOrder::DescendingLength, SlotOrder::AscendingLength}) {
        const auto back = phi_inverse(phi(m, n, order), order);
        if (!back.exact || back.segments != m) return "round trip fails for " + to_string(m);
      }
      if (!validate_omega(phi(m, n, SlotOrder::AscendingLength).coords, phi(m, n).lambda))
        return "ascending phi leaves Omega for " + to_string(m);
    }
    return "";
  });
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestConfig& config) {
  std::vector<CheckResult> out;
  Rng rng(config.seed);
  combinatorics_suite(config, rng, out);
  matrix_suite(config, rng, out);
  algebra_suite(config, rng, out);
  stratification_suite(config, rng, out);
  simple_modules_suite(config, rng, out);
  return out;
}

}  // namespace affschur
