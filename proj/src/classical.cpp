#include "affschur/classical.hpp"

#include <stdexcept>

namespace affschur {

namespace {

AlgebraElement generator(int n, int r, int row, int col) {
  AlgebraElement x(n, r);
  if (r < 1) return x;
  for (const auto& lam : compositions(n, r - 1)) {
    std::vector<MatrixEntry> es{{row, col, 1}};
    for (int k = 1; k <= n; ++k)
      if (lam.part(k) > 0) es.push_back({k, k, lam.part(k)});
    x.add_term(PeriodicMatrix(n, std::move(es)), 1);
  }
  return x;
}

void check_index(int n, int i) {
  if (n < 2 || i < 1 || i >= n) throw std::invalid_argument("classical generator index must satisfy 1 <= i < n");
}

/// lam + a*alpha_i - a*alpha_{i+1}.
Composition shifted(const Composition& lam, int i, int a) {
  auto p = lam.parts();
  p[static_cast<std::size_t>(i - 1)] += a;
  p[static_cast<std::size_t>(i)] -= a;
  return Composition(std::move(p));
}

}  // namespace

AlgebraElement classical_e(int n, int r, int i) {
  check_index(n, i);
  return generator(n, r, i, i + 1);
}

AlgebraElement classical_f(int n, int r, int i) {
  check_index(n, i);
  return generator(n, r, i + 1, i);
}

bool PresentationReport::all_passed() const {
  for (const auto& f : families)
    if (!f.passed()) return false;
  return true;
}

PresentationReport verify_classical_presentation(int n, int r, Multiplier& mul) {
  if (n < 2 || r < 1) throw std::invalid_argument("classical presentation needs n >= 2 and r >= 1");
  PresentationReport rep{n, r, {}};
  const auto lams = compositions(n, r);
  std::vector<AlgebraElement> e, f;
  for (int i = 1; i < n; ++i) {
    e.push_back(classical_e(n, r, i));
    f.push_back(classical_f(n, r, i));
  }
  const AlgebraElement zero(n, r);
  auto expect = [&](RelationCheck& rc, const AlgebraElement& lhs, const AlgebraElement& rhs, const std::string& what) {
    ++rc.instances;
    if (lhs != rhs) rc.failures.push_back(what + ": " + to_string(lhs) + " != " + to_string(rhs));
  };
  auto l = [](const Composition& c) { return idempotent(c); };

  RelationCheck r1{1, "l_lam l_mu = delta l_lam, sum l_lam = 1", 0, {}};
  for (const auto& a : lams)
    for (const auto& b : lams)
      expect(r1, mul(l(a), l(b)), a == b ? l(a) : zero, "l_" + to_string(a) + " l_" + to_string(b));
  AlgebraElement one(n, r);
  for (const auto& a : lams) one += l(a);
  expect(r1, one, identity(n, r), "sum of idempotents");
  for (const auto& g : {e, f})
    for (const auto& x : g) {
      expect(r1, mul(one, x), x, "unit on the left");
      expect(r1, mul(x, one), x, "unit on the right");
    }

  RelationCheck r2{2, "e_i l_lam", 0, {}}, r3{3, "l_lam e_i", 0, {}}, r4{4, "f_i l_lam", 0, {}},
      r5{5, "l_lam f_i", 0, {}};
  for (int i = 1; i < n; ++i) {
    const auto& ei = e[static_cast<std::size_t>(i - 1)];
    const auto& fi = f[static_cast<std::size_t>(i - 1)];
    for (const auto& lam : lams) {
      const std::string tag = "i=" + std::to_string(i) + " lam=" + to_string(lam);
      const int li = lam.part(i), li1 = lam.part(i + 1);
      expect(r2, mul(ei, l(lam)), li1 >= 1 ? mul(l(shifted(lam, i, 1)), ei) : zero, tag);
      expect(r3, mul(l(lam), ei), li >= 1 ? mul(ei, l(shifted(lam, i, -1))) : zero, tag);
      expect(r4, mul(fi, l(lam)), li >= 1 ? mul(l(shifted(lam, i, -1)), fi) : zero, tag);
      expect(r5, mul(l(lam), fi), li1 >= 1 ? mul(fi, l(shifted(lam, i, 1))) : zero, tag);
    }
  }

  RelationCheck r6{6, "e_i f_j - f_j e_i = delta_ij sum (lam_i - lam_{i+1}) l_lam", 0, {}};
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      const auto& ei = e[static_cast<std::size_t>(i - 1)];
      const auto& fj = f[static_cast<std::size_t>(j - 1)];
      AlgebraElement rhs(n, r);
      if (i == j)
        for (const auto& lam : lams) rhs.add_term(diag(lam), lam.part(i) - lam.part(i + 1));
      expect(r6, mul(ei, fj) - mul(fj, ei), rhs, "i=" + std::to_string(i) + " j=" + std::to_string(j));
    }

  auto serre = [&](RelationCheck& rc, const std::vector<AlgebraElement>& g) {
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (i == j) continue;
        const auto& gi = g[static_cast<std::size_t>(i - 1)];
        const auto& gj = g[static_cast<std::size_t>(j - 1)];
        const std::string tag = "i=" + std::to_string(i) + " j=" + std::to_string(j);
        if (std::abs(i - j) == 1) {
          auto gii = mul(gi, gi);
          auto lhs = mul(gii, gj) - Integer(2) * mul(mul(gi, gj), gi) + mul(gj, gii);
          expect(rc, lhs, zero, tag);
        } else {
          expect(rc, mul(gi, gj), mul(gj, gi), tag);
        }
      }
  };
  RelationCheck r7{7, "Serre relations for e", 0, {}}, r8{8, "Serre relations for f", 0, {}};
  serre(r7, e);
  serre(r8, f);

  rep.families = {r1, r2, r3, r4, r5, r6, r7, r8};
  return rep;
}

}  // namespace affschur
