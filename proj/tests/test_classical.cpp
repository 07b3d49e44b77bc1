#include "doctest.h"

#include "affschur/classical.hpp"

using namespace affschur;

TEST_CASE("generators") {
  const auto e = classical_e(2, 1, 1);
  CHECK(e == AlgebraElement::basis(PeriodicMatrix(2, {{1, 2, 1}})));
  CHECK(classical_f(2, 1, 1) == AlgebraElement::basis(PeriodicMatrix(2, {{2, 1, 1}})));
  CHECK_THROWS_AS(classical_e(3, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(classical_f(1, 2, 1), std::invalid_argument);
  for (int i = 1; i <= 2; ++i)
    for (const auto& x : {classical_e(3, 3, i), classical_f(3, 3, i)}) {
      CHECK(x.size() == compositions(3, 2).size());
      for (const auto& [k, c] : x.terms()) {
        CHECK(k.spread() == 0);
        CHECK(c == 1);
      }
    }
  // Keys of e_i move one unit of weight from column i+1 to row i.
  const auto e2 = classical_e(3, 3, 2);
  for (const auto& [k, c] : e2.terms()) {
    auto row = k.row_sums().parts(), col = k.col_sums().parts();
    CHECK(row[1] - col[1] == 1);
    CHECK(col[2] - row[2] == 1);
    CHECK(row[0] == col[0]);
  }
}

TEST_CASE("presentation relations hold") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 2}}) {
    Multiplier mul;
    const auto rep = verify_classical_presentation(n, r, mul);
    REQUIRE(rep.families.size() == 8);
    for (const auto& f : rep.families) {
      INFO("n=" << n << " r=" << r << " family " << f.family << ": " << (f.passed() ? "" : f.failures.front()));
      CHECK(f.passed());
      if (n >= 3 || f.family <= 6) CHECK(f.instances > 0);
    }
  }
}

TEST_CASE("a wrong relation is reported as a failure") {
  Multiplier mul;
  const auto e = classical_e(2, 2, 1), f = classical_f(2, 2, 1);
  // e f - f e is not zero at (2,2).
  CHECK(mul(e, f) - mul(f, e) != AlgebraElement(2, 2));
}
