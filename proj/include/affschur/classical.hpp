#pragma once

#include <string>
#include <vector>

#include "affschur/algebra.hpp"

namespace affschur {

/// e_i = sum over lam in Lambda(n, r-1) of e_{E_{i,i+1} + diag(lam)}, 1 <= i < n.
AlgebraElement classical_e(int n, int r, int i);
/// f_i = sum over lam in Lambda(n, r-1) of e_{E_{i+1,i} + diag(lam)}.
AlgebraElement classical_f(int n, int r, int i);

struct RelationCheck {
  int family = 0;  // 1..8
  std::string description;
  std::size_t instances = 0;
  std::vector<std::string> failures;  // one line per failing instance
  bool passed() const { return failures.empty(); }
};

struct PresentationReport {
  int n = 0;
  int r = 0;
  std::vector<RelationCheck> families;
  bool all_passed() const;
};

/// Evaluates the eight relation families of the e_i, f_i, l_lam
/// presentation of the classical Schur algebra inside S(n, r).
PresentationReport verify_classical_presentation(int n, int r, Multiplier& mul);

}  // namespace affschur
