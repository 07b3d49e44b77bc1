#pragma once

#include <vector>

#include "affschur/scalar.hpp"

namespace affschur {

/// Dense polynomial over Q(i), coefficients from the constant term up.
using Polynomial = std::vector<ComplexRational>;

Polynomial derivative(const Polynomial& p);
ComplexRational evaluate(const Polynomial& p, const ComplexRational& x);
/// Monic gcd; zero polynomial gives an empty vector.
Polynomial gcd(Polynomial a, Polynomial b);
/// Quotient of exact division; throws std::logic_error on a nonzero remainder.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Square-free factors (factor, multiplicity) of a monic polynomial.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& monic);

struct RootResult {
  std::vector<ComplexRational> roots;  // with multiplicity
  bool exact = false;                  // every root verified exactly
  long double residual = 0;            // max |p(root)| when inexact
};

/// Roots of a monic polynomial: numeric approximation on each square-free
/// factor, then rational reconstruction verified exactly. Falls back to
/// the rounded approximations when some root is not in Q(i).
RootResult monic_roots(const Polynomial& monic);

}  // namespace affschur
