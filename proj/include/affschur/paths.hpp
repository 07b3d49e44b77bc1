#pragma once

#include <vector>

#include "affschur/periodic_matrix.hpp"

namespace affschur {

/// (d_1, ..., d_n): d_j is the largest total of entries covered by a union
/// of j antidiagonal (up/right) paths, each entry class counted once.
/// Reduces to maximum-weight unions of j chains in the up-right order on
/// the stored entries, solved by a subset DP.
std::vector<int> d_values(const PeriodicMatrix& a);

/// Same quantity by building explicit staircase paths through periodic
/// copies of the entries, with vertical tails, and reading off the covered
/// cells. Exponential; meant as an oracle for small r.
std::vector<int> d_values_exhaustive(const PeriodicMatrix& a);

/// True when some period translate of entry `hi` sits weakly above and
/// weakly right of entry `lo` (and the two are distinct entries).
bool up_right_of(const MatrixEntry& hi, const MatrixEntry& lo, int n);

}  // namespace affschur
