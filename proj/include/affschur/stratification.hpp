#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "affschur/algebra.hpp"
#include "affschur/linear_span.hpp"
#include "affschur/paths.hpp"

namespace affschur {

/// Increments of d_values as a raw vector; rho() additionally checks the
/// result is a partition of r.
std::vector<int> rho_vector(const PeriodicMatrix& a);
/// Throws std::logic_error if the increments fail to form a partition.
Partition rho(const PeriodicMatrix& a);

struct CellLabel {
  Partition label;
  int chain_index = 0;  // 1-based position in total_order
};

CellLabel cell_label(const PeriodicMatrix& a);

/// J_i: two-sided ideal generated by l_mu for the first i partitions of
/// the total order.
struct IdealHandle {
  int n = 0;
  int r = 0;
  int index = 0;
  std::vector<Composition> generators;
};

std::vector<IdealHandle> chain(int n, int r);
/// J_i for 0 <= i <= t; J_0 has no generators.
IdealHandle chain_ideal(int n, int r, int i);

struct WitnessTerm {
  Rational coefficient;
  PeriodicMatrix left;
  Composition middle;
  PeriodicMatrix right;
};

enum class Verdict { Confirmed, UnknownAtBound };

std::string to_string(Verdict v);

struct MembershipCertificate {
  Verdict verdict = Verdict::UnknownAtBound;
  int window = 0;
  std::vector<WitnessTerm> witness;
  /// Hash of the element rebuilt from the witness (0 unless confirmed).
  std::size_t product_hash = 0;
};

/// Rational linear combination of basis keys.
using RationalElement = std::map<PeriodicMatrix, Rational>;

RationalElement to_rational(const AlgebraElement& x);
std::size_t hash_element(const RationalElement& x);

/// Decides x in the ideal generated by a set of idempotents, truncated to
/// products e_B l_mu e_C with spread(B), spread(C) <= W. Works block by
/// block in (row, col); spans are cached per block and window.
class MembershipSolver {
 public:
  explicit MembershipSolver(Multiplier& mul) : mul_(mul) {}

  MembershipCertificate prove(const AlgebraElement& x, const std::vector<Composition>& generators, int window);
  MembershipCertificate prove(const AlgebraElement& x, const IdealHandle& ideal, int window) {
    return prove(x, ideal.generators, window);
  }
  /// Rebuilds the witness by multiplication; true iff it equals x.
  bool verify(const MembershipCertificate& cert, const AlgebraElement& x);

  /// Reduction of a rational element modulo the truncated ideal in one
  /// block; the residual is empty iff the element lies in that span.
  RationalElement residual(const RationalElement& x, const std::vector<Composition>& generators, int window);

  Multiplier& multiplier() { return mul_; }

 private:
  struct BlockSpan {
    KeyIndex keys;
    RationalSpan span;
    std::vector<std::tuple<PeriodicMatrix, Composition, PeriodicMatrix>> sources;
  };
  using BlockKey = std::tuple<Composition, Composition, std::vector<Composition>, int>;

  BlockSpan& block(const Composition& row, const Composition& col, const std::vector<Composition>& generators,
                   int window);

  Multiplier& mul_;
  std::map<BlockKey, std::unique_ptr<BlockSpan>> cache_;
};

struct OrbitIdealVerdict {
  MembershipCertificate forward;   // l_lam in <l_mu>
  MembershipCertificate backward;  // l_mu in <l_lam>
  bool confirmed() const {
    return forward.verdict == Verdict::Confirmed && backward.verdict == Verdict::Confirmed;
  }
};

/// Checks that l_lam and l_mu generate the same ideal when mu is a
/// rearrangement of lam. Throws std::invalid_argument otherwise.
OrbitIdealVerdict sn_orbit_ideal_equality(const Composition& lam, const Composition& mu, int window,
                                          MembershipSolver& solver);

struct StratumReport {
  Partition lambda;
  int chain_index = 0;
  int window = 0;
  std::size_t keys = 0;                // basis keys of l_lam S l_lam with spread <= W
  std::size_t translation_keys = 0;
  std::size_t keys_in_ideal = 0;       // reduce to zero modulo J_{i-1}
  std::size_t keys_in_translation_span = 0;
  std::size_t pairs_tested = 0;
  std::vector<std::string> noncommuting;  // one line per failing pair
  std::vector<std::string> unspanned;     // keys not reduced into the translation span
  bool commutative() const { return noncommuting.empty(); }
};

/// Cuts l_lam S l_lam down modulo the truncated J_{i-1}: reduces every key of
/// spread <= W against the ideal plus the translation-type keys, and checks
/// that every pair of keys commutes modulo the ideal.
StratumReport stratum_report(const Partition& lam, int window, MembershipSolver& solver);

struct LaurentPresentation {
  int variables = 0;
  std::vector<int> inverted;  // ascending indices in [1, variables]
};

/// Z[x_1..x_{lam_1}] with x_{m(i)} inverted, m(i) = lam_1 - lam_{i+1}, m(i) > 0.
LaurentPresentation b_lambda(const Partition& lam);
std::string to_string(const LaurentPresentation& p);

}  // namespace affschur
