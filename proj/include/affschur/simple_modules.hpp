#pragma once

#include <string>
#include <vector>

#include "affschur/combinatorics.hpp"
#include "affschur/roots.hpp"
#include "affschur/scalar.hpp"

namespace affschur {

/// Constant sequence (a, ..., a) of length `length`.
struct Segment {
  ComplexRational value;
  int length = 1;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Unordered collection of segments, kept sorted by length (descending)
/// then value so that equality is multiset equality.
class SegmentMultiset {
 public:
  SegmentMultiset() = default;
  explicit SegmentMultiset(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  int total_length() const;
  std::size_t size() const { return segments_.size(); }

  friend bool operator==(const SegmentMultiset&, const SegmentMultiset&) = default;

 private:
  std::vector<Segment> segments_;
};

std::string to_string(const SegmentMultiset& s);

/// Sorted segment lengths; one part per segment.
Partition shape(const SegmentMultiset& s);

/// Membership in C_{r,n}: nonempty, nonzero values, lengths in [1, n],
/// total length r.
bool validate_c(const SegmentMultiset& s, int n, int r);
/// C_lam is empty exactly when lam_1 > n.
bool c_lambda_empty(const Partition& lam, int n);

struct OmegaPoint {
  Partition lambda;
  std::vector<ComplexRational> coords;  // a_1 .. a_{lambda_1}

  friend bool operator==(const OmegaPoint&, const OmegaPoint&) = default;
};

std::string to_string(const OmegaPoint& b);

/// Indices m(i) = lam_1 - lam_{i+1} (1 <= i <= n, lam_{n+1} = 0) that are
/// positive; these coordinates must be nonzero.
std::vector<int> omega_slots(const Partition& lam);
bool validate_omega(const std::vector<ComplexRational>& a, const Partition& lam);

/// Where the elementary symmetric values of an equal-length group go.
/// DescendingLength fills groups from the longest segments down, which is
/// the layout of the worked examples. AscendingLength fills from the
/// shortest up, which puts every group's product e_s in an inverted slot.
enum class SlotOrder { DescendingLength, AscendingLength };

std::string to_string(SlotOrder o);
SlotOrder parse_slot_order(std::string_view text);

/// phi: C_{r,n} -> Omega_{lam'}, lam' = dual of shape(s), with n parts.
/// Throws std::invalid_argument when s is not in C_{r,n}.
OmegaPoint phi(const SegmentMultiset& s, int n, SlotOrder order = SlotOrder::DescendingLength);

struct PhiInverse {
  SegmentMultiset segments;
  bool exact = true;
  long double residual = 0;
};

/// Rebuilds the segments group by group from the roots of
/// x^s - e_1 x^{s-1} + ... + (-1)^s e_s. Throws std::invalid_argument when
/// the coordinates do not fit lambda or a group's product vanishes; in
/// ascending mode the full Omega constraint is checked.
PhiInverse phi_inverse(const OmegaPoint& b, SlotOrder order = SlotOrder::DescendingLength);

}  // namespace affschur
