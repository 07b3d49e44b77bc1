#include "affschur/simple_modules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affschur {

SegmentMultiset::SegmentMultiset(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (auto& s : segments_) {
    if (s.length < 1) throw std::invalid_argument("segment length must be positive");
    s.value.re.canonicalize();
    s.value.im.canonicalize();
  }
  std::sort(segments_.begin(), segments_.end(), [](const Segment& a, const Segment& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.value < b.value;
  });
}

int SegmentMultiset::total_length() const {
  int t = 0;
  for (const auto& s : segments_) t += s.length;
  return t;
}

std::string to_string(const SegmentMultiset& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& seg : s.segments()) {
    os << (first ? "" : " ") << to_string(seg.value) << 'x' << seg.length;
    first = false;
  }
  return os.str();
}

Partition shape(const SegmentMultiset& s) {
  std::vector<int> lengths;
  for (const auto& seg : s.segments()) lengths.push_back(seg.length);
  return Partition(std::move(lengths));
}

bool validate_c(const SegmentMultiset& s, int n, int r) {
  if (s.size() == 0 || s.total_length() != r) return false;
  return std::all_of(s.segments().begin(), s.segments().end(),
                     [n](const Segment& seg) { return !seg.value.is_zero() && seg.length >= 1 && seg.length <= n; });
}

bool c_lambda_empty(const Partition& lam, int n) { return lam.part(1) > n; }

std::string to_string(const OmegaPoint& b) {
  std::ostringstream os;
  os << "lambda=" << to_string(b.lambda) << " (";
  for (std::size_t k = 0; k < b.coords.size(); ++k) os << (k ? ", " : "") << to_string(b.coords[k]);
  os << ')';
  return os.str();
}

std::vector<int> omega_slots(const Partition& lam) {
  std::vector<int> out;
  for (int i = 1; i <= lam.n(); ++i) {
    const int m = lam.part(1) - lam.part(i + 1);
    if (m >= 1) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool validate_omega(const std::vector<ComplexRational>& a, const Partition& lam) {
  if (static_cast<int>(a.size()) != lam.part(1)) return false;
  for (int m : omega_slots(lam))
    if (a[static_cast<std::size_t>(m - 1)].is_zero()) return false;
  return true;
}

std::string to_string(SlotOrder o) { return o == SlotOrder::DescendingLength ? "descending" : "ascending"; }

SlotOrder parse_slot_order(std::string_view text) {
  if (text == "descending") return SlotOrder::DescendingLength;
  if (text == "ascending") return SlotOrder::AscendingLength;
  throw std::invalid_argument("unknown slot order '" + std::string(text) + "' (descending | ascending)");
}

namespace {

/// Segment lengths present in lam' read as a dual shape, with the number of
/// segments of each length, in slot order.
std::vector<std::pair<int, int>> groups_of(const Partition& dual, SlotOrder order) {
  std::vector<std::pair<int, int>> g;
  for (int len = dual.n(); len >= 1; --len) {
    const int count = dual.part(len) - dual.part(len + 1);
    if (count > 0) g.emplace_back(len, count);
  }
  if (order == SlotOrder::AscendingLength) std::reverse(g.begin(), g.end());
  return g;
}

}  // namespace

OmegaPoint phi(const SegmentMultiset& s, int n, SlotOrder order) {
  if (!validate_c(s, n, s.total_length())) throw std::invalid_argument("phi: segments do not lie in C_{r,n}");
  OmegaPoint b;
  b.lambda = dual_partition(shape(s)).padded(n);
  for (const auto& [len, count] : groups_of(b.lambda, order)) {
    std::vector<ComplexRational> values;
    for (const auto& seg : s.segments())
      if (seg.length == len) values.push_back(seg.value);
    for (int j = 1; j <= count; ++j)
      b.coords.push_back(elementary_symmetric<ComplexRational>(std::span<const ComplexRational>(values), j));
  }
  return b;
}

PhiInverse phi_inverse(const OmegaPoint& b, SlotOrder order) {
  const auto& lam = b.lambda;
  if (static_cast<int>(b.coords.size()) != lam.part(1))
    throw std::invalid_argument("phi_inverse: expected " + std::to_string(lam.part(1)) + " coordinates");
  if (order == SlotOrder::AscendingLength && !validate_omega(b.coords, lam))
    throw std::invalid_argument("phi_inverse: coordinates violate the Omega nonvanishing constraints");
  PhiInverse out;
  std::vector<Segment> segs;
  std::size_t slot = 0;
  for (const auto& [len, count] : groups_of(lam, order)) {
    // x^s - e_1 x^{s-1} + e_2 x^{s-2} - ...
    Polynomial p(static_cast<std::size_t>(count) + 1);
    p[static_cast<std::size_t>(count)] = ComplexRational(1);
    for (int j = 1; j <= count; ++j) {
      ComplexRational e = b.coords[slot + static_cast<std::size_t>(j - 1)];
      if (j % 2 == 1) e = ComplexRational() - e;
      p[static_cast<std::size_t>(count - j)] = e;
    }
    if (b.coords[slot + static_cast<std::size_t>(count - 1)].is_zero())
      throw std::invalid_argument("phi_inverse: a zero product coordinate would give a zero segment value");
    slot += static_cast<std::size_t>(count);
    const auto roots = monic_roots(p);
    out.exact = out.exact && roots.exact;
    out.residual = std::max(out.residual, roots.residual);
    for (const auto& root : roots.roots) segs.push_back({root, len});
  }
  out.segments = SegmentMultiset(std::move(segs));
  return out;
}

}  // namespace affschur
