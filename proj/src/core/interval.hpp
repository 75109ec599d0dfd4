#pragma once

#include <limits>
#include <vector>

namespace metamcmc {

/// Half-open interval [lo, hi). Endpoints may be +-infinity.
struct Interval {
  double lo;
  double hi;
  bool degenerate() const { return !(lo < hi); }
  double length() const { return hi - lo; }
};

/// Ordered union of pairwise disjoint half-open intervals. Degenerate pieces
/// (lo >= hi) are dropped on construction, so arithmetic on partitions never
/// needs special cases for empty slivers.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  static IntervalUnion empty() { return IntervalUnion(); }
  static IntervalUnion full_line();
  static IntervalUnion interval(double lo, double hi);
  /// Sorts, merges overlapping/adjacent pieces, drops degenerate ones.
  static IntervalUnion from_pieces(std::vector<Interval> pieces);

  bool is_empty() const { return pieces_.empty(); }
  const std::vector<Interval>& pieces() const { return pieces_; }

  bool contains(double x) const;

  IntervalUnion complement() const;
  IntervalUnion intersect(const IntervalUnion& other) const;
  IntervalUnion unite(const IntervalUnion& other) const;
  /// Intersection with [lo, hi).
  IntervalUnion clipped(double lo, double hi) const;

  bool is_subset_of(const IntervalUnion& other) const;

  /// Total Lebesgue measure; may be +infinity.
  double total_length() const;
  bool bounded() const;

  bool operator==(const IntervalUnion& other) const { return pieces_ == other.pieces_; }

 private:
  std::vector<Interval> pieces_;  // disjoint, sorted by lo
};

inline bool operator==(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.hi == b.hi;
}

}  // namespace metamcmc
