#include "core/interval.hpp"

#include <algorithm>
#include <cmath>

namespace metamcmc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

IntervalUnion IntervalUnion::full_line() { return interval(-kInf, kInf); }

IntervalUnion IntervalUnion::interval(double lo, double hi) {
  return from_pieces({Interval{lo, hi}});
}

IntervalUnion IntervalUnion::from_pieces(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval& p) { return p.degenerate() || std::isnan(p.lo) || std::isnan(p.hi); });
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalUnion u;
  for (const Interval& p : pieces) {
    if (!u.pieces_.empty() && p.lo <= u.pieces_.back().hi) {
      u.pieces_.back().hi = std::max(u.pieces_.back().hi, p.hi);
    } else {
      u.pieces_.push_back(p);
    }
  }
  return u;
}

bool IntervalUnion::contains(double x) const {
  // Binary search over sorted disjoint pieces.
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](double v, const Interval& p) { return v < p.lo; });
  if (it == pieces_.begin()) return false;
  --it;
  return x >= it->lo && x < it->hi;
}

IntervalUnion IntervalUnion::complement() const {
  std::vector<Interval> out;
  double cursor = -kInf;
  for (const Interval& p : pieces_) {
    if (cursor < p.lo) out.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor < kInf) out.push_back({cursor, kInf});
  return from_pieces(std::move(out));
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
  std::vector<Interval> out;
  for (const Interval& a : pieces_) {
    for (const Interval& b : other.pieces_) {
      if (b.lo >= a.hi) break;
      const double lo = std::max(a.lo, b.lo);
      const double hi = std::min(a.hi, b.hi);
      if (lo < hi) out.push_back({lo, hi});
    }
  }
  return from_pieces(std::move(out));
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
  std::vector<Interval> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return from_pieces(std::move(all));
}

IntervalUnion IntervalUnion::clipped(double lo, double hi) const {
  return intersect(interval(lo, hi));
}

bool IntervalUnion::is_subset_of(const IntervalUnion& other) const {
  const IntervalUnion both = intersect(other);
  return both == *this;
}

double IntervalUnion::total_length() const {
  double sum = 0.0;
  for (const Interval& p : pieces_) sum += p.length();
  return sum;
}

bool IntervalUnion::bounded() const {
  if (pieces_.empty()) return true;
  return std::isfinite(pieces_.front().lo) && std::isfinite(pieces_.back().hi);
}

}  // namespace metamcmc
