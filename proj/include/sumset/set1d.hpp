#pragma once

#include <cstddef>
#include <vector>

#include "sumset/rational.hpp"

namespace sumset {

// Closed interval [lo, hi] with rational endpoints; lo == hi is a point.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational lo_, Rational hi_);

  bool is_point() const { return lo == hi; }
  Rational length() const { return hi - lo; }
};

bool operator==(const Interval& a, const Interval& b);

// A nonempty compact subset of the line: a finite union of closed rational
// intervals, stored normalized — sorted by left endpoint, pairwise disjoint,
// with touching intervals merged. Every constructor normalizes, so two sets
// are equal as point sets iff their part lists compare equal.
class CompactSet1D {
 public:
  explicit CompactSet1D(std::vector<Interval> raw);

  static CompactSet1D interval(Rational lo, Rational hi);
  static CompactSet1D point(Rational x);
  static CompactSet1D points(const std::vector<Rational>& xs);

  const std::vector<Interval>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }

  const Rational& min() const { return parts_.front().lo; }
  const Rational& max() const { return parts_.back().hi; }
  Interval convex_hull() const { return Interval(min(), max()); }
  Rational diameter() const { return max() - min(); }
  Rational measure() const;  // total length (1-D Lebesgue measure)

  bool is_interval() const { return parts_.size() == 1; }
  bool is_point() const { return parts_.size() == 1 && parts_.front().is_point(); }

  bool contains_point(const Rational& x) const;
  bool contains(const CompactSet1D& other) const;

 private:
  std::vector<Interval> parts_;
};

bool operator==(const CompactSet1D& a, const CompactSet1D& b);
bool operator!=(const CompactSet1D& a, const CompactSet1D& b);

// {x + y : x in a, y in b}
CompactSet1D minkowski_sum(const CompactSet1D& a, const CompactSet1D& b);
CompactSet1D operator+(const CompactSet1D& a, const CompactSet1D& b);

// {m x : x in a}; the factor must be positive.
CompactSet1D scale(const CompactSet1D& a, const Rational& m);
CompactSet1D translate(const CompactSet1D& a, const Rational& t);
CompactSet1D set_union(const CompactSet1D& a, const CompactSet1D& b);

}  // namespace sumset
