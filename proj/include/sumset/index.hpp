#pragma once

#include <vector>

#include "sumset/rational.hpp"
#include "sumset/set1d.hpp"

namespace sumset {

// Length of the largest bounded gap of the set (largest open interval between
// consecutive parts). Zero for a single interval or point.
Rational largest_gap(const CompactSet1D& a);

// Non-convexity index: largest gap divided by diameter. By convention 0 for a
// single point; always in [0, 1]; 0 exactly for intervals, 1 exactly for a
// pair of distinct points.
Rational schneider_index(const CompactSet1D& a);

// Index of the Minkowski sum of the whole list.
Rational sum_index(const std::vector<CompactSet1D>& sets);

// Axis-aligned product of 1-D sets: A = axes[0] x ... x axes[n-1].
struct ProductSet {
  std::vector<CompactSet1D> axes;
  explicit ProductSet(std::vector<CompactSet1D> axes_);
  std::size_t dimension() const { return axes.size(); }
};

// For a box-product set, the index is computed per axis and the maximum taken;
// gaps on different axes never combine.
Rational product_index(const ProductSet& a);

// Index of the Minkowski sum of several equal-dimension product sets
// (the sum is the axis-wise sum, so again a product set).
Rational product_sum_index(const std::vector<ProductSet>& sets);

// Hausdorff distance from a set to its convex hull: half the largest gap.
Rational hausdorff_to_hull(const CompactSet1D& a);

}  // namespace sumset
