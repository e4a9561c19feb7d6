#include "sumset/index.hpp"

#include <stdexcept>

namespace sumset {

Rational largest_gap(const CompactSet1D& a) {
  Rational g(0);
  const auto& parts = a.parts();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    Rational gap = parts[i].lo - parts[i - 1].hi;
    if (g < gap) g = gap;
  }
  return g;
}

Rational schneider_index(const CompactSet1D& a) {
  if (a.is_point()) return Rational(0);
  return largest_gap(a) / a.diameter();
}

Rational sum_index(const std::vector<CompactSet1D>& sets) {
  if (sets.empty()) throw std::invalid_argument("sum_index: empty list of sets");
  CompactSet1D acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) acc = acc + sets[i];
  return schneider_index(acc);
}

ProductSet::ProductSet(std::vector<CompactSet1D> axes_) : axes(std::move(axes_)) {
  if (axes.empty()) throw std::invalid_argument("product set needs at least one axis");
}

Rational product_index(const ProductSet& a) {
  // The largest gap of a box product is realized along a single axis while
  // the other coordinates stay inside their factors, and diameters are
  // compared axis-wise under the max metric, so the index is the axis max.
  Rational best(0);
  for (const CompactSet1D& axis : a.axes) best = max(best, schneider_index(axis));
  return best;
}

Rational product_sum_index(const std::vector<ProductSet>& sets) {
  if (sets.empty()) throw std::invalid_argument("product_sum_index: empty list of sets");
  const std::size_t dim = sets.front().dimension();
  for (const ProductSet& s : sets)
    if (s.dimension() != dim)
      throw std::invalid_argument("product_sum_index: dimension mismatch between summands");
  Rational best(0);
  for (std::size_t axis = 0; axis < dim; ++axis) {
    CompactSet1D acc = sets.front().axes[axis];
    for (std::size_t i = 1; i < sets.size(); ++i) acc = acc + sets[i].axes[axis];
    best = max(best, schneider_index(acc));
  }
  return best;
}

Rational hausdorff_to_hull(const CompactSet1D& a) { return largest_gap(a) / 2; }

}  // namespace sumset
