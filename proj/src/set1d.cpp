#include "sumset/set1d.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sumset {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo)
    throw std::invalid_argument("interval with lo > hi: [" + lo.str() + ", " + hi.str() + "]");
}

bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }

CompactSet1D::CompactSet1D(std::vector<Interval> raw) : parts_(std::move(raw)) {
  if (parts_.empty()) throw std::invalid_argument("empty set: need at least one interval");
  std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  // Merge overlapping and touching parts in one pass over the sorted list.
  std::vector<Interval> merged;
  merged.reserve(parts_.size());
  merged.push_back(parts_.front());
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i].lo <= merged.back().hi) {
      if (merged.back().hi < parts_[i].hi) merged.back().hi = parts_[i].hi;
    } else {
      merged.push_back(parts_[i]);
    }
  }
  parts_ = std::move(merged);
}

CompactSet1D CompactSet1D::interval(Rational lo, Rational hi) {
  return CompactSet1D({Interval(std::move(lo), std::move(hi))});
}

CompactSet1D CompactSet1D::point(Rational x) {
  Rational y = x;
  return CompactSet1D({Interval(std::move(x), std::move(y))});
}

CompactSet1D CompactSet1D::points(const std::vector<Rational>& xs) {
  std::vector<Interval> parts;
  parts.reserve(xs.size());
  for (const Rational& x : xs) parts.emplace_back(x, x);
  return CompactSet1D(std::move(parts));
}

Rational CompactSet1D::measure() const {
  Rational total(0);
  for (const Interval& p : parts_) total += p.length();
  return total;
}

bool CompactSet1D::contains_point(const Rational& x) const {
  for (const Interval& p : parts_) {
    if (x < p.lo) return false;
    if (x <= p.hi) return true;
  }
  return false;
}

bool CompactSet1D::contains(const CompactSet1D& other) const {
  // Both part lists are sorted and disjoint, so a single forward scan works:
  // each part of `other` must fit inside one part of *this.
  std::size_t i = 0;
  for (const Interval& q : other.parts_) {
    while (i < parts_.size() && parts_[i].hi < q.lo) ++i;
    if (i == parts_.size() || q.lo < parts_[i].lo || parts_[i].hi < q.hi) return false;
  }
  return true;
}

bool operator==(const CompactSet1D& a, const CompactSet1D& b) { return a.parts() == b.parts(); }
bool operator!=(const CompactSet1D& a, const CompactSet1D& b) { return !(a == b); }

CompactSet1D minkowski_sum(const CompactSet1D& a, const CompactSet1D& b) {
  std::vector<Interval> sums;
  sums.reserve(a.parts().size() * b.parts().size());
  for (const Interval& p : a.parts())
    for (const Interval& q : b.parts()) sums.emplace_back(p.lo + q.lo, p.hi + q.hi);
  return CompactSet1D(std::move(sums));
}

CompactSet1D operator+(const CompactSet1D& a, const CompactSet1D& b) {
  return minkowski_sum(a, b);
}

CompactSet1D scale(const CompactSet1D& a, const Rational& m) {
  if (m.sign() <= 0) throw std::domain_error("scale factor must be positive, got " + m.str());
  std::vector<Interval> parts;
  parts.reserve(a.parts().size());
  for (const Interval& p : a.parts()) parts.emplace_back(m * p.lo, m * p.hi);
  return CompactSet1D(std::move(parts));
}

CompactSet1D translate(const CompactSet1D& a, const Rational& t) {
  std::vector<Interval> parts;
  parts.reserve(a.parts().size());
  for (const Interval& p : a.parts()) parts.emplace_back(p.lo + t, p.hi + t);
  return CompactSet1D(std::move(parts));
}

CompactSet1D set_union(const CompactSet1D& a, const CompactSet1D& b) {
  std::vector<Interval> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return CompactSet1D(std::move(parts));
}

}  // namespace sumset
