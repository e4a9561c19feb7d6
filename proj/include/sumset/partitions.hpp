#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sumset/index.hpp"
#include "sumset/rational.hpp"
#include "sumset/set1d.hpp"

namespace sumset {

// A weighted edge of a fractional partition: a nonempty subset of the ground
// set {1, ..., m} (1-based, kept sorted) with a positive rational weight.
struct WeightedEdge {
  std::vector<int> members;
  Rational weight;
};

// Fractional partition of {1, ..., m}: for every element, the weights of the
// edges containing it sum to exactly 1.
struct FractionalPartition {
  int m = 0;
  std::vector<WeightedEdge> edges;
};

struct PartitionDiagnostics {
  bool valid = false;
  std::string message;  // empty when valid; otherwise the first defect found
};

PartitionDiagnostics validate_partition(const FractionalPartition& p);

// Clears denominators: q is the lcm of the weight denominators and each edge
// appears with integer multiplicity weight * q; every ground element is then
// covered exactly q times counting multiplicity.
struct ExpandedPartition {
  mpz_class q;
  std::vector<std::pair<std::vector<int>, mpz_class>> copies;  // (edge, multiplicity)
};

ExpandedPartition expand_rational(const FractionalPartition& p);

// An indexed family of 1-D sets the partition machinery operates on.
struct SetSystem {
  std::vector<CompactSet1D> sets;
};

CompactSet1D subset_sum(const SetSystem& sys, const std::vector<int>& members);

// Fractional subadditivity of the index under Minkowski summation:
//   c(A_1 + ... + A_m) <= sum over edges S of weight(S) * c(sum_{i in S} A_i).
struct SubadditivityReport {
  Rational lhs;
  Rational rhs;
  bool holds;
  bool is_equality;
};

SubadditivityReport check_fractional_subadditive_c(const SetSystem& sys,
                                                   const FractionalPartition& p);

// Removes the one-point sets from the system (summing with a point only
// translates), drops them from every edge, merges edges whose images
// coincide, and drops edges that vanish. The weighted index sum is preserved
// exactly. Throws if every set is a single point.
std::pair<SetSystem, FractionalPartition> translated_partition(const SetSystem& sys,
                                                               const FractionalPartition& p);

// Fractional superadditivity of measure under Minkowski summation:
//   |A_1 + ... + A_m| >= sum over edges S of weight(S) * |sum_{i in S} A_i|.
struct SuperadditivityReport {
  Rational lhs;
  Rational rhs;
  bool holds;
};

SuperadditivityReport check_fractional_superadditive_measure(const SetSystem& sys,
                                                             const FractionalPartition& p);
// Box-product variant; the measure of a product is the product of the
// axis-wise measures of the axis sums.
SuperadditivityReport check_fractional_superadditive_measure(const std::vector<ProductSet>& sys,
                                                             const FractionalPartition& p);

// Supermodularity check for a set function v on subsets of {1, ..., m} given
// as a table indexed by bitmask (bit i-1 = element i), v[0] = 0 required:
//   v(S u T) + v(S n T) >= v(S) + v(T) for all S, T.
// m is capped at 10 (the check is quadratic in 2^m).
struct ModularityReport {
  bool holds = true;
  unsigned mask_s = 0;  // first violating pair, when !holds
  unsigned mask_t = 0;
  std::string detail;
};

ModularityReport check_supermodular(const std::vector<Rational>& v, int m);
ModularityReport check_submodular(const std::vector<Rational>& v, int m);

// Tables of subset measures / indices of subset sums for a set system,
// indexed by bitmask; entry 0 is 0 (the empty sum is {0}).
std::vector<Rational> subset_measure_table(const SetSystem& sys);
std::vector<Rational> subset_index_table(const SetSystem& sys);

// Middle-term smoothing bound: c(A + B + C) <= max(c(A + B), c(B + C)).
struct StrongBoundReport {
  Rational lhs;
  Rational rhs;
  bool holds;
};

StrongBoundReport strong_bound_check(const CompactSet1D& a, const CompactSet1D& b,
                                     const CompactSet1D& c);

// Union form over a system: c(sum over S u T) <= max(c(sum over S), c(sum
// over T)) for nonempty S, T (the overlap acts as the smoothing middle term;
// an empty overlap contributes the neutral {0}).
StrongBoundReport strong_bound_union_check(const SetSystem& sys, const std::vector<int>& s,
                                           const std::vector<int>& t);

}  // namespace sumset
