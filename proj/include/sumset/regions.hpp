#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sumset/rational.hpp"
#include "sumset/set1d.hpp"

namespace sumset {

// A point of the attainable-value region for m sets: one rational per
// nonempty subset of {1, ..., m}, keyed by bitmask (bit i-1 = element i).
// The canonical vector ordering lists subsets by size, then lexicographically:
// for m = 3 that is {1},{2},{3},{1,2},{1,3},{2,3},{1,2,3} (the empty set,
// when displayed, leads with value 0).
struct RegionPoint {
  int m = 0;
  std::map<unsigned, Rational> values;

  explicit RegionPoint(int m_);
  void set(unsigned mask, Rational v);
  const Rational& at(unsigned mask) const;

  static std::vector<unsigned> canonical_masks(int m);  // nonempty subsets
};

// Attainable index triples (c1, c2, c12) of (A1, A2, A1 + A2). The region is
// a union of pieces labeled by which of the two sets are non-degenerate:
//   {1,2}: c1, c2 in [0,1] and lower_bound_L <= c12 < upper_bound_M
//   empty: (0, 0, 0)
//   {1}:   c2 = 0, c12 = c1 in [0,1]
//   {2}:   c1 = 0, c12 = c2 in [0,1]
// The corner (0,0,0) belongs to several clauses; it is reported as the empty
// piece (the upper bound M = 0 makes the {1,2} window empty there).
enum class S12Piece { Both, Empty, First, Second };

struct S12Membership {
  bool member = false;
  S12Piece piece = S12Piece::Empty;  // meaningful only when member
};

S12Membership schneider_membership_S12(const Rational& c1, const Rational& c2, const Rational& c12);

// A pair (A1, A2) with indices (c1, c2) and c(A1 + A2) = c12, for any member
// triple. On the {1,2} piece the pair is (balanced, m-scaled balanced) with
// m >= 2 solved exactly from c12; the ordering is switched when the
// minimizing one cannot reach c12. Throws for non-members.
std::pair<CompactSet1D, CompactSet1D> schneider_witness_S12(const Rational& c1, const Rational& c2,
                                                            const Rational& c12);

// Membership of (a, b, c) in the closed measure region for two sets in R^n:
//   c >= (a^{1/n} + b^{1/n})^n.
// Exact for all rational inputs: the threshold is rational iff b/a is an
// n-th power of a rational (detected via integer n-th roots), and otherwise
// provably irrational, so certified dyadic narrowing always terminates.
bool lyusternik_membership_L2(long n, const Rational& a, const Rational& b, const Rational& c);

// Finite-depth witness for the measure region of three sets in dimension 1
// with targets (0, 0, 0, 0, alpha13, alpha23, alpha123) ordered by
// 0 < alpha13 <= alpha23 < alpha123: three sets built from Cantor-type covers
// whose pairwise sums with index 1<->3 and 2<->3 are full intervals. Measures
// of the singletons and of A1 + A2 vanish with depth; the other measures are
// within explicit O(N^-depth) terms of the targets.
struct Lyu3Witness {
  long base;    // N
  long k1, k2;  // digit caps for the small and the large fractal (k1+k2 = N-1)
  long depth;
  Rational a;   // alpha23 / alpha13
  Rational b;   // alpha123 / alpha13
  mpz_class q_a, q_b;  // integer parts of a and b/a
  Rational r_a, r_b;   // fractional remainders: a = q_a + r_a, b = (q_b + r_b) a
  CompactSet1D A1, A2, A3;
  RegionPoint achieved;  // the seven exact measures of the construction
};

Lyu3Witness fractal_lyusternik3_witness(const Rational& alpha13, const Rational& alpha23,
                                        const Rational& alpha123, long depth);

// The m = 3 measure vectors (0, 0, 0, 0, 0, 1 - 1/k, 1 - 1/k, 1), all
// attainable, whose limit (0,...,0, 1, 1, 1) is not: the region is not
// closed. Requires k >= 2.
RegionPoint non_closedness_sequence(long k);

// Recognizes the limit shape excluded by the equality conditions of the 1-D
// superadditivity inequality: all singleton measures and |A1 + A2| zero while
// |A1 + A3| = |A2 + A3| = |A1 + A2 + A3| = alpha > 0. For such a point,
// |A1 + (A2 + A3)| = |A2 + A3| with |A1| = 0 forces A1 to be one point,
// which would force |A1 + A3| = |A3| = 0 — a contradiction.
bool lyusternik_limit_excluded(const RegionPoint& p);

// Index region of pairs in dimension n >= 2 restricted to annuli sums:
// (c1, c2, c12) attainable iff c1, c2 in [0, 1] and 0 <= c12 <= max(c1, c2)
// (closed upper end, unlike dimension 1).
bool partial_char_Sn2(long n, const Rational& c1, const Rational& c2, const Rational& c12);

}  // namespace sumset
