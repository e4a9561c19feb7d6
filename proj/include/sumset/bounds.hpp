#pragma once

#include <utility>
#include <vector>

#include "sumset/rational.hpp"
#include "sumset/set1d.hpp"

namespace sumset {

// r(c) = (1-c)/(1+c), the gap-ratio reparametrization of an index value.
// It is an involution on [0, 1]: r(r(c)) = c.
Rational r_of_c(const Rational& c);

// Sharp lower bound for the index of A1 + A2 over all sets with indices
// (c1, c2): max(0, min over the two orderings of
//   (1 - r_first - 2 r_second) / (3 + r_first + 2 r_second)).
Rational lower_bound_L(const Rational& c1, const Rational& c2);

// Sharp upper bound: max(c1, c2).
Rational upper_bound_M(const Rational& c1, const Rational& c2);

// Two-interval model sets [0, alpha] u [1, 1 + alpha'] with unit gap-to-left-
// endpoint structure. For gap ratio r in [0,1] and imbalance n >= 0:
//   left-heavy:  alpha = r + n(1-r)/2, alpha' = r - n(1+r)/2  (need n(1+r)/2 <= r)
//   right-heavy: alpha = r - n(1-r)/2, alpha' = r + n(1+r)/2  (need n(1-r)/2 <= r)
//   balanced:    n = 0, alpha = alpha' = r
// Every such set has index (1-r)/(1+r) independent of n.
enum class Side { Left, Right, Balanced };

struct LRSetParams {
  Side side;
  Rational r;
  Rational n;

  LRSetParams(Side side_, Rational r_, Rational n_);

  Rational alpha() const;        // length of the left interval
  Rational alpha_prime() const;  // length of the right interval
  Rational index() const;        // (1-r)/(1+r)
};

CompactSet1D make_lr_set(const LRSetParams& p);

// A pair (A1, A2) with indices exactly (c1, c2) whose sum attains
// lower_bound_L(c1, c2). Balanced model sets; the second is doubled in scale
// and the ordering minimizing the bound decides which of the two gets doubled.
std::pair<CompactSet1D, CompactSet1D> tight_witness_pair(const Rational& c1, const Rational& c2);

// Positivity regime for the gap-candidate formulas below: both orderings keep
// 1 - r_first - 2 r_second strictly positive.
bool positive_assumption_r(const Rational& r1, const Rational& r2);
bool positive_assumption(const Rational& c1, const Rational& c2);

// Candidate gaps of A1 + m A2 for model sets A1 (params p1) and A2 (params
// p2), scaling m in (0, 1]. Writing a1 = alpha(p1), a1' = alpha'(p1), and
// a2, a2' likewise for p2:
//   g1 = m - a1 - m a2        (left block of A1 vs left block of m A2)
//   g2 = 1 - m - a1 - m a2'   (left block of A1 vs right block of m A2)
//   g3 = m - a1' - m a2       (right block of A1 vs left block of m A2)
//   g4 = 1 - a1 - m a2'       (gap straddling the two blocks of A1)
// Under the positivity regime the largest gap of the sum is
//   max(g1, g2, min(g3, g4), 0).
// The caller is responsible for checking positive_assumption on the indices;
// outside that regime the prediction may disagree with the true gap.
struct GapCandidates {
  Rational g1, g2, g3, g4;
  Rational predicted_G;
};

GapCandidates gap_candidates(const LRSetParams& p1, const LRSetParams& p2, const Rational& m);

// Lower bound for the index of a sum of two box products: the axis-wise
// two-set bound, maximized over axes.
Rational product_lower_bound(const std::vector<Rational>& c1, const std::vector<Rational>& c2);

// Sharp upper bound for the largest gap of A1 + ... + Ak given only the
// largest gaps g1 >= g2 >= ... >= gk >= 0 of the summands:
//   max over r of ( g_r - sum_{j > r} g_j ).
Rational gap_sum_upper_bound(const std::vector<Rational>& gaps);

// Two-point witnesses {0, g_j} attaining gap_sum_upper_bound exactly.
std::vector<CompactSet1D> gap_bound_witness(const std::vector<Rational>& gaps);

// Candidate value for the minimal index of a k-fold sum with given indices
// (2 <= k <= 8): max(0, min over permutations sigma of
//   (1 - sum_j 2^{j-1} r(c_sigma(j))) / (2^k - 1 + sum_j 2^{j-1} r(c_sigma(j)))).
// For k = 2 this equals lower_bound_L; for k >= 3 it is a constructive upper
// bound for the minimum (the witness below attains it) whose sharpness as a
// lower bound is not established.
Rational ksum_candidate_bound(const std::vector<Rational>& c);

// Balanced model sets, scaled by 1, 2, 4, ... along the minimizing
// permutation, whose sum attains ksum_candidate_bound exactly.
std::vector<CompactSet1D> ksum_candidate_witness(const std::vector<Rational>& c);

// Smallest k such that every sum of more than k sets of index <= c must have
// index < c whenever 2^k >= 1/(1-c); infinite for c = 1, where no such k
// exists. Exact integer comparisons throughout.
struct CStar {
  bool finite;
  long value;  // meaningful only when finite
};

CStar induced_index_cstar(const Rational& c);

// Index of A + m B for concentric annuli (dimension >= 2) with outer radius 1
// where A has index c1 and B = m A: closed form (c1 - m)/(1 + m), valid for
// 0 < m <= c1 <= 1.
Rational annulus_sum_index(const Rational& c1, const Rational& m);

}  // namespace sumset
