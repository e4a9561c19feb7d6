#pragma once

#include <vector>

#include "sumset/rational.hpp"
#include "sumset/set1d.hpp"

namespace sumset {

// Depth-d finite approximation of the base-N Cantor-type set
//   C(N, k) = { sum_j x_j N^{-j} : x_j in {0, ..., k} },
// obtained by keeping the first k+1 of N equal subintervals at every level.
// Requires N >= 3, 0 <= k <= N-1, depth >= 1 and (k+1)^depth <= 10^6
// (the number of depth-d cells).
struct FractalSpec {
  long base;   // N
  long digit;  // k: digits run over {0, ..., k}
  long depth;  // d

  FractalSpec(long base_, long digit_, long depth_);
};

// All depth-d cell origins sum_{j<=d} x_j N^{-j}, strictly increasing.
std::vector<Rational> fractal_cell_origins(const FractalSpec& s);

// Union of the depth-d cells [x, x + N^{-d}] over all origins x. Adjacent
// cells with consecutive digits touch and merge, so for k < N-1 the result
// has (k+1)^{d-1} maximal intervals of length (k+1) N^{-d} each.
CompactSet1D fractal_cover(const FractalSpec& s);

// The (k+1)^d cell origins as a finite point set.
CompactSet1D fractal_endpoints(const FractalSpec& s);

// Measure of the depth-d cover: ((k+1)/N)^d.
Rational fractal_measure(const FractalSpec& s);

// Diameter of the limit set C(N, k): k/(N-1).
Rational fractal_diameter_limit(long base, long digit);

// Diameter of the depth-d cover: k (1 - N^{-d})/(N-1) + N^{-d}.
Rational fractal_diameter_at_depth(long base, long digit, long depth);

// Digit-wise additivity at fixed depth: C(N,k) + C(N,l) = C(N,k+l) whenever
// k + l <= N-1. Checks both the endpoint sets (exact point-set equality of
// Minkowski sums) and the covers (sum of covers contains the cover of the
// digit sum; the converse inclusion fails only by the doubled cell width).
struct FractalSumCheck {
  bool endpoints_equal;
  bool cover_contains;
  bool holds() const { return endpoints_equal && cover_contains; }
};

FractalSumCheck fractal_sum_check(long base, long k, long l, long depth);

}  // namespace sumset
