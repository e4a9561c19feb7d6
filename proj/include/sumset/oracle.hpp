#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sumset/bounds.hpp"
#include "sumset/rational.hpp"
#include "sumset/set1d.hpp"

namespace sumset {

// Exhaustive rational-grid verification of the two-set bound and of the
// model-set gap formulas. Grid points: r_i = j/density over [0,1], imbalance
// n_i = j/density over [0, cap] with cap the admissibility limit of the side
// (truncated at 2 where unbounded), scaling m = j/density over (0, 1].
struct SweepConfig {
  int density_r1 = 5;
  int density_r2 = 5;
  int density_n1 = 3;
  int density_n2 = 3;
  int density_m = 5;
  // Side pairs to sweep; empty means all four left/right combinations.
  std::vector<std::pair<Side, Side>> sides;
  // When nonempty, one JSON object per cell is appended here (JSON Lines),
  // with a trailing summary record.
  std::string report_path;
};

struct SweepSummary {
  long cells = 0;
  long violations = 0;       // engine index below the claimed lower bound
  long mismatches = 0;       // predicted gap != engine gap (gap-claim mode)
  long skipped = 0;          // cells outside the positivity regime (gap-claim mode)
  long equality_cells = 0;   // cells attaining the bound exactly
  std::optional<Rational> worst_slack;  // minimal engine - bound over the sweep
  // Smallest engine index observed for each index pair (c1, c2).
  std::map<std::pair<Rational, Rational>, Rational> min_by_index_pair;
  // Human-readable descriptions of the first few offending cells, if any.
  std::vector<std::string> offenders;

  bool ok() const { return violations == 0 && mismatches == 0; }
};

// Checks engine index of A1 + m A2 >= lower_bound_L(c1, c2) on every cell.
SweepSummary verify_lower_bound_sweep(const SweepConfig& cfg);

// Checks predicted_G == largest_gap(A1 + m A2) on cells satisfying the
// positivity assumption; other cells are skipped and counted.
SweepSummary verify_gap_claims(const SweepConfig& cfg);

// Randomized search for a k-fold counterexample to the candidate bound
// (3 <= k <= 5). The candidate is only proven sharp for k = 2; any strictly-
// below instance found here would refute it as a lower bound for larger k,
// so results are reported, never asserted.
struct KsumSearchReport {
  int k = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  std::optional<Rational> min_slack;        // engine - candidate, minimized
  long strictly_below = 0;                  // count of refuting instances
  std::vector<std::string> refutations;     // descriptions of the first few
};

KsumSearchReport search_ksum_counterexample(int k, long samples, std::uint64_t seed,
                                            const std::string& report_path = "");

// Deterministic small random rationals and sets for tests and searches.
// Uses explicit modulo reduction of the raw engine output so that sequences
// are reproducible across standard libraries.
long random_long(std::mt19937_64& rng, long lo, long hi);
Rational random_rational(std::mt19937_64& rng, long max_num, long max_den);

struct RandomSetOptions {
  int max_intervals = 3;
  long max_num = 16;  // endpoint numerators are drawn from [0, max_num]
  long max_den = 4;   // denominators from [1, max_den]
  bool allow_points = true;
};

CompactSet1D random_set(std::mt19937_64& rng, const RandomSetOptions& opt = {});

}  // namespace sumset
