#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumset/bounds.hpp"
#include "sumset/index.hpp"
#include "sumset/oracle.hpp"

using namespace sumset;

TEST_CASE("random utilities are deterministic and in range") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 500; ++t) {
    const long v = random_long(rng, -3, 7);
    CHECK(v >= -3);
    CHECK(v <= 7);
  }
  CHECK_THROWS_AS(random_long(rng, 2, 1), std::invalid_argument);

  std::mt19937_64 a(7), b(7);
  for (int t = 0; t < 100; ++t) CHECK(random_long(a, 0, 1000) == random_long(b, 0, 1000));

  std::mt19937_64 c(13);
  for (int t = 0; t < 200; ++t) {
    const Rational q = random_rational(c, 16, 4);
    CHECK(q >= 0);
    CHECK(q <= 16);
    CHECK(q.den() <= 4);
  }

  std::mt19937_64 d(21);
  for (int t = 0; t < 200; ++t) {
    const CompactSet1D s = random_set(d);
    CHECK(s.part_count() >= 1);
    CHECK(s.min() >= 0);
    const Rational idx = schneider_index(s);
    CHECK(idx >= 0);
    CHECK(idx <= 1);
  }
}

TEST_CASE("lower-bound sweep: grid is violation-free and reproducible") {
  SweepConfig cfg;
  cfg.density_r1 = 3;
  cfg.density_r2 = 3;
  cfg.density_n1 = 2;
  cfg.density_n2 = 2;
  cfg.density_m = 3;

  const SweepSummary s = verify_lower_bound_sweep(cfg);
  CHECK(s.ok());
  CHECK(s.cells > 0);
  CHECK(s.violations == 0);
  CHECK(s.offenders.empty());
  REQUIRE(s.worst_slack.has_value());
  CHECK(*s.worst_slack >= 0);
  // interval + interval cells sit exactly on the (zero) bound
  CHECK(s.equality_cells >= 1);

  const SweepSummary again = verify_lower_bound_sweep(cfg);
  CHECK(again.cells == s.cells);
  CHECK(again.equality_cells == s.equality_cells);
  CHECK(*again.worst_slack == *s.worst_slack);
}

TEST_CASE("lower-bound sweep: even m-grid attains the two-point minimum") {
  SweepConfig cfg;
  cfg.density_r1 = 2;
  cfg.density_r2 = 2;
  cfg.density_n1 = 2;
  cfg.density_n2 = 2;
  cfg.density_m = 6;  // contains m = 1/2, where {0,1} + m{0,1} dips to 1/3

  const SweepSummary s = verify_lower_bound_sweep(cfg);
  CHECK(s.ok());
  const Rational worst = s.min_by_index_pair.at({Rational(1), Rational(1)});
  CHECK(worst == Rational(1, 3));
  CHECK(worst == lower_bound_L(1, 1));
  CHECK(s.equality_cells >= 1);
}

TEST_CASE("gap formulas match the engine across the positivity regime") {
  SweepConfig cfg;
  cfg.density_r1 = 4;
  cfg.density_r2 = 4;
  cfg.density_n1 = 2;
  cfg.density_n2 = 2;
  cfg.density_m = 4;

  const SweepSummary s = verify_gap_claims(cfg);
  CHECK(s.ok());
  CHECK(s.mismatches == 0);
  CHECK(s.cells > 0);    // regime is non-empty on this grid
  CHECK(s.skipped > 0);  // and its complement is too
  CHECK(s.offenders.empty());
}

TEST_CASE("sweep configs with degenerate densities are rejected") {
  SweepConfig cfg;
  cfg.density_m = 1;
  CHECK_THROWS_AS(verify_lower_bound_sweep(cfg), std::invalid_argument);
  CHECK_THROWS_AS(verify_gap_claims(cfg), std::invalid_argument);
}

TEST_CASE("sweep reports are JSON lines with a trailing summary") {
  const std::string path = "oracle_sweep_report_test.jsonl";
  SweepConfig cfg;
  cfg.density_r1 = 2;
  cfg.density_r2 = 2;
  cfg.density_n1 = 2;
  cfg.density_n2 = 2;
  cfg.density_m = 2;
  cfg.sides = {{Side::Left, Side::Right}};
  cfg.report_path = path;

  const SweepSummary s = verify_lower_bound_sweep(cfg);
  std::ifstream in(path);
  REQUIRE(in.is_open());
  std::vector<nlohmann::json> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(nlohmann::json::parse(line));
  in.close();
  REQUIRE(static_cast<long>(lines.size()) == s.cells + 1);
  const nlohmann::json& first = lines.front();
  CHECK(first.contains("side1"));
  CHECK(first.contains("r1"));
  CHECK(first.contains("m"));
  CHECK(first.contains("engine"));
  CHECK(first.contains("bound"));
  CHECK(first.contains("slack"));
  const nlohmann::json& last = lines.back();
  CHECK(last.value("summary", false));
  CHECK(last.value("mode", "") == "lower-bound");
  CHECK(last.value("cells", -1) == s.cells);
  CHECK(last.value("violations", -1) == 0);
  std::remove(path.c_str());

  // gap-claim mode writes one line per checked (non-skipped) cell
  cfg.report_path = "oracle_gap_report_test.jsonl";
  const SweepSummary g = verify_gap_claims(cfg);
  std::ifstream gin(cfg.report_path);
  REQUIRE(gin.is_open());
  long count = 0;
  nlohmann::json glast;
  for (std::string line; std::getline(gin, line);) {
    glast = nlohmann::json::parse(line);
    ++count;
  }
  gin.close();
  CHECK(count == g.cells + 1);
  CHECK(glast.value("mode", "") == "gap-claims");
  CHECK(glast.value("skipped", -1) == g.skipped);
  CHECK(glast.value("mismatches", -1) == 0);
  std::remove(cfg.report_path.c_str());
}

TEST_CASE("k-fold counterexample search: reproducible exploration, no verdict") {
  const KsumSearchReport rep = search_ksum_counterexample(3, 60, 424242);
  CHECK(rep.k == 3);
  CHECK(rep.samples == 60);
  CHECK(rep.seed == 424242);
  REQUIRE(rep.min_slack.has_value());
  CHECK(rep.refutations.size() <= 5);
  CHECK(static_cast<long>(rep.refutations.size()) <= rep.strictly_below);
  if (rep.strictly_below == 0) CHECK(rep.refutations.empty());

  // the search is a report, not a theorem: only reproducibility is asserted
  const KsumSearchReport again = search_ksum_counterexample(3, 60, 424242);
  CHECK(*again.min_slack == *rep.min_slack);
  CHECK(again.strictly_below == rep.strictly_below);

  const KsumSearchReport k4 = search_ksum_counterexample(4, 25, 7);
  CHECK(k4.samples == 25);
  REQUIRE(k4.min_slack.has_value());

  CHECK_THROWS_AS(search_ksum_counterexample(2, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(search_ksum_counterexample(6, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(search_ksum_counterexample(3, 0, 0), std::invalid_argument);
}

TEST_CASE("search reports land on disk as JSON lines") {
  const std::string path = "oracle_ksum_report_test.jsonl";
  const KsumSearchReport rep = search_ksum_counterexample(3, 10, 5, path);
  std::ifstream in(path);
  REQUIRE(in.is_open());
  long count = 0;
  nlohmann::json last;
  for (std::string line; std::getline(in, line);) {
    last = nlohmann::json::parse(line);
    ++count;
  }
  in.close();
  CHECK(count == rep.samples + 1);
  CHECK(last.value("mode", "") == "ksum-search");
  CHECK(last.value("k", -1) == 3);
  CHECK(last.value("strictly_below", -1) == rep.strictly_below);
  std::remove(path.c_str());
}
