#include "sumset/oracle.hpp"

#include <fstream>
#include <functional>
#include <stdexcept>

#include "sumset/index.hpp"

#include <json.hpp>

namespace sumset {

namespace {

const char* side_name(Side s) {
  switch (s) {
    case Side::Left: return "L";
    case Side::Right: return "R";
    default: return "B";
  }
}

// Admissible imbalance window for a given side and gap ratio. The right-heavy
// cap 2r/(1-r) blows up as r -> 1 (the sets just grow longer without changing
// index), so the window is truncated at 2.
Rational imbalance_cap(Side side, const Rational& r) {
  const Rational two(2);
  switch (side) {
    case Side::Left:
      return 2 * r / (1 + r);
    case Side::Right: {
      if (r == Rational(1)) return two;
      return min(two, 2 * r / (1 - r));
    }
    default:
      return Rational(0);
  }
}

struct Cell {
  Side side1, side2;
  Rational r1, n1, r2, n2, m;
};

void check_config(const SweepConfig& cfg) {
  if (cfg.density_r1 < 2 || cfg.density_r2 < 2 || cfg.density_n1 < 2 || cfg.density_n2 < 2 ||
      cfg.density_m < 2)
    throw std::invalid_argument("sweep densities must all be >= 2");
}

std::vector<std::pair<Side, Side>> side_pairs(const SweepConfig& cfg) {
  if (!cfg.sides.empty()) return cfg.sides;
  return {{Side::Left, Side::Left},
          {Side::Left, Side::Right},
          {Side::Right, Side::Left},
          {Side::Right, Side::Right}};
}

// Enumerates the full rational grid and invokes fn on every admissible cell.
void for_each_cell(const SweepConfig& cfg, const std::function<void(const Cell&)>& fn) {
  for (const auto& [s1, s2] : side_pairs(cfg)) {
    for (int i1 = 0; i1 <= cfg.density_r1; ++i1) {
      const Rational r1(i1, cfg.density_r1);
      const Rational cap1 = imbalance_cap(s1, r1);
      for (int j1 = 0; j1 <= cfg.density_n1; ++j1) {
        const Rational n1 = cap1 * Rational(j1, cfg.density_n1);
        if (j1 > 0 && n1.is_zero()) continue;  // degenerate window, n = 0 already seen
        for (int i2 = 0; i2 <= cfg.density_r2; ++i2) {
          const Rational r2(i2, cfg.density_r2);
          const Rational cap2 = imbalance_cap(s2, r2);
          for (int j2 = 0; j2 <= cfg.density_n2; ++j2) {
            const Rational n2 = cap2 * Rational(j2, cfg.density_n2);
            if (j2 > 0 && n2.is_zero()) continue;
            for (int im = 1; im <= cfg.density_m; ++im) {
              fn(Cell{s1, s2, r1, n1, r2, n2, Rational(im, cfg.density_m)});
            }
          }
        }
      }
    }
  }
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  nlohmann::ordered_json j;
  j["side1"] = side_name(cell.side1);
  j["side2"] = side_name(cell.side2);
  j["r1"] = cell.r1.str();
  j["n1"] = cell.n1.str();
  j["r2"] = cell.r2.str();
  j["n2"] = cell.n2.str();
  j["m"] = cell.m.str();
  return j;
}

std::string cell_str(const Cell& cell) {
  return std::string("side1=") + side_name(cell.side1) + " side2=" + side_name(cell.side2) +
         " r1=" + cell.r1.str() + " n1=" + cell.n1.str() + " r2=" + cell.r2.str() +
         " n2=" + cell.n2.str() + " m=" + cell.m.str();
}

class JsonlWriter {
 public:
  explicit JsonlWriter(const std::string& path) {
    if (!path.empty()) {
      out_.open(path);
      if (!out_) throw std::invalid_argument("cannot open report file: " + path);
    }
  }
  void line(const nlohmann::ordered_json& j) {
    if (out_.is_open()) out_ << j.dump() << "\n";
  }

 private:
  std::ofstream out_;
};

}  // namespace

SweepSummary verify_lower_bound_sweep(const SweepConfig& cfg) {
  check_config(cfg);
  SweepSummary sum;
  JsonlWriter report(cfg.report_path);

  for_each_cell(cfg, [&](const Cell& cell) {
    const LRSetParams p1(cell.side1, cell.r1, cell.n1);
    const LRSetParams p2(cell.side2, cell.r2, cell.n2);
    const Rational c1 = p1.index();
    const Rational c2 = p2.index();
    const CompactSet1D sum_set = make_lr_set(p1) + scale(make_lr_set(p2), cell.m);
    const Rational engine = schneider_index(sum_set);
    const Rational bound = lower_bound_L(c1, c2);
    const Rational slack = engine - bound;

    ++sum.cells;
    if (slack.sign() < 0) {
      ++sum.violations;
      if (sum.offenders.size() < 10)
        sum.offenders.push_back(cell_str(cell) + " engine=" + engine.str() +
                                " bound=" + bound.str());
    }
    if (slack.is_zero()) ++sum.equality_cells;
    if (!sum.worst_slack || slack < *sum.worst_slack) sum.worst_slack = slack;

    const auto key = std::make_pair(c1, c2);
    auto it = sum.min_by_index_pair.find(key);
    if (it == sum.min_by_index_pair.end())
      sum.min_by_index_pair.emplace(key, engine);
    else if (engine < it->second)
      it->second = engine;

    nlohmann::ordered_json j = cell_json(cell);
    j["c1"] = c1.str();
    j["c2"] = c2.str();
    j["engine"] = engine.str();
    j["bound"] = bound.str();
    j["slack"] = slack.str();
    report.line(j);
  });

  nlohmann::ordered_json s;
  s["summary"] = true;
  s["mode"] = "lower-bound";
  s["cells"] = sum.cells;
  s["violations"] = sum.violations;
  s["equality_cells"] = sum.equality_cells;
  if (sum.worst_slack) s["worst_slack"] = sum.worst_slack->str();
  report.line(s);
  return sum;
}

SweepSummary verify_gap_claims(const SweepConfig& cfg) {
  check_config(cfg);
  SweepSummary sum;
  JsonlWriter report(cfg.report_path);

  for_each_cell(cfg, [&](const Cell& cell) {
    // The gap formulas are claimed only in the positivity regime.
    if (!positive_assumption_r(cell.r1, cell.r2)) {
      ++sum.skipped;
      return;
    }
    const LRSetParams p1(cell.side1, cell.r1, cell.n1);
    const LRSetParams p2(cell.side2, cell.r2, cell.n2);
    const GapCandidates gc = gap_candidates(p1, p2, cell.m);
    const Rational engine = largest_gap(make_lr_set(p1) + scale(make_lr_set(p2), cell.m));

    ++sum.cells;
    if (gc.predicted_G != engine) {
      ++sum.mismatches;
      if (sum.offenders.size() < 10)
        sum.offenders.push_back(cell_str(cell) + " predicted=" + gc.predicted_G.str() +
                                " engine=" + engine.str());
    }

    nlohmann::ordered_json j = cell_json(cell);
    j["predicted_G"] = gc.predicted_G.str();
    j["engine_G"] = engine.str();
    j["match"] = gc.predicted_G == engine;
    report.line(j);
  });

  nlohmann::ordered_json s;
  s["summary"] = true;
  s["mode"] = "gap-claims";
  s["cells"] = sum.cells;
  s["skipped"] = sum.skipped;
  s["mismatches"] = sum.mismatches;
  report.line(s);
  return sum;
}

long random_long(std::mt19937_64& rng, long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("random_long: empty range");
  const unsigned long span = static_cast<unsigned long>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  return Rational(random_long(rng, 0, max_num), random_long(rng, 1, max_den));
}

CompactSet1D random_set(std::mt19937_64& rng, const RandomSetOptions& opt) {
  const int count = static_cast<int>(random_long(rng, 1, opt.max_intervals));
  std::vector<Interval> parts;
  parts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const Rational lo = random_rational(rng, opt.max_num, opt.max_den);
    Rational len = random_rational(rng, opt.max_num / 4 + 1, opt.max_den);
    if (!opt.allow_points && len.is_zero()) len = Rational(1, opt.max_den);
    parts.emplace_back(lo, lo + len);
  }
  // A coin flip keeps genuine point components in the mix.
  if (opt.allow_points && random_long(rng, 0, 3) == 0) {
    const Rational x(random_long(rng, 0, opt.max_num), 1);
    parts.emplace_back(x, x);
  }
  return CompactSet1D(std::move(parts));
}

KsumSearchReport search_ksum_counterexample(int k, long samples, std::uint64_t seed,
                                            const std::string& report_path) {
  if (k < 3 || k > 5)
    throw std::invalid_argument("counterexample search covers 3 <= k <= 5, got " +
                                std::to_string(k));
  if (samples < 1) throw std::invalid_argument("need at least one sample");

  std::mt19937_64 rng(seed);
  KsumSearchReport rep;
  rep.k = k;
  rep.samples = samples;
  rep.seed = seed;
  JsonlWriter report(report_path);

  for (long s = 0; s < samples; ++s) {
    std::vector<CompactSet1D> sets;
    std::vector<Rational> indices;
    sets.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      sets.push_back(random_set(rng));
      indices.push_back(schneider_index(sets.back()));
    }
    const Rational candidate = ksum_candidate_bound(indices);
    const Rational engine = sum_index(sets);
    const Rational slack = engine - candidate;
    if (!rep.min_slack || slack < *rep.min_slack) rep.min_slack = slack;
    if (slack.sign() < 0) {
      ++rep.strictly_below;
      if (rep.refutations.size() < 5) {
        std::string desc = "indices=(";
        for (std::size_t i = 0; i < indices.size(); ++i)
          desc += (i ? "," : "") + indices[i].str();
        desc += ") engine=" + engine.str() + " candidate=" + candidate.str();
        rep.refutations.push_back(std::move(desc));
      }
    }

    nlohmann::ordered_json j;
    j["sample"] = s;
    nlohmann::ordered_json idx = nlohmann::ordered_json::array();
    for (const Rational& ci : indices) idx.push_back(ci.str());
    j["indices"] = idx;
    j["engine"] = engine.str();
    j["candidate"] = candidate.str();
    j["slack"] = slack.str();
    report.line(j);
  }

  nlohmann::ordered_json s;
  s["summary"] = true;
  s["mode"] = "ksum-search";
  s["k"] = k;
  s["samples"] = samples;
  s["seed"] = seed;
  if (rep.min_slack) s["min_slack"] = rep.min_slack->str();
  s["strictly_below"] = rep.strictly_below;
  report.line(s);
  return rep;
}

}  // namespace sumset
