// sumset: command-line front end for the exact non-convexity index toolkit.
// Every subcommand wraps one library operation family; numeric output is
// exact rational text unless --decimal asks for fixed-point rendering.
// Exit codes: 0 success / inequality holds / member; 1 mathematical "no"
// (non-member, violated inequality); 2 usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sumset/bounds.hpp"
#include "sumset/fractal.hpp"
#include "sumset/index.hpp"
#include "sumset/io.hpp"
#include "sumset/oracle.hpp"
#include "sumset/partitions.hpp"
#include "sumset/rational.hpp"
#include "sumset/regions.hpp"
#include "sumset/set1d.hpp"

namespace {

using namespace sumset;

int g_decimal = 0;  // 0 renders exact "p/q" text; > 0 renders fixed-point

std::string fmt(const Rational& x) { return g_decimal > 0 ? x.decimal(g_decimal) : x.str(); }

int run_index(const std::string& path) {
  const CompactSet1D a = read_set_file(path);
  std::cout << "c=" << fmt(schneider_index(a)) << " G=" << fmt(largest_gap(a))
            << " diam=" << fmt(a.diameter()) << '\n';
  return 0;
}

int run_sum(const std::vector<std::string>& paths, const std::string& out) {
  CompactSet1D sum = read_set_file(paths.front());
  for (std::size_t i = 1; i < paths.size(); ++i) sum = sum + read_set_file(paths[i]);
  if (out.empty())
    std::cout << set_to_json_text(sum) << '\n';
  else
    write_set_file(out, sum);
  return 0;
}

int run_lower_bound(const std::string& c1, const std::string& c2) {
  std::cout << fmt(lower_bound_L(Rational::parse(c1), Rational::parse(c2))) << '\n';
  return 0;
}

int run_witness(const std::string& c1s, const std::string& c2s, const std::string& c12s,
                bool has_c12) {
  const Rational c1 = Rational::parse(c1s);
  const Rational c2 = Rational::parse(c2s);
  if (has_c12 && !schneider_membership_S12(c1, c2, Rational::parse(c12s)).member) {
    std::cout << "not a member: no witness exists for (" << fmt(c1) << ", " << fmt(c2) << ", "
              << fmt(Rational::parse(c12s)) << ")" << '\n';
    return 1;
  }
  const std::pair<CompactSet1D, CompactSet1D> w =
      has_c12 ? schneider_witness_S12(c1, c2, Rational::parse(c12s)) : tight_witness_pair(c1, c2);
  std::cout << "A1: " << set_to_json_text(w.first) << '\n';
  std::cout << "A2: " << set_to_json_text(w.second) << '\n';
  std::cout << "c1=" << fmt(schneider_index(w.first)) << " c2=" << fmt(schneider_index(w.second))
            << " c12=" << fmt(sum_index({w.first, w.second})) << '\n';
  return 0;
}

int run_kbound(const std::vector<std::string>& cs) {
  std::vector<Rational> c;
  c.reserve(cs.size());
  for (const std::string& s : cs) c.push_back(Rational::parse(s));
  std::cout << fmt(ksum_candidate_bound(c)) << '\n';
  return 0;
}

int run_cstar(const std::string& cs) {
  const CStar v = induced_index_cstar(Rational::parse(cs));
  if (v.finite)
    std::cout << v.value << '\n';
  else
    std::cout << "inf" << '\n';
  return 0;
}

int run_gap_bound(const std::vector<std::string>& gs) {
  std::vector<Rational> gaps;
  gaps.reserve(gs.size());
  for (const std::string& s : gs) gaps.push_back(Rational::parse(s));
  std::sort(gaps.begin(), gaps.end(), [](const Rational& a, const Rational& b) { return b < a; });
  std::cout << fmt(gap_sum_upper_bound(gaps)) << '\n';
  return 0;
}

int run_region_s12(const std::string& c1s, const std::string& c2s, const std::string& c12s) {
  const Rational c1 = Rational::parse(c1s);
  const Rational c2 = Rational::parse(c2s);
  const Rational c12 = Rational::parse(c12s);
  const S12Membership m = schneider_membership_S12(c1, c2, c12);
  if (m.member) {
    const char* piece = "{}";
    if (m.piece == S12Piece::Both) piece = "{1,2}";
    if (m.piece == S12Piece::First) piece = "{1}";
    if (m.piece == S12Piece::Second) piece = "{2}";
    std::cout << "member piece=" << piece << '\n';
    return 0;
  }
  if (c1.sign() >= 0 && c1 <= 1 && c2.sign() >= 0 && c2 <= 1)
    std::cout << "not a member: c12 in [" << fmt(lower_bound_L(c1, c2)) << ", "
              << fmt(upper_bound_M(c1, c2)) << ") required" << '\n';
  else
    std::cout << "not a member" << '\n';
  return 1;
}

int run_region_lyu2(long n, const std::string& as, const std::string& bs, const std::string& cs) {
  const bool member =
      lyusternik_membership_L2(n, Rational::parse(as), Rational::parse(bs), Rational::parse(cs));
  std::cout << (member ? "member" : "not a member") << '\n';
  return member ? 0 : 1;
}

int run_partition_check(const std::string& sets_path, const std::string& partition_path) {
  const SetSystem sys = read_system_file(sets_path);
  const FractionalPartition p = read_partition_file(partition_path);

  const SubadditivityReport sub = check_fractional_subadditive_c(sys, p);
  std::cout << "index subadditivity: c(sum)=" << fmt(sub.lhs) << " weighted=" << fmt(sub.rhs)
            << (sub.holds ? (sub.is_equality ? " holds (equality)" : " holds") : " VIOLATED")
            << '\n';
  const SuperadditivityReport sup = check_fractional_superadditive_measure(sys, p);
  std::cout << "measure superadditivity: |sum|=" << fmt(sup.lhs) << " weighted=" << fmt(sup.rhs)
            << (sup.holds ? " holds" : " VIOLATED") << '\n';
  return sub.holds && sup.holds ? 0 : 1;
}

int run_fractal(long base, long digit, long depth, bool endpoints) {
  const FractalSpec spec(base, digit, depth);
  std::cout << set_to_json_text(endpoints ? fractal_endpoints(spec) : fractal_cover(spec)) << '\n';
  return 0;
}

int run_lyu3_witness(const std::string& a13, const std::string& a23, const std::string& a123,
                     long depth, const std::string& prefix) {
  const Lyu3Witness w = fractal_lyusternik3_witness(Rational::parse(a13), Rational::parse(a23),
                                                    Rational::parse(a123), depth);
  std::cout << "base=" << w.base << " k1=" << w.k1 << " k2=" << w.k2 << " depth=" << w.depth
            << '\n';
  std::cout << region_point_to_json_text(w.achieved) << '\n';
  if (!prefix.empty()) {
    write_set_file(prefix + ".A1.json", w.A1);
    write_set_file(prefix + ".A2.json", w.A2);
    write_set_file(prefix + ".A3.json", w.A3);
    std::cout << "wrote " << prefix << ".A1.json, " << prefix << ".A2.json, " << prefix
              << ".A3.json" << '\n';
  }
  return 0;
}

std::pair<Side, Side> parse_side_pair(const std::string& tag) {
  const auto side = [](char ch) {
    if (ch == 'L') return Side::Left;
    if (ch == 'R') return Side::Right;
    throw std::invalid_argument("side tags use letters L and R");
  };
  if (tag.size() != 2) throw std::invalid_argument("side tag must be two letters, got " + tag);
  return {side(tag[0]), side(tag[1])};
}

int run_sweep(const std::string& config_path) {
  const nlohmann::json j = nlohmann::json::parse(read_text_file(config_path));

  SweepConfig cfg;
  if (j.contains("densities")) {
    const nlohmann::json& d = j.at("densities");
    cfg.density_r1 = d.value("r1", cfg.density_r1);
    cfg.density_r2 = d.value("r2", cfg.density_r2);
    cfg.density_n1 = d.value("n1", cfg.density_n1);
    cfg.density_n2 = d.value("n2", cfg.density_n2);
    cfg.density_m = d.value("m", cfg.density_m);
  }
  if (j.contains("sides"))
    for (const nlohmann::json& s : j.at("sides"))
      cfg.sides.push_back(parse_side_pair(s.get<std::string>()));

  const std::string mode = j.value("mode", std::string("both"));
  if (mode != "lower-bound" && mode != "gap-claims" && mode != "both")
    throw std::invalid_argument("mode must be lower-bound, gap-claims or both, got " + mode);
  const std::string report = j.value("report", std::string());

  int rc = 0;
  if (mode == "lower-bound" || mode == "both") {
    cfg.report_path = report.empty() ? report : (mode == "both" ? report + ".lower.jsonl" : report);
    const SweepSummary s = verify_lower_bound_sweep(cfg);
    std::cout << "lower-bound: cells=" << s.cells << " violations=" << s.violations
              << " equality_cells=" << s.equality_cells
              << " worst_slack=" << (s.worst_slack ? fmt(*s.worst_slack) : "n/a") << '\n';
    for (const std::string& o : s.offenders) std::cout << "  offender: " << o << '\n';
    if (!s.ok()) rc = 1;
  }
  if (mode == "gap-claims" || mode == "both") {
    cfg.report_path = report.empty() ? report : (mode == "both" ? report + ".gaps.jsonl" : report);
    const SweepSummary s = verify_gap_claims(cfg);
    std::cout << "gap-claims: cells=" << s.cells << " mismatches=" << s.mismatches
              << " skipped=" << s.skipped << '\n';
    for (const std::string& o : s.offenders) std::cout << "  offender: " << o << '\n';
    if (!s.ok()) rc = 1;
  }
  return rc;
}

int run_slice(long grid, const std::string& out) {
  std::ostringstream csv;
  csv << "c1,c2,L,M\n";
  for (long i = 0; i < grid; ++i) {
    for (long j = 0; j < grid; ++j) {
      const Rational c1(i, grid - 1);
      const Rational c2(j, grid - 1);
      csv << fmt(c1) << ',' << fmt(c2) << ',' << fmt(lower_bound_L(c1, c2)) << ','
          << fmt(upper_bound_M(c1, c2)) << '\n';
    }
  }
  if (out.empty())
    std::cout << csv.str();
  else
    write_text_file(out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact non-convexity index toolkit for finite unions of rational intervals"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--decimal", g_decimal, "render rationals as fixed-point with this many digits")
      ->check(CLI::Range(1, 80));

  std::string set_path;
  CLI::App* cmd_index = app.add_subcommand("index", "index, largest gap and diameter of a set");
  cmd_index->add_option("file", set_path, "set JSON file")->required();

  std::vector<std::string> sum_paths;
  std::string sum_out;
  CLI::App* cmd_sum = app.add_subcommand("sum", "Minkowski sum of the given sets");
  cmd_sum->add_option("files", sum_paths, "set JSON files")->required();
  cmd_sum->add_option("-o,--output", sum_out, "write the sum here instead of stdout");

  std::string lb_c1, lb_c2;
  CLI::App* cmd_lower = app.add_subcommand("lower-bound", "sharp two-set lower bound L(c1, c2)");
  cmd_lower->add_option("c1", lb_c1, "index of the first set")->required();
  cmd_lower->add_option("c2", lb_c2, "index of the second set")->required();

  std::string wit_c1, wit_c2, wit_c12;
  CLI::App* cmd_witness =
      app.add_subcommand("witness", "pair of sets with indices (c1, c2) whose sum attains the "
                                    "lower bound, or any prescribed member value c12");
  cmd_witness->add_option("c1", wit_c1, "index of the first set")->required();
  cmd_witness->add_option("c2", wit_c2, "index of the second set")->required();
  CLI::Option* wit_c12_opt = cmd_witness->add_option("c12", wit_c12, "target index of the sum");

  std::vector<std::string> kb_cs;
  CLI::App* cmd_kbound =
      app.add_subcommand("kbound", "candidate minimal index of a k-fold sum, 2 <= k <= 8");
  cmd_kbound->add_option("c", kb_cs, "indices of the summands")->expected(2, 8);

  std::string cstar_c;
  CLI::App* cmd_cstar =
      app.add_subcommand("cstar", "how many sets of index <= c a sum can absorb before it "
                                  "must become convex-er; inf at c = 1");
  cmd_cstar->add_option("c", cstar_c, "common index bound")->required();

  std::vector<std::string> gb_gaps;
  CLI::App* cmd_gap = app.add_subcommand("gap-bound", "sharp upper bound for the largest gap "
                                                      "of a sum, from the summand gaps");
  cmd_gap->add_option("gaps", gb_gaps, "largest gaps of the summands")->required();

  CLI::App* cmd_region = app.add_subcommand("region", "membership in attainable-value regions");
  cmd_region->require_subcommand(1);
  std::string rs_c1, rs_c2, rs_c12;
  CLI::App* cmd_region_s12 =
      cmd_region->add_subcommand("s12", "index triples (c1, c2, c(A1+A2)) of two sets");
  cmd_region_s12->add_option("c1", rs_c1, "index of the first set")->required();
  cmd_region_s12->add_option("c2", rs_c2, "index of the second set")->required();
  cmd_region_s12->add_option("c12", rs_c12, "index of the sum")->required();
  long rl_n = 1;
  std::string rl_a, rl_b, rl_c;
  CLI::App* cmd_region_lyu2 = cmd_region->add_subcommand(
      "lyu2", "measure triples (|A|, |B|, |A+B|) of two compact sets in R^n");
  cmd_region_lyu2->add_option("n", rl_n, "dimension")->required()->check(CLI::Range(1L, 64L));
  cmd_region_lyu2->add_option("a", rl_a, "measure of the first set")->required();
  cmd_region_lyu2->add_option("b", rl_b, "measure of the second set")->required();
  cmd_region_lyu2->add_option("c", rl_c, "measure of the sum")->required();

  CLI::App* cmd_partition = app.add_subcommand("partition", "fractional partition inequalities");
  cmd_partition->require_subcommand(1);
  std::string pc_sets, pc_partition;
  CLI::App* cmd_partition_check = cmd_partition->add_subcommand(
      "check", "index subadditivity and measure superadditivity for a set system");
  cmd_partition_check->add_option("sets", pc_sets, "set system JSON file")->required();
  cmd_partition_check->add_option("partition", pc_partition, "partition JSON file")->required();

  long fr_base = 0, fr_digit = 0, fr_depth = 0;
  bool fr_endpoints = false;
  CLI::App* cmd_fractal =
      app.add_subcommand("fractal", "depth-d cover of the base-N digit-restricted set C(N, k)");
  cmd_fractal->add_option("base", fr_base, "base N >= 3")->required();
  cmd_fractal->add_option("digit", fr_digit, "largest digit k in 0..N-1")->required();
  cmd_fractal->add_option("depth", fr_depth, "construction depth >= 1")->required();
  cmd_fractal->add_flag("--endpoints", fr_endpoints, "emit the cell-origin points instead");

  std::string l3_a13, l3_a23, l3_a123, l3_prefix;
  long l3_depth = 0;
  CLI::App* cmd_lyu3 = app.add_subcommand(
      "lyu3-witness", "three sets approaching measures (0,0,0,0,a13,a23,a123) at finite depth");
  cmd_lyu3->add_option("a13", l3_a13, "target |A1+A3|")->required();
  cmd_lyu3->add_option("a23", l3_a23, "target |A2+A3|")->required();
  cmd_lyu3->add_option("a123", l3_a123, "target |A1+A2+A3|")->required();
  cmd_lyu3->add_option("depth", l3_depth, "construction depth >= 1")->required();
  cmd_lyu3->add_option("-o,--output", l3_prefix, "write A1/A2/A3 as <prefix>.A{1,2,3}.json");

  std::string sweep_config;
  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "grid verification of the two-set bound and the gap formulas (JSON config)");
  cmd_sweep->add_option("config", sweep_config, "sweep config JSON file")->required();

  long slice_grid = 0;
  std::string slice_out;
  CLI::App* cmd_slice =
      app.add_subcommand("slice", "CSV of L and M over a grid of index pairs, for plotting");
  cmd_slice->add_option("--grid", slice_grid, "grid points per axis")
      ->required()
      ->check(CLI::Range(2L, 4096L));
  cmd_slice->add_option("-o,--output", slice_out, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_index) return run_index(set_path);
    if (*cmd_sum) return run_sum(sum_paths, sum_out);
    if (*cmd_lower) return run_lower_bound(lb_c1, lb_c2);
    if (*cmd_witness) return run_witness(wit_c1, wit_c2, wit_c12, wit_c12_opt->count() > 0);
    if (*cmd_kbound) return run_kbound(kb_cs);
    if (*cmd_cstar) return run_cstar(cstar_c);
    if (*cmd_gap) return run_gap_bound(gb_gaps);
    if (*cmd_region_s12) return run_region_s12(rs_c1, rs_c2, rs_c12);
    if (*cmd_region_lyu2) return run_region_lyu2(rl_n, rl_a, rl_b, rl_c);
    if (*cmd_partition_check) return run_partition_check(pc_sets, pc_partition);
    if (*cmd_fractal) return run_fractal(fr_base, fr_digit, fr_depth, fr_endpoints);
    if (*cmd_lyu3) return run_lyu3_witness(l3_a13, l3_a23, l3_a123, l3_depth, l3_prefix);
    if (*cmd_sweep) return run_sweep(sweep_config);
    if (*cmd_slice) return run_slice(slice_grid, slice_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::cerr << "error: no subcommand selected" << '\n';
  return 2;
}
