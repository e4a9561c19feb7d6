#include "sumset/partitions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace sumset {

namespace {

void require_valid(const FractionalPartition& p) {
  const PartitionDiagnostics d = validate_partition(p);
  if (!d.valid) throw std::invalid_argument("invalid fractional partition: " + d.message);
}

void require_system_matches(const SetSystem& sys, const FractionalPartition& p) {
  require_valid(p);
  if (static_cast<int>(sys.sets.size()) != p.m)
    throw std::invalid_argument("set system has " + std::to_string(sys.sets.size()) +
                                " sets but the partition is over m = " + std::to_string(p.m));
}

std::string subset_str(const std::vector<int>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(members[i]);
  }
  return s + "}";
}

}  // namespace

PartitionDiagnostics validate_partition(const FractionalPartition& p) {
  if (p.m < 1) return {false, "ground set size m must be >= 1"};
  std::vector<Rational> cover(static_cast<std::size_t>(p.m), Rational(0));
  for (const WeightedEdge& e : p.edges) {
    if (e.members.empty()) return {false, "edge with empty member set"};
    if (!std::is_sorted(e.members.begin(), e.members.end()) ||
        std::adjacent_find(e.members.begin(), e.members.end()) != e.members.end())
      return {false, "edge " + subset_str(e.members) + " is not a sorted set of distinct elements"};
    if (e.members.front() < 1 || e.members.back() > p.m)
      return {false, "edge " + subset_str(e.members) + " falls outside {1,...," + std::to_string(p.m) + "}"};
    if (e.weight.sign() <= 0)
      return {false, "edge " + subset_str(e.members) + " has non-positive weight " + e.weight.str()};
    for (int i : e.members) cover[static_cast<std::size_t>(i - 1)] += e.weight;
  }
  for (int i = 1; i <= p.m; ++i) {
    const Rational& c = cover[static_cast<std::size_t>(i - 1)];
    if (c != Rational(1))
      return {false, "element " + std::to_string(i) + " is covered with total weight " + c.str() +
                         " instead of 1"};
  }
  return {true, ""};
}

ExpandedPartition expand_rational(const FractionalPartition& p) {
  require_valid(p);
  mpz_class q(1);
  for (const WeightedEdge& e : p.edges) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), e.weight.den().get_mpz_t());
  ExpandedPartition out;
  out.q = q;
  out.copies.reserve(p.edges.size());
  std::vector<mpz_class> cover(static_cast<std::size_t>(p.m), mpz_class(0));
  for (const WeightedEdge& e : p.edges) {
    mpz_class mult = e.weight.num() * (q / e.weight.den());
    for (int i : e.members) cover[static_cast<std::size_t>(i - 1)] += mult;
    out.copies.emplace_back(e.members, std::move(mult));
  }
  for (const mpz_class& c : cover)
    if (c != q) throw std::logic_error("expanded partition lost the exact-cover property");
  return out;
}

CompactSet1D subset_sum(const SetSystem& sys, const std::vector<int>& members) {
  if (members.empty()) return CompactSet1D::point(Rational(0));
  CompactSet1D acc = sys.sets.at(static_cast<std::size_t>(members.front() - 1));
  for (std::size_t j = 1; j < members.size(); ++j)
    acc = acc + sys.sets.at(static_cast<std::size_t>(members[j] - 1));
  return acc;
}

SubadditivityReport check_fractional_subadditive_c(const SetSystem& sys,
                                                   const FractionalPartition& p) {
  require_system_matches(sys, p);
  std::vector<int> all(static_cast<std::size_t>(p.m));
  for (int i = 0; i < p.m; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  const Rational lhs = schneider_index(subset_sum(sys, all));
  Rational rhs(0);
  for (const WeightedEdge& e : p.edges) rhs += e.weight * schneider_index(subset_sum(sys, e.members));
  return {lhs, rhs, lhs <= rhs, lhs == rhs};
}

std::pair<SetSystem, FractionalPartition> translated_partition(const SetSystem& sys,
                                                               const FractionalPartition& p) {
  require_system_matches(sys, p);
  std::vector<int> remap(static_cast<std::size_t>(p.m) + 1, 0);  // old 1-based -> new 1-based
  SetSystem out_sys;
  int next = 1;
  for (int i = 1; i <= p.m; ++i) {
    const CompactSet1D& s = sys.sets[static_cast<std::size_t>(i - 1)];
    if (!s.is_point()) {
      remap[static_cast<std::size_t>(i)] = next++;
      out_sys.sets.push_back(s);
    }
  }
  if (out_sys.sets.empty())
    throw std::domain_error("every set in the system is a single point; nothing survives translation");

  std::map<std::vector<int>, Rational> merged;
  for (const WeightedEdge& e : p.edges) {
    std::vector<int> image;
    for (int i : e.members)
      if (remap[static_cast<std::size_t>(i)] != 0) image.push_back(remap[static_cast<std::size_t>(i)]);
    if (image.empty()) continue;  // edge collapsed to points only
    auto [it, inserted] = merged.emplace(std::move(image), e.weight);
    if (!inserted) it->second += e.weight;
  }
  FractionalPartition out_p;
  out_p.m = next - 1;
  for (auto& [members, weight] : merged) out_p.edges.push_back({members, weight});
  return {std::move(out_sys), std::move(out_p)};
}

SuperadditivityReport check_fractional_superadditive_measure(const SetSystem& sys,
                                                             const FractionalPartition& p) {
  require_system_matches(sys, p);
  std::vector<int> all(static_cast<std::size_t>(p.m));
  for (int i = 0; i < p.m; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  const Rational lhs = subset_sum(sys, all).measure();
  Rational rhs(0);
  for (const WeightedEdge& e : p.edges) rhs += e.weight * subset_sum(sys, e.members).measure();
  return {lhs, rhs, rhs <= lhs};
}

SuperadditivityReport check_fractional_superadditive_measure(const std::vector<ProductSet>& sys,
                                                             const FractionalPartition& p) {
  require_valid(p);
  if (static_cast<int>(sys.size()) != p.m)
    throw std::invalid_argument("product system size does not match the partition ground set");
  const std::size_t dim = sys.front().dimension();
  for (const ProductSet& s : sys)
    if (s.dimension() != dim)
      throw std::invalid_argument("product system with mixed dimensions");

  const auto box_sum_measure = [&](const std::vector<int>& members) {
    Rational vol(1);
    for (std::size_t axis = 0; axis < dim; ++axis) {
      CompactSet1D acc = sys[static_cast<std::size_t>(members.front() - 1)].axes[axis];
      for (std::size_t j = 1; j < members.size(); ++j)
        acc = acc + sys[static_cast<std::size_t>(members[j] - 1)].axes[axis];
      vol *= acc.measure();
    }
    return vol;
  };

  std::vector<int> all(static_cast<std::size_t>(p.m));
  for (int i = 0; i < p.m; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  const Rational lhs = box_sum_measure(all);
  Rational rhs(0);
  for (const WeightedEdge& e : p.edges) rhs += e.weight * box_sum_measure(e.members);
  return {lhs, rhs, rhs <= lhs};
}

namespace {

ModularityReport check_modular(const std::vector<Rational>& v, int m, bool super) {
  if (m < 1 || m > 10)
    throw std::invalid_argument("modularity check supports 1 <= m <= 10, got " + std::to_string(m));
  const std::size_t n = std::size_t(1) << m;
  if (v.size() != n)
    throw std::invalid_argument("value table must have one entry per subset (" + std::to_string(n) +
                                " expected, " + std::to_string(v.size()) + " given)");
  if (!v[0].is_zero())
    throw std::invalid_argument("value table must have v(empty) = 0, got " + v[0].str());
  ModularityReport out;
  for (unsigned s = 0; s < n; ++s) {
    for (unsigned t = s; t < n; ++t) {
      const Rational lhs = v[s | t] + v[s & t];
      const Rational rhs = v[s] + v[t];
      const bool ok = super ? rhs <= lhs : lhs <= rhs;
      if (!ok) {
        out.holds = false;
        out.mask_s = s;
        out.mask_t = t;
        out.detail = "v(SuT) + v(SnT) = " + (v[s | t] + v[s & t]).str() + " vs v(S) + v(T) = " +
                     (v[s] + v[t]).str();
        return out;
      }
    }
  }
  return out;
}

}  // namespace

ModularityReport check_supermodular(const std::vector<Rational>& v, int m) {
  return check_modular(v, m, true);
}

ModularityReport check_submodular(const std::vector<Rational>& v, int m) {
  return check_modular(v, m, false);
}

namespace {

std::vector<CompactSet1D> subset_sum_table(const SetSystem& sys) {
  const int m = static_cast<int>(sys.sets.size());
  if (m < 1 || m > 10)
    throw std::invalid_argument("subset tables support 1 <= m <= 10 sets, got " + std::to_string(m));
  const std::size_t n = std::size_t(1) << m;
  std::vector<CompactSet1D> sums;
  sums.reserve(n);
  sums.push_back(CompactSet1D::point(Rational(0)));  // empty sum
  for (unsigned mask = 1; mask < n; ++mask) {
    const unsigned low = mask & (mask - 1);          // mask without its lowest bit
    const int bit = std::countr_zero(mask);          // lowest element, 0-based
    if (low == 0)
      sums.push_back(sys.sets[static_cast<std::size_t>(bit)]);
    else
      sums.push_back(sums[low] + sys.sets[static_cast<std::size_t>(bit)]);
  }
  return sums;
}

}  // namespace

std::vector<Rational> subset_measure_table(const SetSystem& sys) {
  std::vector<Rational> out;
  for (const CompactSet1D& s : subset_sum_table(sys)) out.push_back(s.measure());
  out[0] = Rational(0);
  return out;
}

std::vector<Rational> subset_index_table(const SetSystem& sys) {
  std::vector<Rational> out;
  for (const CompactSet1D& s : subset_sum_table(sys)) out.push_back(schneider_index(s));
  return out;
}

StrongBoundReport strong_bound_check(const CompactSet1D& a, const CompactSet1D& b,
                                     const CompactSet1D& c) {
  const Rational lhs = schneider_index(a + b + c);
  const Rational rhs = max(schneider_index(a + b), schneider_index(b + c));
  return {lhs, rhs, lhs <= rhs};
}

StrongBoundReport strong_bound_union_check(const SetSystem& sys, const std::vector<int>& s,
                                           const std::vector<int>& t) {
  if (s.empty() || t.empty())
    throw std::invalid_argument("union bound needs nonempty subsets");
  std::vector<int> u = s;
  u.insert(u.end(), t.begin(), t.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  const Rational lhs = schneider_index(subset_sum(sys, u));
  const Rational rhs = max(schneider_index(subset_sum(sys, s)), schneider_index(subset_sum(sys, t)));
  return {lhs, rhs, lhs <= rhs};
}

}  // namespace sumset
