#include "sumset/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sumset {

namespace {

void require_unit(const Rational& c, const char* what) {
  if (c.sign() < 0 || Rational(1) < c)
    throw std::domain_error(std::string(what) + " must lie in [0, 1], got " + c.str());
}

// (1 - rf - 2 rs) / (3 + rf + 2 rs): the ordered two-set bound before the
// outer max with zero.
Rational ordered_pair_value(const Rational& rf, const Rational& rs) {
  return (Rational(1) - rf - 2 * rs) / (Rational(3) + rf + 2 * rs);
}

CompactSet1D balanced_set(const Rational& r) {
  return CompactSet1D({Interval(Rational(0), r), Interval(Rational(1), 1 + r)});
}

}  // namespace

Rational r_of_c(const Rational& c) {
  require_unit(c, "index");
  return (Rational(1) - c) / (Rational(1) + c);
}

Rational lower_bound_L(const Rational& c1, const Rational& c2) {
  const Rational r1 = r_of_c(c1);
  const Rational r2 = r_of_c(c2);
  return max(Rational(0), min(ordered_pair_value(r1, r2), ordered_pair_value(r2, r1)));
}

Rational upper_bound_M(const Rational& c1, const Rational& c2) {
  require_unit(c1, "index");
  require_unit(c2, "index");
  return max(c1, c2);
}

LRSetParams::LRSetParams(Side side_, Rational r_, Rational n_)
    : side(side_), r(std::move(r_)), n(std::move(n_)) {
  require_unit(r, "gap ratio r");
  if (n.sign() < 0) throw std::domain_error("imbalance n must be >= 0, got " + n.str());
  switch (side) {
    case Side::Left:
      if (r < n * (1 + r) / 2)
        throw std::domain_error("left-heavy set needs n(1+r)/2 <= r; n = " + n.str() +
                                " is too large for r = " + r.str());
      break;
    case Side::Right:
      if (r < n * (1 - r) / 2)
        throw std::domain_error("right-heavy set needs n(1-r)/2 <= r; n = " + n.str() +
                                " is too large for r = " + r.str());
      break;
    case Side::Balanced:
      if (!n.is_zero())
        throw std::domain_error("balanced set needs n = 0, got " + n.str());
      break;
  }
}

Rational LRSetParams::alpha() const {
  switch (side) {
    case Side::Left: return r + n * (1 - r) / 2;
    case Side::Right: return r - n * (1 - r) / 2;
    default: return r;
  }
}

Rational LRSetParams::alpha_prime() const {
  switch (side) {
    case Side::Left: return r - n * (1 + r) / 2;
    case Side::Right: return r + n * (1 + r) / 2;
    default: return r;
  }
}

Rational LRSetParams::index() const { return (Rational(1) - r) / (Rational(1) + r); }

CompactSet1D make_lr_set(const LRSetParams& p) {
  return CompactSet1D(
      {Interval(Rational(0), p.alpha()), Interval(Rational(1), 1 + p.alpha_prime())});
}

std::pair<CompactSet1D, CompactSet1D> tight_witness_pair(const Rational& c1, const Rational& c2) {
  const Rational r1 = r_of_c(c1);
  const Rational r2 = r_of_c(c2);
  // The second set of the minimizing ordering is doubled in scale:
  // [0, 2r] u [2, 2 + 2r]. Index is unchanged by the dilation.
  if (ordered_pair_value(r1, r2) <= ordered_pair_value(r2, r1))
    return {balanced_set(r1), scale(balanced_set(r2), Rational(2))};
  return {scale(balanced_set(r1), Rational(2)), balanced_set(r2)};
}

bool positive_assumption_r(const Rational& r1, const Rational& r2) {
  return Rational(0) < min(Rational(1) - r1 - 2 * r2, Rational(1) - r2 - 2 * r1);
}

bool positive_assumption(const Rational& c1, const Rational& c2) {
  return positive_assumption_r(r_of_c(c1), r_of_c(c2));
}

GapCandidates gap_candidates(const LRSetParams& p1, const LRSetParams& p2, const Rational& m) {
  if (m.sign() <= 0 || Rational(1) < m)
    throw std::domain_error("scaling m must lie in (0, 1], got " + m.str());
  const Rational a1 = p1.alpha();
  const Rational a1p = p1.alpha_prime();
  const Rational a2 = p2.alpha();
  const Rational a2p = p2.alpha_prime();
  GapCandidates out{
      m - a1 - m * a2,
      Rational(1) - m - a1 - m * a2p,
      m - a1p - m * a2,
      Rational(1) - a1 - m * a2p,
      Rational(0),
  };
  out.predicted_G = max(max(out.g1, out.g2), max(min(out.g3, out.g4), Rational(0)));
  return out;
}

Rational product_lower_bound(const std::vector<Rational>& c1, const std::vector<Rational>& c2) {
  if (c1.empty() || c1.size() != c2.size())
    throw std::invalid_argument("product_lower_bound: index lists must be nonempty and equal-length");
  Rational best(0);
  for (std::size_t i = 0; i < c1.size(); ++i) best = max(best, lower_bound_L(c1[i], c2[i]));
  return best;
}

Rational gap_sum_upper_bound(const std::vector<Rational>& gaps) {
  if (gaps.empty()) throw std::invalid_argument("gap_sum_upper_bound: empty gap list");
  Rational total(0);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i].sign() < 0)
      throw std::domain_error("gaps must be >= 0, got " + gaps[i].str());
    if (i + 1 < gaps.size() && gaps[i] < gaps[i + 1])
      throw std::domain_error("gaps must be sorted in descending order");
    total += gaps[i];
  }
  // best over r of g_r - (sum of the strictly smaller-indexed tail)
  Rational best = gaps.front() - (total - gaps.front());
  Rational tail = total - gaps.front();
  for (std::size_t r = 1; r < gaps.size(); ++r) {
    tail -= gaps[r];
    best = max(best, gaps[r] - tail);
  }
  return max(best, Rational(0));
}

std::vector<CompactSet1D> gap_bound_witness(const std::vector<Rational>& gaps) {
  gap_sum_upper_bound(gaps);  // validation only
  std::vector<CompactSet1D> out;
  out.reserve(gaps.size());
  for (const Rational& g : gaps) out.push_back(CompactSet1D::points({Rational(0), g}));
  return out;
}

namespace {

// Shared enumeration for the k-sum candidate: returns the minimal ordered
// value and the permutation attaining it (first minimizer in lexicographic
// enumeration order, which makes the witness deterministic).
std::pair<Rational, std::vector<std::size_t>> ksum_minimize(const std::vector<Rational>& c) {
  const std::size_t k = c.size();
  if (k < 2) throw std::invalid_argument("ksum candidate needs at least two indices");
  if (k > 8) throw std::invalid_argument("ksum candidate supports at most 8 indices, got " +
                                         std::to_string(k));
  std::vector<Rational> r;
  r.reserve(k);
  for (const Rational& ci : c) r.push_back(r_of_c(ci));

  std::vector<Rational> weight(k, Rational(1));  // 2^{j-1}
  for (std::size_t j = 1; j < k; ++j) weight[j] = weight[j - 1] * 2;
  const Rational denom_base = pow_int(Rational(2), static_cast<long>(k)) - 1;

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  bool first = true;
  Rational best(0);
  std::vector<std::size_t> best_perm = perm;
  do {
    Rational s(0);
    for (std::size_t j = 0; j < k; ++j) s += weight[j] * r[perm[j]];
    const Rational v = (Rational(1) - s) / (denom_base + s);
    if (first || v < best) {
      best = v;
      best_perm = perm;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, best_perm};
}

}  // namespace

Rational ksum_candidate_bound(const std::vector<Rational>& c) {
  return max(Rational(0), ksum_minimize(c).first);
}

std::vector<CompactSet1D> ksum_candidate_witness(const std::vector<Rational>& c) {
  const std::vector<std::size_t> perm = ksum_minimize(c).second;
  // Dilation factor 2^{j-1} goes to the j-th set of the minimizing order.
  std::vector<Rational> factor(c.size(), Rational(1));
  Rational w(1);
  for (std::size_t j = 0; j < perm.size(); ++j) {
    factor[perm[j]] = w;
    w *= 2;
  }
  std::vector<CompactSet1D> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    out.push_back(scale(balanced_set(r_of_c(c[i])), factor[i]));
  return out;
}

CStar induced_index_cstar(const Rational& c) {
  require_unit(c, "index");
  if (c == Rational(1)) return {false, 0};
  const Rational target = Rational(1) / (Rational(1) - c);
  Rational pw(1);
  long k = 0;
  while (pw < target) {
    pw *= 2;
    ++k;
  }
  return {true, k};
}

Rational annulus_sum_index(const Rational& c1, const Rational& m) {
  require_unit(c1, "index");
  if (m.sign() <= 0 || c1 < m)
    throw std::domain_error("annulus scaling needs 0 < m <= c1; got m = " + m.str() +
                            ", c1 = " + c1.str());
  return (c1 - m) / (Rational(1) + m);
}

}  // namespace sumset
