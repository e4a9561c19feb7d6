#include "sumset/regions.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumset/bounds.hpp"
#include "sumset/fractal.hpp"
#include "sumset/index.hpp"

namespace sumset {

namespace {

void require_nonnegative(const Rational& x, const char* what) {
  if (x.sign() < 0) throw std::domain_error(std::string(what) + " must be >= 0, got " + x.str());
}

bool in_unit(const Rational& x) { return Rational(0) <= x && x <= Rational(1); }

CompactSet1D balanced_set(const Rational& r) {
  return CompactSet1D({Interval(Rational(0), r), Interval(Rational(1), 1 + r)});
}

}  // namespace

RegionPoint::RegionPoint(int m_) : m(m_) {
  if (m < 1 || m > 16) throw std::invalid_argument("region point needs 1 <= m <= 16");
}

void RegionPoint::set(unsigned mask, Rational v) {
  if (mask == 0 || mask >= (1u << m))
    throw std::invalid_argument("subset mask out of range for m = " + std::to_string(m));
  values.insert_or_assign(mask, std::move(v));
}

const Rational& RegionPoint::at(unsigned mask) const {
  auto it = values.find(mask);
  if (it == values.end())
    throw std::out_of_range("region point has no value for mask " + std::to_string(mask));
  return it->second;
}

std::vector<unsigned> RegionPoint::canonical_masks(int m) {
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> elems;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) elems.push_back(i + 1);
    subsets.push_back(std::move(elems));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<unsigned> masks;
  masks.reserve(subsets.size());
  for (const auto& elems : subsets) {
    unsigned mask = 0;
    for (int i : elems) mask |= 1u << (i - 1);
    masks.push_back(mask);
  }
  return masks;
}

S12Membership schneider_membership_S12(const Rational& c1, const Rational& c2,
                                       const Rational& c12) {
  require_nonnegative(c1, "c1");
  require_nonnegative(c2, "c2");
  require_nonnegative(c12, "c12");
  // Clause order matters only for the label: the corner (0,0,0) satisfies
  // every degenerate clause and is reported as the empty piece because the
  // two-set window [L, M) is empty there.
  if (in_unit(c1) && in_unit(c2)) {
    const Rational l = lower_bound_L(c1, c2);
    const Rational m = upper_bound_M(c1, c2);
    if (l <= c12 && c12 < m) return {true, S12Piece::Both};
  }
  if (c1.is_zero() && c2.is_zero() && c12.is_zero()) return {true, S12Piece::Empty};
  if (c2.is_zero() && c12 == c1 && in_unit(c1)) return {true, S12Piece::First};
  if (c1.is_zero() && c12 == c2 && in_unit(c2)) return {true, S12Piece::Second};
  return {false, S12Piece::Empty};
}

std::pair<CompactSet1D, CompactSet1D> schneider_witness_S12(const Rational& c1, const Rational& c2,
                                                            const Rational& c12) {
  const S12Membership mem = schneider_membership_S12(c1, c2, c12);
  if (!mem.member)
    throw std::domain_error("(" + c1.str() + ", " + c2.str() + ", " + c12.str() +
                            ") is not an attainable index triple");

  switch (mem.piece) {
    case S12Piece::Empty:
      return {CompactSet1D::point(Rational(0)), CompactSet1D::point(Rational(0))};
    case S12Piece::First:
      // c2 = 0: pair any set of index c1 with a point.
      return {balanced_set(r_of_c(c1)), CompactSet1D::point(Rational(0))};
    case S12Piece::Second:
      return {CompactSet1D::point(Rational(0)), balanced_set(r_of_c(c2))};
    case S12Piece::Both:
      break;
  }

  if (upper_bound_M(c1, c2).is_zero())
    throw std::domain_error("degenerate target: the {1,2} piece is empty when c1 = c2 = 0");

  // On the {1,2} piece the witness is (balanced(r_first), m * balanced(r_second))
  // with m >= 2; the attained index is
  //   f(m) = (m - 1 - r_first - m r_second) / (1 + m + r_first + m r_second),
  // increasing from the lower bound at m = 2 toward c_second as m -> inf.
  // Solve f(m) = c12 for m:
  //   m = (1 + r_first)(1 + c12) / ((1 - r_second) - c12 (1 + r_second)).
  const Rational r1 = r_of_c(c1);
  const Rational r2 = r_of_c(c2);
  const auto ordered_value = [](const Rational& rf, const Rational& rs) {
    return (Rational(1) - rf - 2 * rs) / (Rational(3) + rf + 2 * rs);
  };

  struct Ordering {
    Rational r_first, r_second, c_second;
    bool swapped;  // true: set 1 takes the scaled role
  };
  const Ordering minimizing = ordered_value(r1, r2) <= ordered_value(r2, r1)
                                  ? Ordering{r1, r2, c2, false}
                                  : Ordering{r2, r1, c1, true};
  const Ordering fallback = minimizing.swapped ? Ordering{r1, r2, c2, false}
                                               : Ordering{r2, r1, c1, true};

  const auto solve = [&](const Ordering& o, Rational& m_out) {
    if (!(c12 < o.c_second)) return false;  // f(m) < c_second for every finite m
    const Rational denom = (Rational(1) - o.r_second) - c12 * (Rational(1) + o.r_second);
    // c12 < c_second = (1 - r_second)/(1 + r_second) makes denom > 0.
    const Rational m = (Rational(1) + o.r_first) * (Rational(1) + c12) / denom;
    if (m < Rational(2)) return false;  // below the valid homothety range
    m_out = m;
    return true;
  };

  Rational m(0);
  const Ordering* chosen = &minimizing;
  if (!solve(minimizing, m)) {
    chosen = &fallback;
    if (!solve(fallback, m))
      throw std::logic_error("no homothety ordering reaches the target index; should be impossible "
                             "for member triples");
  }
  CompactSet1D first = balanced_set(chosen->r_first);
  CompactSet1D second = scale(balanced_set(chosen->r_second), m);
  if (chosen->swapped) return {std::move(second), std::move(first)};
  return {std::move(first), std::move(second)};
}

namespace {

// Floor of the n-th root of a nonnegative integer; exact flag set when the
// root is an integer.
mpz_class integer_nth_root(const mpz_class& x, unsigned long n, bool* exact) {
  mpz_class r;
  const int ex = mpz_root(r.get_mpz_t(), x.get_mpz_t(), n);
  if (exact) *exact = ex != 0;
  return r;
}

// x^{1/n} is rational iff numerator and denominator (in lowest terms) are
// both integer n-th powers.
bool rational_nth_root(const Rational& x, unsigned long n, Rational* root) {
  bool exact_num = false, exact_den = false;
  const mpz_class rn = integer_nth_root(x.num(), n, &exact_num);
  const mpz_class rd = integer_nth_root(x.den(), n, &exact_den);
  if (!exact_num || !exact_den) return false;
  if (root) *root = Rational(rn, rd);
  return true;
}

// Dyadic enclosure of x^{1/n} of width 2^-bits: floor the root of
// x * 2^{n*bits} and divide back.
void nth_root_enclosure(const Rational& x, unsigned long n, unsigned long bits, Rational* lo,
                        Rational* hi) {
  mpz_class two_k(1);
  mpz_mul_2exp(two_k.get_mpz_t(), two_k.get_mpz_t(), bits);
  mpz_class two_kn(1);
  mpz_mul_2exp(two_kn.get_mpz_t(), two_kn.get_mpz_t(), bits * n);
  // floor(x * 2^{kn})
  mpz_class scaled = (x.num() * two_kn) / x.den();
  const mpz_class s = integer_nth_root(scaled, n, nullptr);
  *lo = Rational(s, two_k);
  *hi = Rational(s + 1, two_k);
}

}  // namespace

bool lyusternik_membership_L2(long n, const Rational& a, const Rational& b, const Rational& c) {
  if (n < 1) throw std::invalid_argument("dimension n must be >= 1, got " + std::to_string(n));
  require_nonnegative(a, "measure a");
  require_nonnegative(b, "measure b");
  require_nonnegative(c, "measure c");
  if (n == 1) return a + b <= c;
  if (a.is_zero()) return b <= c;
  if (b.is_zero()) return a <= c;

  const unsigned long un = static_cast<unsigned long>(n);
  Rational ratio_root(0);
  if (rational_nth_root(b / a, un, &ratio_root)) {
    // b/a = t^n, so (a^{1/n} + b^{1/n})^n = a (1 + t)^n exactly.
    return a * pow_int(Rational(1) + ratio_root, n) <= c;
  }

  // b/a is not an n-th power of a rational, which makes the threshold
  // (a^{1/n} + b^{1/n})^n irrational: writing lambda = (b/a)^{1/n}, the
  // minimal polynomial of lambda is x^d - lambda^d for some d > 1 dividing n,
  // and (1 + lambda)^n expands with strictly positive coordinates on the
  // powers lambda^j, j < d. Equality with the rational c is therefore
  // impossible and the dyadic narrowing below always decides.
  for (unsigned long bits = 32; bits <= 4096; bits *= 2) {
    Rational alo(0), ahi(0), blo(0), bhi(0);
    nth_root_enclosure(a, un, bits, &alo, &ahi);
    nth_root_enclosure(b, un, bits, &blo, &bhi);
    const Rational lower = pow_int(alo + blo, n);
    const Rational upper = pow_int(ahi + bhi, n);
    if (upper <= c) return true;
    if (c < lower) return false;
  }
  throw std::logic_error("dyadic narrowing failed to separate a provably irrational threshold");
}

Lyu3Witness fractal_lyusternik3_witness(const Rational& alpha13, const Rational& alpha23,
                                        const Rational& alpha123, long depth) {
  if (!(Rational(0) < alpha13 && alpha13 <= alpha23 && alpha23 < alpha123))
    throw std::domain_error("targets must satisfy 0 < alpha13 <= alpha23 < alpha123; got (" +
                            alpha13.str() + ", " + alpha23.str() + ", " + alpha123.str() + ")");

  const Rational a = alpha23 / alpha13;  // >= 1
  const Rational b = alpha123 / alpha13; // > a

  // Pick N so that the small fractal's diameter k1/(N-1) leaves room below
  // b - a; primary scan uses k1 = floor((N-1)/3), and if the gap b - a is too
  // small for that family, fall back to k1 = 1 (then k1/(N-1) -> 0, so the
  // scan terminates).
  long N = 0, k1 = 0, k2 = 0;
  for (long cand = 4; cand <= 64 && N == 0; ++cand) {
    const long kk = (cand - 1) / 3;
    if (kk < 1) continue;
    if (Rational(kk, cand - 1) + a < b) {
      N = cand;
      k1 = kk;
      k2 = cand - 1 - kk;
    }
  }
  for (long cand = 4; N == 0; ++cand) {
    if (Rational(1, cand - 1) + a < b) {
      N = cand;
      k1 = 1;
      k2 = cand - 2;
    }
  }

  const FractalSpec small_spec(N, k1, depth);
  const FractalSpec large_spec(N, k2, depth);
  const CompactSet1D small_cover = fractal_cover(small_spec);

  const mpz_class qa = a.floor();
  const Rational ra = a - Rational(qa);
  const mpz_class qb = (b / a).floor();
  const Rational rb = b / a - Rational(qb);
  if (!qa.fits_slong_p() || !qb.fits_slong_p())
    throw std::invalid_argument("target ratios too large: integer parts must fit a machine word");
  const long qa_l = qa.get_si();
  const long qb_l = qb.get_si();

  // B1 = cover(N,k1) u {j a : j < q_b} u {b - a}
  std::vector<Rational> b1_points;
  for (long j = 0; j < qb_l; ++j) b1_points.push_back(Rational(j) * a);
  b1_points.push_back(b - a);
  CompactSet1D B1 = set_union(small_cover, CompactSet1D::points(b1_points));

  // B2 = union of integer translates of cover(N,k1) at 0..q_a-1 and at a-1
  CompactSet1D B2 = small_cover;
  for (long j = 1; j < qa_l; ++j) B2 = set_union(B2, translate(small_cover, Rational(j)));
  B2 = set_union(B2, translate(small_cover, a - 1));

  const CompactSet1D B3 = fractal_cover(large_spec);

  CompactSet1D A1 = scale(B1, alpha13);
  CompactSet1D A2 = scale(B2, alpha13);
  CompactSet1D A3 = scale(B3, alpha13);

  RegionPoint achieved(3);
  const CompactSet1D s12 = A1 + A2;
  const CompactSet1D s23 = A2 + A3;
  achieved.set(0b001, A1.measure());
  achieved.set(0b010, A2.measure());
  achieved.set(0b100, A3.measure());
  achieved.set(0b011, s12.measure());
  achieved.set(0b101, (A1 + A3).measure());
  achieved.set(0b110, s23.measure());
  achieved.set(0b111, (s23 + A1).measure());

  return Lyu3Witness{N,  k1, k2, depth, a, b, qa, qb, ra, rb,
                     std::move(A1), std::move(A2), std::move(A3), std::move(achieved)};
}

RegionPoint non_closedness_sequence(long k) {
  if (k < 2) throw std::domain_error("sequence parameter k must be >= 2, got " + std::to_string(k));
  RegionPoint p(3);
  const Rational alpha = Rational(k - 1, k);  // 1 - 1/k
  p.set(0b001, Rational(0));
  p.set(0b010, Rational(0));
  p.set(0b100, Rational(0));
  p.set(0b011, Rational(0));
  p.set(0b101, alpha);
  p.set(0b110, alpha);
  p.set(0b111, Rational(1));
  return p;
}

bool lyusternik_limit_excluded(const RegionPoint& p) {
  if (p.m != 3 || p.values.size() != 7) return false;
  const Rational alpha = p.at(0b101);
  return p.at(0b001).is_zero() && p.at(0b010).is_zero() && p.at(0b100).is_zero() &&
         p.at(0b011).is_zero() && alpha.sign() > 0 && p.at(0b110) == alpha &&
         p.at(0b111) == alpha;
}

bool partial_char_Sn2(long n, const Rational& c1, const Rational& c2, const Rational& c12) {
  if (n < 2)
    throw std::invalid_argument("ambient dimension must be >= 2, got " + std::to_string(n));
  if (c1.sign() < 0 || c2.sign() < 0 || c12.sign() < 0) return false;
  return in_unit(c1) && in_unit(c2) && c12 <= max(c1, c2);
}

}  // namespace sumset
