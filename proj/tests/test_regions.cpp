#include <doctest.h>

#include <random>
#include <stdexcept>

#include "sumset/bounds.hpp"
#include "sumset/fractal.hpp"
#include "sumset/index.hpp"
#include "sumset/oracle.hpp"
#include "sumset/regions.hpp"

using namespace sumset;

TEST_CASE("canonical subset ordering") {
  const std::vector<unsigned> m3 = RegionPoint::canonical_masks(3);
  CHECK(m3 == std::vector<unsigned>{0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111});
  const std::vector<unsigned> m2 = RegionPoint::canonical_masks(2);
  CHECK(m2 == std::vector<unsigned>{0b01, 0b10, 0b11});
  // size-then-lex: {1,4} precedes {2,3}
  const std::vector<unsigned> m4 = RegionPoint::canonical_masks(4);
  const unsigned m14 = 0b1001, m23 = 0b0110;
  std::size_t i14 = 0, i23 = 0;
  for (std::size_t i = 0; i < m4.size(); ++i) {
    if (m4[i] == m14) i14 = i;
    if (m4[i] == m23) i23 = i;
  }
  CHECK(i14 < i23);
}

TEST_CASE("index-triple membership") {
  // interior of the two-set piece
  CHECK(schneider_membership_S12(1, 1, Rational(1, 3)).member);
  CHECK(schneider_membership_S12(1, 1, Rational(1, 3)).piece == S12Piece::Both);
  CHECK(schneider_membership_S12(1, 1, Rational(1, 2)).member);
  CHECK(schneider_membership_S12(Rational(1, 2), Rational(1, 4), 0).member);

  // the upper end is excluded
  CHECK_FALSE(schneider_membership_S12(1, 1, 1).member);
  CHECK_FALSE(schneider_membership_S12(Rational(1, 2), Rational(1, 4), Rational(1, 2)).member);

  // below the lower bound is excluded
  CHECK_FALSE(schneider_membership_S12(1, 1, Rational(1, 4)).member);

  // degenerate pieces
  CHECK(schneider_membership_S12(0, 0, 0).member);
  CHECK(schneider_membership_S12(0, 0, 0).piece == S12Piece::Empty);
  CHECK(schneider_membership_S12(Rational(1, 2), 0, Rational(1, 2)).member);
  CHECK(schneider_membership_S12(Rational(1, 2), 0, Rational(1, 2)).piece == S12Piece::First);
  CHECK(schneider_membership_S12(0, Rational(2, 3), Rational(2, 3)).piece == S12Piece::Second);
  // (1/2, 0, 1/4) lies inside the two-set window [0, 1/2)
  CHECK(schneider_membership_S12(Rational(1, 2), 0, Rational(1, 4)).piece == S12Piece::Both);

  // outside entirely
  CHECK_FALSE(schneider_membership_S12(Rational(1, 2), 0, Rational(3, 4)).member);
  CHECK_FALSE(schneider_membership_S12(Rational(3, 2), 0, 0).member);
  CHECK_THROWS_AS(schneider_membership_S12(Rational(-1, 2), 0, 0), std::domain_error);
}

TEST_CASE("witness pairs for the two-set piece") {
  // boundary of the window: the standard tight pair, scaled by m = 2
  auto [a1, a2] = schneider_witness_S12(1, 1, Rational(1, 3));
  CHECK(schneider_index(a1) == 1);
  CHECK(schneider_index(a2) == 1);
  CHECK(sum_index({a1, a2}) == Rational(1, 3));

  // interior point: homothety solved exactly (m = 15 here)
  auto [b1, b2] = schneider_witness_S12(Rational(1, 3), Rational(1, 3), Rational(1, 4));
  CHECK(schneider_index(b1) == Rational(1, 3));
  CHECK(schneider_index(b2) == Rational(1, 3));
  CHECK(sum_index({b1, b2}) == Rational(1, 4));
  CHECK(b2.diameter() == 15 * b1.diameter());

  // ordering switch: the minimizing order cannot reach targets above c_small
  auto [c1s, c2s] = schneider_witness_S12(Rational(1, 2), 0, Rational(1, 4));
  CHECK(schneider_index(c1s) == Rational(1, 2));
  CHECK(schneider_index(c2s) == 0);
  CHECK(sum_index({c1s, c2s}) == Rational(1, 4));

  // degenerate pieces give points
  auto [d1, d2] = schneider_witness_S12(Rational(2, 3), 0, Rational(2, 3));
  CHECK(schneider_index(d1) == Rational(2, 3));
  CHECK(d2.is_point());
  auto [e1, e2] = schneider_witness_S12(0, 0, 0);
  CHECK(e1.is_point());
  CHECK(e2.is_point());

  CHECK_THROWS_AS(schneider_witness_S12(1, 1, 1), std::domain_error);
  CHECK_THROWS_AS(schneider_witness_S12(1, 1, Rational(1, 4)), std::domain_error);
}

TEST_CASE("witness round-trip across the membership grid") {
  for (int i = 0; i <= 6; ++i) {
    for (int j = 0; j <= 6; ++j) {
      const Rational c1(i, 6), c2(j, 6);
      const Rational lo = lower_bound_L(c1, c2);
      const Rational hi = upper_bound_M(c1, c2);
      for (int t = 0; t <= 4; ++t) {
        // sample the window [lo, hi)
        const Rational c12 = lo + (hi - lo) * Rational(t, 5);
        if (!schneider_membership_S12(c1, c2, c12).member) continue;
        auto [w1, w2] = schneider_witness_S12(c1, c2, c12);
        CHECK(schneider_index(w1) == c1);
        CHECK(schneider_index(w2) == c2);
        CHECK(sum_index({w1, w2}) == c12);
      }
    }
  }
}

TEST_CASE("random sums land inside the region") {
  std::mt19937_64 rng(171717);
  for (int t = 0; t < 200; ++t) {
    const CompactSet1D a = random_set(rng);
    const CompactSet1D b = random_set(rng);
    const S12Membership mem =
        schneider_membership_S12(schneider_index(a), schneider_index(b), sum_index({a, b}));
    CHECK(mem.member);
  }
}

TEST_CASE("measure-region membership for two sets") {
  // dimension 1: plain superadditivity
  CHECK(lyusternik_membership_L2(1, Rational(1, 2), Rational(1, 3), Rational(5, 6)));
  CHECK_FALSE(lyusternik_membership_L2(1, Rational(1, 2), Rational(1, 3), Rational(4, 5)));

  // zero measures reduce to one-sided comparisons
  CHECK(lyusternik_membership_L2(3, 0, Rational(1, 2), Rational(1, 2)));
  CHECK_FALSE(lyusternik_membership_L2(3, 0, Rational(1, 2), Rational(1, 3)));
  CHECK(lyusternik_membership_L2(2, 0, 0, 0));

  // rational threshold: a = 1, b = 4, n = 2 gives (1 + 2)^2 = 9
  CHECK(lyusternik_membership_L2(2, 1, 4, 9));
  CHECK_FALSE(lyusternik_membership_L2(2, 1, 4, Rational(899, 100)));
  // scaled version: a = 2, b = 8 gives 2 (1 + 2)^2 = 18
  CHECK(lyusternik_membership_L2(2, 2, 8, 18));
  CHECK_FALSE(lyusternik_membership_L2(2, 2, 8, Rational(1799, 100)));

  // irrational threshold (1 + 2^{1/2})^2 = 3 + 2 sqrt(2) = 5.828...
  CHECK(lyusternik_membership_L2(2, 1, 2, 6));
  CHECK_FALSE(lyusternik_membership_L2(2, 1, 2, Rational(29, 5)));  // 5.8
  CHECK(lyusternik_membership_L2(2, 1, 2, Rational(5829, 1000)));
  CHECK_FALSE(lyusternik_membership_L2(2, 1, 2, Rational(5828, 1000)));
  // cube roots: (1 + 2^{1/3})^3 = 3 + 3 (2^{1/3} + 2^{2/3}) = 11.5419...
  CHECK(lyusternik_membership_L2(3, 1, 2, Rational(1155, 100)));
  CHECK_FALSE(lyusternik_membership_L2(3, 1, 2, Rational(1154, 100)));

  CHECK_THROWS_AS(lyusternik_membership_L2(0, 1, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(lyusternik_membership_L2(2, -1, 1, 4), std::domain_error);
}

TEST_CASE("engine-generated measure triples satisfy the 1-D membership") {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 150; ++t) {
    const CompactSet1D a = random_set(rng);
    const CompactSet1D b = random_set(rng);
    CHECK(lyusternik_membership_L2(1, a.measure(), b.measure(), (a + b).measure()));
  }
}

TEST_CASE("three-set fractal witness: target (1, 1, 2)") {
  const Lyu3Witness w = fractal_lyusternik3_witness(1, 1, 2, 3);
  CHECK(w.base == 4);
  CHECK(w.k1 == 1);
  CHECK(w.k2 == 2);
  CHECK(w.a == 1);
  CHECK(w.b == 2);
  CHECK(w.q_a == 1);
  CHECK(w.q_b == 2);
  CHECK(w.r_a == 0);
  CHECK(w.r_b == 0);

  const Rational cell = pow_int(Rational(1, 4), 3);
  // singleton measures: both small fractals have measure (1/2)^depth
  CHECK(w.achieved.at(0b001) == pow_int(Rational(1, 2), 3));
  CHECK(w.achieved.at(0b010) == pow_int(Rational(1, 2), 3));
  CHECK(w.achieved.at(0b100) == pow_int(Rational(3, 4), 3));
  // complementary digit caps: the 2-3 sum is a full interval
  CHECK(w.achieved.at(0b110) == 1 + cell);
  // the translate of A3 at 1 sticks out of [0, 1 + cell] by all but one cell
  CHECK(w.achieved.at(0b101) == 1 + pow_int(Rational(3, 4), 3));
  // the full sum reaches b exactly up to one cell width
  CHECK(w.achieved.at(0b111) == 2 + cell);
  // A1 + A2 = (cover + cover) u (1 + cover): 36/64 + 8/64
  CHECK(w.achieved.at(0b011) == Rational(11, 16));

  // the 2-3 sum and the full sum really are intervals
  CHECK((w.A2 + w.A3).is_interval());
  CHECK((w.A1 + w.A2 + w.A3).is_interval());
}

TEST_CASE("three-set fractal witness: scaling and non-integer ratios") {
  // alpha13 = 1/2 scales everything by 1/2
  const Lyu3Witness w = fractal_lyusternik3_witness(Rational(1, 2), Rational(1, 2), 1, 3);
  CHECK(w.a == 1);
  CHECK(w.b == 2);
  const Rational cell = pow_int(Rational(1, 4), 3);
  CHECK(w.achieved.at(0b110) == Rational(1, 2) * (1 + cell));
  CHECK(w.achieved.at(0b111) == Rational(1, 2) * (2 + cell));

  // non-integer a: alpha23/alpha13 = 3/2, fractional translate in play
  const Lyu3Witness v = fractal_lyusternik3_witness(1, Rational(3, 2), 3, 3);
  CHECK(v.a == Rational(3, 2));
  CHECK(v.b == 3);
  CHECK(v.q_a == 1);
  CHECK(v.r_a == Rational(1, 2));
  CHECK(v.q_b == 2);
  const Rational vcell = pow_int(Rational(1, v.base), 3);
  CHECK((v.A2 + v.A3).measure() == v.a + vcell);
  CHECK((v.A1 + v.A2 + v.A3).measure() == v.b + vcell);

  CHECK_THROWS_AS(fractal_lyusternik3_witness(1, 1, 1, 3), std::domain_error);  // needs b > a
  CHECK_THROWS_AS(fractal_lyusternik3_witness(0, 1, 2, 3), std::domain_error);
  CHECK_THROWS_AS(fractal_lyusternik3_witness(2, 1, 3, 3), std::domain_error);  // ordering
}

TEST_CASE("three-set fractal witness: small gap b - a takes the fallback scan") {
  // a = 1, b = 7/6: k1/(N-1) never fits below 1/6 on the primary family
  const Lyu3Witness w = fractal_lyusternik3_witness(1, 1, Rational(7, 6), 2);
  CHECK(w.k1 == 1);
  CHECK(w.base == 8);  // first N with 1/(N-1) + 1 < 7/6
  CHECK(w.k2 == 6);
  const Rational cell = pow_int(Rational(1, 8), 2);
  CHECK((w.A2 + w.A3).measure() == 1 + cell);
  CHECK((w.A1 + w.A2 + w.A3).measure() == Rational(7, 6) + cell);
}

TEST_CASE("non-closedness sequence and its excluded limit") {
  const RegionPoint p2 = non_closedness_sequence(2);
  CHECK(p2.at(0b101) == Rational(1, 2));
  CHECK(p2.at(0b110) == Rational(1, 2));
  CHECK(p2.at(0b111) == 1);
  CHECK(p2.at(0b011) == 0);
  CHECK_FALSE(lyusternik_limit_excluded(p2));  // sequence members are attainable

  const RegionPoint p10 = non_closedness_sequence(10);
  CHECK(p10.at(0b101) == Rational(9, 10));

  // the limit has all pairwise-with-3 and triple measures equal
  RegionPoint limit(3);
  limit.set(0b001, 0);
  limit.set(0b010, 0);
  limit.set(0b100, 0);
  limit.set(0b011, 0);
  limit.set(0b101, 1);
  limit.set(0b110, 1);
  limit.set(0b111, 1);
  CHECK(lyusternik_limit_excluded(limit));

  CHECK_THROWS_AS(non_closedness_sequence(1), std::domain_error);
}

TEST_CASE("sequence witnesses are constructible at finite depth") {
  // k = 5: targets (1 - 1/5, 1 - 1/5, 1) after scaling by alpha13 = 4/5
  const Rational alpha(4, 5);
  const Lyu3Witness w = fractal_lyusternik3_witness(alpha, alpha, 1, 2);
  CHECK(w.a == 1);
  CHECK(w.b == Rational(5, 4));
  const Rational cell = pow_int(Rational(1, w.base), 2);
  CHECK((w.A2 + w.A3).measure() == alpha * (1 + cell));
  CHECK((w.A1 + w.A2 + w.A3).measure() == alpha * (w.b + cell));
  // depth growth shrinks the singleton measures geometrically
  const Lyu3Witness deeper = fractal_lyusternik3_witness(alpha, alpha, 1, 4);
  CHECK(deeper.achieved.at(0b001) < w.achieved.at(0b001));
  CHECK(deeper.achieved.at(0b011) < w.achieved.at(0b011));
}

TEST_CASE("pair index region in higher dimensions") {
  CHECK(partial_char_Sn2(2, Rational(1, 2), Rational(1, 4), Rational(1, 2)));  // closed top
  CHECK(partial_char_Sn2(2, Rational(1, 2), Rational(1, 4), 0));
  CHECK(partial_char_Sn2(5, 1, 1, 1));
  CHECK_FALSE(partial_char_Sn2(2, Rational(1, 2), Rational(1, 4), Rational(3, 5)));
  CHECK_FALSE(partial_char_Sn2(2, Rational(3, 2), 0, 0));
  CHECK_FALSE(partial_char_Sn2(2, Rational(1, 2), Rational(1, 4), Rational(-1, 5)));
  CHECK_THROWS_AS(partial_char_Sn2(1, 0, 0, 0), std::invalid_argument);

  // closed-form annulus values always land inside
  for (int i = 1; i <= 4; ++i) {
    const Rational c1(i, 4);
    for (int j = 1; j <= i; ++j) {
      const Rational m(j, 4);
      CHECK(partial_char_Sn2(2, c1, c1, annulus_sum_index(c1, m)));
    }
  }
}
