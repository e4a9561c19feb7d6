#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "sumset/oracle.hpp"
#include "sumset/rational.hpp"
#include "sumset/set1d.hpp"

using namespace sumset;

namespace {

CompactSet1D two_blocks() {
  return CompactSet1D({Interval(0, 1), Interval(2, 3)});
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational::parse("4/6").str() == "2/3");
  CHECK(Rational::parse("3").str() == "3");
  CHECK(Rational::parse("-7/3") == Rational(-7, 3));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1) / Rational(3) == Rational(1, 3));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(pow_int(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow_int(Rational(2), -2) == Rational(1, 4));
  CHECK(Rational(1, 3).decimal(4) == "0.3333");
  CHECK(Rational(-1, 2).decimal(1) == "-0.5");
  CHECK(Rational(5).decimal(0) == "5");

  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("construction normalizes: sorting, merging, touching parts") {
  // overlapping and touching parts collapse
  CompactSet1D a({Interval(2, 3), Interval(0, 1), Interval(1, Rational(3, 2))});
  REQUIRE(a.part_count() == 2);
  CHECK(a.parts()[0] == Interval(0, Rational(3, 2)));
  CHECK(a.parts()[1] == Interval(2, 3));

  // nested parts are absorbed
  CompactSet1D b({Interval(0, 4), Interval(1, 2)});
  CHECK(b.is_interval());
  CHECK(b.parts()[0] == Interval(0, 4));

  // duplicate points collapse to one
  CompactSet1D c = CompactSet1D::points({Rational(1), Rational(1), Rational(0)});
  CHECK(c.part_count() == 2);

  CHECK_THROWS_AS(CompactSet1D(std::vector<Interval>{}), std::invalid_argument);
  CHECK_THROWS_AS(Interval(1, 0), std::invalid_argument);
}

TEST_CASE("normalization is idempotent on random sets") {
  std::mt19937_64 rng(20240817);
  for (int t = 0; t < 200; ++t) {
    CompactSet1D a = random_set(rng);
    CompactSet1D b(a.parts());
    CHECK(a == b);
    // parts strictly ordered with genuine gaps between them
    for (std::size_t i = 1; i < a.parts().size(); ++i)
      CHECK(a.parts()[i - 1].hi < a.parts()[i].lo);
  }
}

TEST_CASE("geometric accessors") {
  CompactSet1D a = two_blocks();
  CHECK(a.min() == 0);
  CHECK(a.max() == 3);
  CHECK(a.diameter() == 3);
  CHECK(a.measure() == 2);
  CHECK(a.convex_hull() == Interval(0, 3));
  CHECK_FALSE(a.is_interval());
  CHECK_FALSE(a.is_point());
  CHECK(CompactSet1D::point(5).is_point());
  CHECK(CompactSet1D::point(5).diameter() == 0);
  CHECK(CompactSet1D::point(5).measure() == 0);
}

TEST_CASE("membership and containment") {
  CompactSet1D a = two_blocks();
  CHECK(a.contains_point(Rational(1, 2)));
  CHECK(a.contains_point(1));
  CHECK(a.contains_point(2));
  CHECK_FALSE(a.contains_point(Rational(3, 2)));
  CHECK_FALSE(a.contains_point(4));

  CHECK(a.contains(CompactSet1D({Interval(0, Rational(1, 2)), Interval(Rational(5, 2), 3)})));
  CHECK(a.contains(a));
  CHECK_FALSE(a.contains(CompactSet1D::interval(0, 3)));
  CHECK(CompactSet1D::interval(0, 3).contains(a));
  CHECK_FALSE(a.contains(CompactSet1D::point(Rational(3, 2))));
}

TEST_CASE("minkowski sums of point sets: exact pointwise enumeration") {
  CompactSet1D a = CompactSet1D::points({Rational(0), Rational(1)});
  CompactSet1D b = CompactSet1D::points({Rational(0), Rational(2)});
  CHECK(a + b == CompactSet1D::points({Rational(0), Rational(1), Rational(2), Rational(3)}));

  // identity element
  CompactSet1D c = two_blocks();
  CHECK(c + CompactSet1D::point(0) == c);
  CHECK(c + CompactSet1D::point(Rational(1, 2)) == translate(c, Rational(1, 2)));
}

TEST_CASE("minkowski sum merges interacting blocks") {
  // balanced two-interval set plus its doubled copy fills [0, 9/2]
  CompactSet1D a({Interval(0, Rational(1, 2)), Interval(1, Rational(3, 2))});
  CompactSet1D b({Interval(0, 1), Interval(2, 3)});
  CHECK(a + b == CompactSet1D::interval(0, Rational(9, 2)));

  // smaller second set keeps a gap open
  CompactSet1D c({Interval(0, Rational(1, 4)), Interval(1, Rational(5, 4))});
  CompactSet1D s = c + scale(c, Rational(1, 2));
  REQUIRE(s.part_count() > 1);
  CHECK(s.min() == 0);
  CHECK(s.max() == Rational(5, 4) + Rational(5, 8));
}

TEST_CASE("sum properties on random sets") {
  std::mt19937_64 rng(911);
  for (int t = 0; t < 120; ++t) {
    CompactSet1D a = random_set(rng);
    CompactSet1D b = random_set(rng);
    CompactSet1D s = a + b;
    CHECK(s == b + a);
    // hull additivity
    CHECK(s.min() == a.min() + b.min());
    CHECK(s.max() == a.max() + b.max());
    CHECK(s.diameter() == a.diameter() + b.diameter());
    // 1-D measure superadditivity
    CHECK(s.measure() >= a.measure() + b.measure());
    // sum contains every translate by a point of the other summand
    CHECK(s.contains(translate(a, b.min())));
    CHECK(s.contains(translate(b, a.max())));
  }
  // associativity spot check
  CompactSet1D x = random_set(rng), y = random_set(rng), z = random_set(rng);
  CHECK((x + y) + z == x + (y + z));
}

TEST_CASE("scale and translate") {
  CompactSet1D a = two_blocks();
  CompactSet1D twice = scale(a, 2);
  CHECK(twice == CompactSet1D({Interval(0, 2), Interval(4, 6)}));
  CHECK(scale(twice, Rational(1, 2)) == a);
  CHECK(translate(translate(a, Rational(7, 3)), Rational(-7, 3)) == a);
  CHECK(scale(a, 1) == a);
  CHECK_THROWS_AS(scale(a, 0), std::domain_error);
  CHECK_THROWS_AS(scale(a, Rational(-1, 2)), std::domain_error);
}

TEST_CASE("set_union joins and merges") {
  CompactSet1D a = CompactSet1D::interval(0, 1);
  CompactSet1D b = CompactSet1D::interval(1, 2);
  CHECK(set_union(a, b) == CompactSet1D::interval(0, 2));
  CompactSet1D c = set_union(two_blocks(), CompactSet1D::point(Rational(3, 2)));
  CHECK(c.part_count() == 3);
  CHECK(c.measure() == 2);
}
