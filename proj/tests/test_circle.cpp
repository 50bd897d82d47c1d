#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rotren/circle.hpp"

using namespace rotren;

namespace {

RotationNumber RN(const char* s) { return RotationNumber::parse(s); }

const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

}  // namespace

TEST_CASE("rotation orbits are exact on rationals") {
  auto orb = rotation_orbit(RN("1/3"), 5);
  REQUIRE(orb.size() == 5);
  CHECK(orb[0] == 0.0);
  CHECK(orb[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(orb[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(orb[3] == 0.0);
  CHECK(orb[4] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  orb = rotation_orbit(RN("1/2"), 3, 0.25);
  CHECK(orb[0] == 0.25);
  CHECK(orb[1] == 0.75);
  CHECK(orb[2] == 0.25);

  orb = rotation_orbit(RN("[0;(1)]"), 3);
  CHECK(orb[2] == doctest::Approx(std::fmod(2.0 * kGolden, 1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(rotation_orbit(RN("1/3"), 0), DomainError);
}

TEST_CASE("fundamental sector hugs the shorter side") {
  Arc s = fundamental_sector(RN("1/3"));
  CHECK(s.start == 0.0);
  CHECK(s.length == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  s = fundamental_sector(RN("2/3"));
  CHECK(s.start == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(s.length == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  s = fundamental_sector(RN("1/2"));
  CHECK(s.length == 0.5);

  s = fundamental_sector(RN("[0;(2)]"));
  CHECK(s.start == 0.0);
  CHECK(s.length == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));

  s = fundamental_sector(RN("[0;(1)]"));
  CHECK(s.start == doctest::Approx(kGolden).epsilon(1e-12));
  CHECK(s.length == doctest::Approx(1.0 - kGolden).epsilon(1e-12));

  CHECK_THROWS_AS(fundamental_sector(RotationNumber::zero()), DomainError);
}

TEST_CASE("first return at the fundamental sector of 2/5") {
  FirstReturnData fr = first_return(RN("2/5"), fundamental_sector(RN("2/5")));
  CHECK_FALSE(fr.degenerate);
  CHECK(fr.a == 2);
  CHECK(fr.b == 3);
  REQUIRE(fr.branches.size() == 2);
  CHECK(fr.branches[0].time == 3);
  CHECK(fr.branches[0].arc.start == doctest::Approx(0.0));
  CHECK(fr.branches[0].arc.length == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(fr.branches[1].time == 2);
  CHECK(fr.branches[1].arc.start == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(fr.cut == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(fr.has_congruence);
  CHECK(fr.congruence.a == 2);
  CHECK(fr.congruence.b == 3);
}

TEST_CASE("first return at the fundamental sector of 3/7") {
  FirstReturnData fr = first_return(RN("3/7"), fundamental_sector(RN("3/7")));
  CHECK_FALSE(fr.degenerate);
  CHECK(fr.a == 2);
  CHECK(fr.b == 3);
  CHECK(fr.cut == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
  // the mod-q pair follows its own ordering convention
  CHECK(fr.congruence.a == 2);
  CHECK(fr.congruence.b == 5);
}

TEST_CASE("first return at the fundamental sector of the golden mean") {
  FirstReturnData fr = first_return(RN("[0;(1)]"), fundamental_sector(RN("[0;(1)]")));
  CHECK_FALSE(fr.degenerate);
  CHECK(fr.a == 2);
  CHECK(fr.b == 3);
  CHECK(fr.cut == doctest::Approx(2.0 - 2.0 * kGolden).epsilon(1e-9));
  REQUIRE(fr.branches.size() == 2);
  CHECK(fr.branches[0].time == 2);
  CHECK(fr.branches[1].time == 3);
  CHECK_FALSE(fr.has_congruence);
}

TEST_CASE("degenerate first return of 1/m sectors") {
  FirstReturnData fr = first_return(RN("1/5"), fundamental_sector(RN("1/5")));
  CHECK(fr.degenerate);
  CHECK(fr.a == 4);
  CHECK(fr.b == 5);
  REQUIRE(fr.branches.size() == 1);
  CHECK(fr.branches[0].time == 5);
  CHECK(fr.branches[0].arc.length == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(fr.congruence.a == 4);
  CHECK(fr.congruence.b == 1);

  fr = first_return(RN("1/2"), fundamental_sector(RN("1/2")));
  CHECK(fr.degenerate);
  CHECK(fr.a == 1);
  CHECK(fr.b == 2);
  CHECK_FALSE(fr.has_congruence);

  fr = first_return(RN("1/3"), fundamental_sector(RN("1/3")));
  CHECK(fr.degenerate);
  CHECK(fr.a == 2);
  CHECK(fr.b == 3);
}

TEST_CASE("fundamental sectors give consecutive return times") {
  for (const char* s : {"2/5", "3/7", "4/9", "5/13", "7/11", "[0;(1)]", "[0;(2)]",
                        "[0;1,(2)]", "[0;3,(1)]", "1-[0;(3)]"}) {
    FirstReturnData fr = first_return(RN(s), fundamental_sector(RN(s)));
    CHECK(fr.b == fr.a + 1);
  }
}

TEST_CASE("generic arcs can fail with three return times") {
  CHECK_THROWS_AS(first_return(RN("[0;(1)]"), Arc{0.05, 0.3}), DomainError);
  CHECK_THROWS_AS(first_return(RN("1/3"), Arc{0.1, 0.5}), DomainError);
  CHECK_THROWS_AS(first_return(RN("1/3"), Arc{0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(first_return(RotationNumber::zero(), Arc{0.0, 0.5}), DomainError);
}

TEST_CASE("induced rotation number of small cycles is exact") {
  InducedRotation ir = induced_rotation_number(RN("2/5"), 10);
  CHECK(ir.value == RN("1/2"));
  CHECK(ir.sample_points == 2);

  ir = induced_rotation_number(RN("3/7"), 10);
  CHECK(ir.value == RN("2/3"));
  CHECK(ir.sample_points == 3);

  // degenerate sector: a single branch, every return hits the start point
  ir = induced_rotation_number(RN("1/5"), 10);
  CHECK(ir.value == RotationNumber::zero());
  CHECK(ir.sample_points == 1);

  CHECK_THROWS_AS(induced_rotation_number(RN("2/5"), 1), DomainError);
}

TEST_CASE("induced rotation number approximates the fast renormalization image") {
  for (const char* s : {"[0;(1)]", "[0;(2)]", "[0;1,(2)]", "[0;3,(1)]", "2/5", "3/7",
                        "5/7", "4/9", "8/13"}) {
    RotationNumber theta = RN(s);
    InducedRotation ir = induced_rotation_number(theta, 200);
    double expected = fast_renormalize(theta).value();
    double got = ir.value.value();
    CHECK(std::abs(got - expected) <= 1.0 / static_cast<double>(ir.sample_points));
  }
}

TEST_CASE("induced rotation number of the golden mean approaches itself") {
  InducedRotation ir = induced_rotation_number(RN("[0;(1)]"), 300);
  CHECK(ir.sample_points > 10);
  CHECK(std::abs(ir.value.value() - kGolden) <= 1.0 / static_cast<double>(ir.sample_points));
}

TEST_CASE("gap statistics at golden convergents reproduce the golden ratio") {
  TriangulationStats st = triangulation_stats(RN("[0;(1)]"), 3, 5);
  CHECK(st.distinct_gaps == 2);
  CHECK(st.ratio == doctest::Approx(1.0 / kGolden).epsilon(1e-9));

  st = triangulation_stats(RN("[0;(1)]"), 2, 3);
  CHECK(st.distinct_gaps == 2);
  CHECK(st.ratio == doctest::Approx(1.0 / kGolden).epsilon(1e-9));

  st = triangulation_stats(RN("[0;(1)]"), 55, 89);
  CHECK(st.ratio < 2.62);
}

TEST_CASE("a rational partitions itself into equal gaps") {
  TriangulationStats st = triangulation_stats(RN("2/5"), 2, 5);
  CHECK(st.distinct_gaps == 1);
  CHECK(st.ratio == doctest::Approx(1.0));
  CHECK(st.min_arc == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("gap statistics reject non-convergents") {
  CHECK_THROWS_AS(triangulation_stats(RN("[0;(1)]"), 2, 5), DomainError);
  CHECK_THROWS_AS(triangulation_stats(RN("[0;(1)]"), 3, 0), DomainError);
}

TEST_CASE("orbit partitions have at most three gap lengths") {
  for (const char* s : {"[0;(1)]", "[0;(2)]", "[0;3,(1,2)]"}) {
    RotationNumber theta = RN(s);
    for (const Convergent& c : convergents(theta, 2000)) {
      TriangulationStats st = triangulation_stats(theta, c.p, c.q);
      CHECK(st.distinct_gaps <= 3);
    }
  }
}

TEST_CASE("return times grow geometrically along golden convergents") {
  ReturnTimeGrowth g = return_time_growth(RN("[0;(1)]"), 20);
  REQUIRE(g.rows.size() == 20);
  CHECK(g.rows[0].q == 3);
  CHECK(g.rows[0].a == 1);
  CHECK(g.rows[0].b == 2);
  CHECK(g.rows[1].q == 5);
  CHECK(g.rows[1].a == 3);
  CHECK(g.rows[1].b == 2);
  CHECK(g.rows[2].q == 8);
  CHECK(g.rows[2].a == 3);
  CHECK(g.rows[2].b == 5);
  double log_phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
  CHECK(g.exponent_a == doctest::Approx(log_phi).epsilon(0.05));
  CHECK(g.exponent_b == doctest::Approx(log_phi).epsilon(0.05));
  CHECK_THROWS_AS(return_time_growth(RN("2/5"), 10), DomainError);
  CHECK_THROWS_AS(return_time_growth(RN("[0;(1)]"), 0), DomainError);
}
