#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "rotren/dyn_plane.hpp"
#include "rotren/errors.hpp"

using namespace rotren;

namespace {

using Cx = std::complex<double>;

RotationNumber RN(const std::string& s) { return RotationNumber::parse(s); }

const char* kGolden = "[0;(1)]";

}  // namespace

TEST_CASE("critical orbit starts at the critical point and stays bounded") {
  auto golden = RN(kGolden);
  CriticalOrbit orbit = siegel_critical_orbit(golden, 20000);
  REQUIRE(orbit.points.size() == 20000);
  Cx lambda = std::polar(1.0, 2.0 * std::numbers::pi * golden.value());
  CHECK(std::abs(orbit.points[0] + lambda / 2.0) < 1e-15);
  CHECK(orbit.bounded);

  // second point is p(critical point) = -lambda^2/4
  CHECK(std::abs(orbit.points[1] + lambda * lambda / 4.0) < 1e-15);

  CHECK(siegel_critical_orbit(RN("1/2"), 1000).bounded);
  CHECK(siegel_critical_orbit(RotationNumber::zero(), 1000).bounded);
  CHECK_THROWS_AS(siegel_critical_orbit(golden, 0), DomainError);
}

TEST_CASE("golden closest returns happen at the Fibonacci denominators") {
  ClosestReturnReport report = closest_returns(RN(kGolden), 233);
  CHECK(report.period == 2);
  REQUIRE(report.rows.size() == 11);
  long long fib[11] = {2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
  for (int i = 0; i < 11; ++i) CHECK(report.rows[i].q == fib[i]);
  for (int i = 1; i < 11; ++i) CHECK(report.rows[i].dist < report.rows[i - 1].dist);

  REQUIRE(report.ratio_estimates.size() == 9);
  for (std::size_t k = 0; k < report.ratio_estimates.size(); ++k) {
    CHECK(report.ratio_estimates[k] ==
          doctest::Approx(report.rows[k + 2].dist / report.rows[k].dist));
  }
  // the period-2 rescaling ratio settles near 0.55
  CHECK(report.ratio_estimates.back() == doctest::Approx(0.55).epsilon(0.01));
}

TEST_CASE("closest returns reject unusable inputs") {
  CHECK_THROWS_AS(closest_returns(RN("2/5"), 100), DomainError);
  CHECK_THROWS_AS(closest_returns(RN("[0;4,(2)]"), 100), DomainError);
  CHECK_THROWS_AS(closest_returns(RN(kGolden), 4), DomainError);
}

TEST_CASE("closest returns csv shape") {
  ClosestReturnReport report = closest_returns(RN(kGolden), 21);
  std::string csv = closest_returns_csv(report);
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "q,dist,ratio");
  int data_rows = 0, with_ratio = 0;
  while (std::getline(in, line)) {
    ++data_rows;
    if (line.back() != ',') ++with_ratio;
  }
  CHECK(data_rows == 6);
  CHECK(with_ratio == 4);
}

TEST_CASE("green potential is exact for the squaring map") {
  CHECK(green_potential(Cx(0, 0), Cx(1e6, 0), 20) ==
        doctest::Approx(std::log(1e6)).epsilon(1e-5));
  CHECK(green_potential(Cx(0, 0), Cx(0.5, 0), 100) == 0.0);
  CHECK_THROWS_AS(green_potential(Cx(0, 0), Cx(2, 0), 7), DomainError);
}

TEST_CASE("green potential at a pinned basilica point") {
  double g = green_potential(Cx(-1, 0), Cx(2.1, 0), 30);
  CHECK(g > 0.0);
  CHECK(g == doctest::Approx(0.5897588243725538).epsilon(1e-9));
}

TEST_CASE("green potential satisfies G(f(z)) = 2 G(z) on escaping orbits") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> radius(2.5, 3.5), turn(0.0, 1.0);
  Cx c(-0.8, 0.2);
  for (int k = 0; k < 1000; ++k) {
    Cx z = std::polar(radius(rng), 2.0 * std::numbers::pi * turn(rng));
    double g = green_potential(c, z, 60);
    double gf = green_potential(c, z * z + c, 60);
    REQUIRE(g > 0.0);
    CHECK(std::abs(gf - 2.0 * g) < 1e-8);
  }
}

TEST_CASE("external ray of the squaring map is radial") {
  RayTrace ray = external_ray_trace(Cx(0, 0), 1, 3, 40, 2);
  CHECK(ray.completed);
  REQUIRE(ray.points.size() == 82);
  double target = 2.0 * std::numbers::pi / 3.0;
  for (Cx z : ray.points) {
    CHECK(std::abs(std::arg(z) - target) < 1e-10);
  }
  CHECK(std::abs(ray.points.front()) == doctest::Approx(64.0).epsilon(1e-12));
  CHECK(std::abs(ray.points.back()) - 1.0 < 1e-6);
  // moduli decrease monotonically toward the Julia set
  for (std::size_t i = 1; i < ray.points.size(); ++i) {
    CHECK(std::abs(ray.points[i]) < std::abs(ray.points[i - 1]));
  }
}

TEST_CASE("the 1/3 ray of the basilica lands at the alpha fixed point") {
  RayTrace ray = external_ray_trace(Cx(-0.75, 0), 1, 3, 1000000, 1);
  CHECK(ray.completed);
  CHECK(std::abs(ray.points.back() - Cx(-0.5, 0.0)) < 1e-3);
}

TEST_CASE("ray tracing validates its arguments") {
  CHECK_THROWS_AS(external_ray_trace(Cx(0, 0), 3, 3, 10, 1), DomainError);
  CHECK_THROWS_AS(external_ray_trace(Cx(0, 0), -1, 3, 10, 1), DomainError);
  CHECK_THROWS_AS(external_ray_trace(Cx(0, 0), 1, 3, 0, 1), DomainError);
  CHECK_THROWS_AS(external_ray_trace(Cx(0, 0), 1, 3, 10, 0), DomainError);
}

TEST_CASE("julia render is deterministic and classifies known points") {
  RasterImage a = julia_render(Cx(-1, 0), Cx(0, 0), 3.4, 80, 60, 300, 1);
  RasterImage b = julia_render(Cx(-1, 0), Cx(0, 0), 3.4, 80, 60, 300, 4);
  CHECK(a.pixels == b.pixels);

  // z = 0 is periodic for the basilica, z = 3 escapes immediately
  RasterImage inner = julia_render(Cx(-1, 0), Cx(0, 0), 0.01, 9, 9, 400, 1);
  CHECK(inner.pixels[4 * 9 + 4] == 0);
  RasterImage outer = julia_render(Cx(-1, 0), Cx(3, 0), 0.01, 9, 9, 400, 1);
  for (auto px : outer.pixels) CHECK(px == 255);
}

TEST_CASE("render classification is stable under resolution doubling") {
  RasterImage coarse = julia_render(Cx(-1, 0), Cx(0, 0), 3.4, 96, 96, 200, 1);
  RasterImage fine = julia_render(Cx(-1, 0), Cx(0, 0), 3.4, 192, 192, 200, 1);
  int disagree = 0;
  for (int i = 0; i < 96; ++i) {
    for (int j = 0; j < 96; ++j) {
      int interior_fine = 0;
      for (int di = 0; di < 2; ++di)
        for (int dj = 0; dj < 2; ++dj)
          if (fine.pixels[(2 * i + di) * 192 + (2 * j + dj)] == 0) ++interior_fine;
      bool coarse_interior = coarse.pixels[i * 96 + j] == 0;
      bool fine_interior = interior_fine >= 2;
      if (coarse_interior != fine_interior) ++disagree;
    }
  }
  CHECK(disagree <= 96 * 96 / 20);
}

TEST_CASE("molecule model facts") {
  MoleculeChecks checks = molecule_model_checks();
  CHECK(checks.critical_value_hits_fixed_point);
  CHECK(checks.fixed_point_multiplier == 1.0);
  CHECK(checks.critical_points[0] == Cx(-1.0, 0.0));
  CHECK(std::abs(checks.critical_points[1] - Cx(-1.0 / 3.0, 0.0)) < 1e-15);
  CHECK(checks.steps_to_small == 46);
  CHECK(checks.all_passed);
}

TEST_CASE("molecule render is reproducible") {
  RasterImage a = molecule_render(Cx(-0.4, 0.0), 3.2, 64, 64, 100, 1);
  RasterImage b = molecule_render(Cx(-0.4, 0.0), 3.2, 64, 64, 100, 2);
  CHECK(a.pixels == b.pixels);
  // the parabolic fixed point at 0 and both critical points are interior
  RasterImage probe = molecule_render(Cx(-0.5, 0.0), 1.2, 121, 121, 400, 1);
  auto shade_at = [&](double x, double y) {
    int col = static_cast<int>(std::lround((x + 0.5 + 0.6) / 1.2 * 121 - 0.5));
    int row = static_cast<int>(std::lround((0.6 - y - 0.0) / 1.2 * 121 - 0.5));
    return probe.pixels[row * 121 + col];
  };
  CHECK(shade_at(0.0, 0.0) == 0);
  CHECK(shade_at(-1.0, 0.0) == 0);
  CHECK(shade_at(-1.0 / 3.0, 0.0) == 0);
}

TEST_CASE("ppm serialization is byte deterministic") {
  RasterImage img = molecule_render(Cx(-0.4, 0.0), 3.2, 32, 24, 50, 1);
  std::ostringstream s1, s2;
  write_ppm(img, s1);
  write_ppm(img, s2);
  CHECK(s1.str() == s2.str());
  CHECK(s1.str().substr(0, 3) == "P6\n");
  CHECK(s1.str().size() == std::string("P6\n32 24\n255\n").size() + 32 * 24 * 3);
}
