#pragma once

#include <complex>
#include <string>
#include <vector>

#include "rotren/raster.hpp"
#include "rotren/rotation_number.hpp"

namespace rotren {

// Orbit of the critical point of p(z) = e^{2 pi i theta} z + z^2, whose
// critical point is -e^{2 pi i theta}/2. points[k] is the k-th iterate of
// the critical point (points[0] is the critical point itself), and bounded
// reports whether the whole orbit stayed inside |z| <= 2.
struct CriticalOrbit {
  std::vector<std::complex<double>> points;
  bool bounded = true;
};
CriticalOrbit siegel_critical_orbit(const RotationNumber& theta, long long n);

// Distance of the critical orbit from its starting point at the convergent
// denominators of theta, with ratio estimates across one renormalization
// period: ratio_estimates[k] = rows[k + period].dist / rows[k].dist.
struct ClosestReturnRow {
  long long q = 0;
  double dist = 0.0;
};

struct ClosestReturnReport {
  RotationNumber theta;
  int period = 0;
  std::vector<ClosestReturnRow> rows;
  std::vector<double> ratio_estimates;
};

// theta must be of periodic type under prime renormalization; the orbit is
// followed up to the largest convergent denominator <= q_max and must stay
// inside |z| <= 2 throughout.
ClosestReturnReport closest_returns(const RotationNumber& theta, long long q_max);

// CSV with header q,dist,ratio. The ratio column holds dist_k / dist_{k-period}
// (empty for the first `period` rows).
std::string closest_returns_csv(const ClosestReturnReport& report);

// Escape-time picture of the filled Julia set of z^2 + c with bailout
// radius 2.
RasterImage julia_render(std::complex<double> c, std::complex<double> center, double width,
                         int px_width, int px_height, int max_iter, int threads = 1);

// Green's function of the complement of the filled Julia set of z^2 + c,
// computed as 2^{-k} log|f^k(z)| at the first iterate beyond the escape
// radius. Returns 0 when the orbit has not escaped after n_terms iterates.
// n_terms must be at least 8.
double green_potential(std::complex<double> c, std::complex<double> z, int n_terms);

// External ray of angle p/q (turns) for z^2 + c, traced by iterated
// pullback from the circle of radius 64 through `depth` halvings of the
// potential, with steps_per_level intermediate points per halving. Each
// pullback point is refined by 12 Newton steps seeded from the nearest
// already-computed ray point; a step that stops contracting is retried at
// half length. points runs from the outer end inward; completed is false
// when Newton broke down, in which case points holds the good prefix.
struct RayTrace {
  std::vector<std::complex<double>> points;
  bool completed = false;
};
RayTrace external_ray_trace(std::complex<double> c, long long angle_p, long long angle_q,
                            int depth, int steps_per_level);

// Escape-time picture for the cubic model map Q(z) = z(z+1)^2 with bailout
// radius 4.
RasterImage molecule_render(std::complex<double> center, double width, int px_width,
                            int px_height, int max_iter, int threads = 1);

// Structural facts about Q(z) = z(z+1)^2: the free critical value lands on
// the parabolic fixed point, the fixed point has multiplier one, and the
// orbit of the free critical point -1/3 converges to it.
struct MoleculeChecks {
  bool critical_value_hits_fixed_point = false;
  double fixed_point_multiplier = 0.0;
  std::complex<double> critical_points[2];
  long long steps_to_small = -1;  // first n with |Q^n(-1/3)| < 1e-2, -1 if never
  bool all_passed = false;
};
MoleculeChecks molecule_model_checks();

}  // namespace rotren
