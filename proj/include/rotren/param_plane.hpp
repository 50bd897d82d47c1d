#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "rotren/raster.hpp"
#include "rotren/rotation_number.hpp"

namespace rotren {

enum class Precision { standard, extended };

enum class ParamRole { generic, cardioid, root, center };

// A marked point in the parameter plane of z^2 + c. The role records how the
// point was produced; p/q are set for roots and centers, theta for cardioid
// points.
struct ParamPoint {
  std::complex<double> c;
  ParamRole role = ParamRole::generic;
  Precision precision = Precision::standard;
  double theta = 0.0;
  long long p = 0;
  long long q = 0;
};

// Boundary point of the main cardioid with internal angle theta:
// c = lambda/2 - lambda^2/4 where lambda = e^{2 pi i theta}.
ParamPoint cardioid_point(const RotationNumber& theta);

// Unit outward normal of the main cardioid at internal angle theta (in
// turns). Undefined at the cusp theta = 0.
std::complex<double> cardioid_normal(double theta);

// Root of the p/q satellite limb: the cardioid point at angle p/q.
// Requires 0 < p < q, gcd(p, q) = 1.
ParamPoint satellite_root(long long p, long long q);

// Center of the p/q satellite component, found by Newton iteration on
// c -> f_c^q(0). The seed, when not supplied, is the limb root pushed
// 4/q^2 along the outward cardioid normal. Throws NonConvergenceError if
// 200 damped steps fail to reach |f_c^q(0)| < 1e-13, and WrongPeriodError
// if the limit point is superattracting for a proper divisor of q.
ParamPoint satellite_center(long long p, long long q,
                            std::optional<std::complex<double>> seed = std::nullopt);

// Independent check for satellite_center: scans a grid of step 1e-3 over
// the disk of radius 8/q^2 around the limb root, takes the point minimizing
// |f_c^q(0)|, and polishes it with the same Newton iteration. Only feasible
// for q <= 12. Throws NonConvergenceError when no grid point gets below 0.1.
ParamPoint center_bruteforce(long long p, long long q);

// Multiplier of the period-q cycle of f_c through the periodic point found
// by Newton refinement of z_seed.
std::complex<double> multiplier_of_cycle(std::complex<double> c, long long q,
                                         std::complex<double> z_seed);

// Multiplier of the alpha fixed point of f_c, 1 - sqrt(1 - 4c) with the
// principal square root. Equals e^{2 pi i p/q} at the p/q limb root.
std::complex<double> fixed_point_multiplier(std::complex<double> c);

// One step along the boundary of the molecule: the renormalized angle
// together with the cardioid points before and after.
struct MoleculeBoundaryStep {
  RotationNumber theta_next;
  ParamPoint c;
  ParamPoint c_next;
};
MoleculeBoundaryStep molecule_boundary_step(const RotationNumber& theta);

// One satellite center approaching the cardioid point at theta, recorded
// with its rescaled distance. n is the 1-based index of the convergent
// p_n/q_n in the convergent stream, d = |c(theta) - a| the distance of the
// center a from the limit point, s = q_n^2 * d its rescaling.
struct ScalingRow {
  int n = 0;
  long long p = 0;
  long long q = 0;
  ApproachSide side = ApproachSide::left;
  std::complex<double> a;
  double d = 0.0;
  double s = 0.0;
};

struct ScalingTable {
  RotationNumber theta;
  std::vector<ScalingRow> rows;
  std::vector<std::string> row_errors;
};

// Centers of the satellite limbs at every convergent p_n/q_n of theta with
// q_n <= q_max, ordered by q_n. theta must be periodic under prime
// renormalization and q_max at least 5. Newton runs separately along the
// left and right approach chains, seeding each center by geometric
// extrapolation of the two previous same-side centers when available.
// Solver failures on individual rows are recorded in row_errors and skipped.
// threads caps the number of worker threads (the two side chains at most);
// the result does not depend on it.
ScalingTable scaling_table(const RotationNumber& theta, long long q_max, int threads = 1);

// CSV with header n,p,q,side,re_a,im_a,d,s; doubles use the shortest
// round-tripping decimal form.
std::string scaling_table_csv(const ScalingTable& table);

// Escape-time picture of the Mandelbrot set: z <- z^2 + c from z = 0,
// escape when |z| > 2. Deterministic for fixed inputs regardless of threads.
RasterImage mandelbrot_render(std::complex<double> center, double width, int px_width,
                              int px_height, int max_iter, int threads = 1);

}  // namespace rotren
