#pragma once

#include <vector>

#include "rotren/rotation_number.hpp"

namespace rotren {

// Half-open arc [start, start + length) on the unit circle R/Z.
// 0 <= start < 1 and 0 < length <= 1.
struct Arc {
  double start = 0.0;
  double length = 1.0;
};

// One branch of a first-return decomposition: the subarc of points that
// come back to the sector after exactly `time` rotation steps.
struct ReturnBranch {
  Arc arc;
  long long time = 0;
};

// First-return decomposition of a sector under the rotation.
//
// times (a, b) are reported orientation-free as (shorter, longer). When the
// sector is a fundamental sector they are consecutive. A sector whose scan
// produces a single branch (theta = 1/m or 1 - 1/m at its fundamental
// sector) is reported with degenerate = true, branch time T and the formal
// pair (T-1, T): the zero-width branch sits on the boundary ray.
//
// For rational p/q the mod-q return pair of the q-cycle, which follows a
// different ordering convention, is reported alongside in `congruence`.
struct FirstReturnData {
  Arc sector;
  std::vector<ReturnBranch> branches;  // ordered by position within the sector
  long long a = 0;
  long long b = 0;
  double cut = 0.0;  // absolute angle of the interior division point
  bool degenerate = false;
  bool has_congruence = false;
  ReturnTimes congruence{};
};

// Combinatorially extracted rotation number of the first-return map to the
// fundamental sector. If the return orbit of the sector start closes after m
// steps with k wraps, `value` is exactly k/m; otherwise it is the winding
// estimate w/m over m = q_probe steps. Either way the true rotation number
// of the return map lies within 1/m of `value`.
struct InducedRotation {
  RotationNumber value;
  long long sample_points = 0;  // m
};

// Extreme gap lengths of the circle partition by an orbit segment.
struct TriangulationStats {
  double min_arc = 0.0;
  double max_arc = 0.0;
  double ratio = 1.0;
  int distinct_gaps = 0;
};

// Return-time row along the convergents of theta.
struct ReturnGrowthRow {
  int n = 0;  // 1-based row index
  long long p = 0, q = 0;
  long long a = 0, b = 0;
};

struct ReturnTimeGrowth {
  std::vector<ReturnGrowthRow> rows;
  // slope of log a_n (resp. log b_n) per row over the last rows;
  // NaN when fewer than 6 rows are available
  double exponent_a = 0.0;
  double exponent_b = 0.0;
};

// First n orbit points {x0 + k*theta mod 1}, k = 0..n-1. Exact integer
// arithmetic drives the rational case; doubles otherwise.
std::vector<double> rotation_orbit(const RotationNumber& theta, long long n, double x0 = 0.0);

// The smallest closed sector bounded by the rays at angles 0 and theta,
// returned as a half-open arc: [0, theta) for theta <= 1/2, else [theta, 1).
Arc fundamental_sector(const RotationNumber& theta);

// Exhaustive branch decomposition of the first-return map of the rotation to
// `sector`. Fails with a diagnostic listing the branch times if more than
// two distinct return times show up (generic arcs can produce three). For
// rational theta an arc on the 1/q lattice is scanned exactly in lattice
// units; other arcs use the floating-point scan.
FirstReturnData first_return(const RotationNumber& theta, const Arc& sector);

// Oracle for the step count of the fast renormalization: iterates the
// first-return map on the fundamental sector from the sector start and reads
// the rotation number off the winding of the return orbit. Throws
// InconclusiveError if the orbit escapes the branch decomposition (a float
// breakdown, not a math one).
InducedRotation induced_rotation_number(const RotationNumber& theta, long long q_probe);

// Gap statistics of the partition of the circle by {k*theta mod 1, k < q}.
// p/q must be a convergent of theta (or theta itself when rational).
TriangulationStats triangulation_stats(const RotationNumber& theta, long long p, long long q);

// Return-time rows along convergents with q_n >= 3, up to n_max rows.
// Requires theta to be eventually periodic under renormalization (any
// quadratic is); rationals are rejected.
ReturnTimeGrowth return_time_growth(const RotationNumber& theta, int n_max);

}  // namespace rotren
