#include "rotren/dyn_plane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "rotren/errors.hpp"
#include "rotren/format.hpp"
#include "rotren/parallel.hpp"

namespace rotren {

namespace {

using Cx = std::complex<double>;

constexpr double kGreenEscape = 1e8;

Cx molecule_map(Cx z) { return z * (z + 1.0) * (z + 1.0); }

}  // namespace

CriticalOrbit siegel_critical_orbit(const RotationNumber& theta, long long n) {
  if (n < 1) throw DomainError("orbit length must be positive");
  Cx lambda = std::polar(1.0, 2.0 * std::numbers::pi * theta.value());
  Cx z = -lambda / 2.0;
  CriticalOrbit orbit;
  orbit.points.reserve(static_cast<std::size_t>(n));
  for (long long k = 0; k < n; ++k) {
    orbit.points.push_back(z);
    if (std::norm(z) > 4.0) orbit.bounded = false;
    z = lambda * z + z * z;
  }
  return orbit;
}

ClosestReturnReport closest_returns(const RotationNumber& theta, long long q_max) {
  if (q_max < 5) throw DomainError("q_max must be at least 5");
  OrbitSignature sig = orbit_signature(theta);
  if (sig.kind != OrbitSignature::Kind::periodic || sig.preperiod != 0) {
    throw DomainError("closest returns require a rotation number of periodic type");
  }

  ClosestReturnReport report;
  report.theta = theta;
  report.period = sig.period;

  std::vector<Convergent> conv = convergents(theta, q_max);
  if (conv.empty()) return report;

  Cx lambda = std::polar(1.0, 2.0 * std::numbers::pi * theta.value());
  Cx start = -lambda / 2.0;
  Cx z = start;
  long long q_top = conv.back().q;
  std::size_t next = 0;
  for (long long k = 1; k <= q_top; ++k) {
    z = lambda * z + z * z;
    if (std::norm(z) > 4.0) {
      throw DomainError("critical orbit left |z| <= 2 at step " + std::to_string(k) +
                        "; the rotation number is not of bounded type at working precision");
    }
    while (next < conv.size() && conv[next].q == k) {
      report.rows.push_back({k, std::abs(z - start)});
      ++next;
    }
  }

  int period = report.period;
  if (static_cast<int>(report.rows.size()) > period) {
    for (std::size_t k = 0; k + period < report.rows.size(); ++k) {
      report.ratio_estimates.push_back(report.rows[k + period].dist / report.rows[k].dist);
    }
  }
  return report;
}

std::string closest_returns_csv(const ClosestReturnReport& report) {
  std::string out = "q,dist,ratio\n";
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    out += std::to_string(report.rows[k].q);
    out += ',';
    out += format_double(report.rows[k].dist);
    out += ',';
    if (static_cast<int>(k) >= report.period) {
      out += format_double(report.ratio_estimates[k - report.period]);
    }
    out += '\n';
  }
  return out;
}

RasterImage julia_render(std::complex<double> c, std::complex<double> center, double width,
                         int px_width, int px_height, int max_iter, int threads) {
  if (max_iter < 1) throw DomainError("max_iter must be at least 1");
  RasterImage img = make_raster(px_width, px_height, center, width);
  parallel_for_rows(px_height, threads, [&](int row) {
    std::uint8_t* line = img.pixels.data() + static_cast<std::size_t>(row) * img.width;
    for (int col = 0; col < img.width; ++col) {
      Cx z = pixel_point(img, row, col);
      long long escaped = -1;
      for (int k = 0; k < max_iter; ++k) {
        if (std::norm(z) > 4.0) {
          escaped = k;
          break;
        }
        z = z * z + c;
      }
      line[col] = escape_shade(escaped, max_iter);
    }
  });
  return img;
}

double green_potential(std::complex<double> c, std::complex<double> z, int n_terms) {
  if (n_terms < 8) throw DomainError("n_terms must be at least 8");
  double scale = 1.0;
  for (int k = 0; k < n_terms; ++k) {
    double mag = std::abs(z);
    if (mag >= kGreenEscape) return scale * std::log(mag);
    z = z * z + c;
    scale *= 0.5;
  }
  double mag = std::abs(z);
  if (mag >= kGreenEscape) return scale * std::log(mag);
  return 0.0;
}

RayTrace external_ray_trace(std::complex<double> c, long long angle_p, long long angle_q,
                            int depth, int steps_per_level) {
  if (angle_q < 1 || angle_p < 0 || angle_p >= angle_q) {
    throw DomainError("ray angle must satisfy 0 <= p < q");
  }
  if (depth < 1) throw DomainError("depth must be at least 1");
  if (steps_per_level < 1) throw DomainError("steps_per_level must be at least 1");
  long long g = std::gcd(angle_p, angle_q);
  if (g > 1) {
    angle_p /= g;
    angle_q /= g;
  }

  // Forward orbit of the angle under doubling; angle_q odd or even both end
  // in a cycle, and the full orbit is what the simultaneous pullback tracks.
  std::vector<long long> orbit_p;
  std::vector<std::size_t> succ;
  {
    std::vector<long long> seen;
    long long a = angle_p;
    while (true) {
      auto it = std::find(seen.begin(), seen.end(), a);
      if (it != seen.end()) {
        for (std::size_t i = 0; i + 1 < seen.size(); ++i) succ.push_back(i + 1);
        succ.push_back(static_cast<std::size_t>(it - seen.begin()));
        break;
      }
      seen.push_back(a);
      a = (2 * a) % angle_q;
    }
    orbit_p = std::move(seen);
  }

  const int n_sub = steps_per_level;
  const double g0 = std::log(64.0);
  const std::size_t n_angles = orbit_p.size();

  auto circle_point = [&](std::size_t idx, int sub) {
    double potential = g0 * std::pow(2.0, -static_cast<double>(sub) / n_sub);
    double arg = 2.0 * std::numbers::pi * static_cast<double>(orbit_p[idx]) /
                 static_cast<double>(angle_q);
    return std::polar(std::exp(potential), arg);
  };

  std::vector<std::vector<Cx>> level(n_angles, std::vector<Cx>(n_sub));
  for (std::size_t i = 0; i < n_angles; ++i)
    for (int j = 0; j < n_sub; ++j) level[i][j] = circle_point(i, j);

  RayTrace trace;
  trace.points.reserve(static_cast<std::size_t>(depth + 1) * n_sub);
  for (int j = 0; j < n_sub; ++j) trace.points.push_back(level[0][j]);

  // Each new level solves z^2 + c = w where w is the previous-level point of
  // the doubled angle, seeding Newton from the nearest ray point just above.
  std::vector<std::vector<Cx>> next_level(n_angles, std::vector<Cx>(n_sub));
  for (int lev = 1; lev <= depth; ++lev) {
    for (std::size_t i = 0; i < n_angles; ++i) {
      for (int j = 0; j < n_sub; ++j) {
        Cx w = level[succ[i]][j];
        Cx z = (j == 0) ? level[i][n_sub - 1] : next_level[i][j - 1];
        Cx f = z * z + c - w;
        for (int it = 0; it < 12; ++it) {
          if (!(std::abs(z) > 1e-300)) break;
          Cx step = f / (2.0 * z);
          Cx z_new = z - step;
          Cx f_new = z_new * z_new + c - w;
          for (int h = 0; h < 6 && std::abs(f_new) > std::abs(f); ++h) {
            step *= 0.5;
            z_new = z - step;
            f_new = z_new * z_new + c - w;
          }
          z = z_new;
          f = f_new;
        }
        if (!(std::abs(f) < 1e-9 * (1.0 + std::abs(w)))) {
          trace.completed = false;
          return trace;
        }
        next_level[i][j] = z;
      }
    }
    level.swap(next_level);
    for (int j = 0; j < n_sub; ++j) trace.points.push_back(level[0][j]);
  }
  trace.completed = true;
  return trace;
}

RasterImage molecule_render(std::complex<double> center, double width, int px_width,
                            int px_height, int max_iter, int threads) {
  if (max_iter < 1) throw DomainError("max_iter must be at least 1");
  RasterImage img = make_raster(px_width, px_height, center, width);
  parallel_for_rows(px_height, threads, [&](int row) {
    std::uint8_t* line = img.pixels.data() + static_cast<std::size_t>(row) * img.width;
    for (int col = 0; col < img.width; ++col) {
      Cx z = pixel_point(img, row, col);
      long long escaped = -1;
      for (int k = 0; k < max_iter; ++k) {
        if (std::norm(z) > 16.0) {
          escaped = k;
          break;
        }
        z = molecule_map(z);
      }
      line[col] = escape_shade(escaped, max_iter);
    }
  });
  return img;
}

MoleculeChecks molecule_model_checks() {
  MoleculeChecks checks;
  checks.critical_value_hits_fixed_point = molecule_map(Cx(-1.0, 0.0)) == Cx(0.0, 0.0);
  // Q'(z) = (z+1)(3z+1), with roots -1 and -1/3.
  auto derivative = [](Cx z) { return (z + 1.0) * (3.0 * z + 1.0); };
  checks.fixed_point_multiplier = derivative(Cx(0.0, 0.0)).real();
  checks.critical_points[0] = Cx(-1.0, 0.0);
  checks.critical_points[1] = Cx(-1.0 / 3.0, 0.0);

  Cx z(-1.0 / 3.0, 0.0);
  for (long long n = 1; n <= 10000; ++n) {
    z = molecule_map(z);
    if (std::abs(z) < 1e-2) {
      checks.steps_to_small = n;
      break;
    }
  }
  checks.all_passed = checks.critical_value_hits_fixed_point &&
                      checks.fixed_point_multiplier == 1.0 && checks.steps_to_small > 0;
  return checks;
}

}  // namespace rotren
