#include "rotren/param_plane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <thread>
#include <utility>

#include "rotren/errors.hpp"
#include "rotren/format.hpp"
#include "rotren/parallel.hpp"

namespace rotren {

namespace {

using Cx = std::complex<double>;
using Cxl = std::complex<long double>;

constexpr long double kCenterTol = 1e-13L;
constexpr double kDivisorTol = 1e-6;
constexpr int kNewtonBudget = 200;

void require_limb(long long p, long long q) {
  if (q < 2 || p < 1 || p >= q) throw DomainError("limb fraction must satisfy 0 < p < q, q >= 2");
  if (std::gcd(p, q) != 1) throw DomainError("limb fraction must be in lowest terms");
}

// f_c^q(0) together with its derivative in c. Extended precision: near the
// centers of high-period satellites the derivative reaches ~1/component-size
// (1e5 and beyond), and the double rounding floor of the critical value
// would sit far above the 1e-13 convergence target.
std::pair<Cxl, Cxl> critical_value(Cxl c, long long q) {
  Cxl z = 0.0L, dz = 0.0L;
  for (long long k = 0; k < q; ++k) {
    dz = 2.0L * z * dz + 1.0L;
    z = z * z + c;
  }
  return {z, dz};
}

Cx iterate_critical(Cx c, long long n) {
  Cx z = 0.0;
  for (long long k = 0; k < n; ++k) z = z * z + c;
  return z;
}

// Damped Newton iteration on c -> f_c^q(0). Returns the superattracting
// parameter, or throws NonConvergenceError.
Cx newton_center(Cx seed, long long q) {
  Cxl c(seed);
  auto narrowed = [](Cxl z) {
    return Cx(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  };
  std::pair<Cxl, Cxl> fd = critical_value(c, q);
  for (int it = 0; it < kNewtonBudget; ++it) {
    if (std::abs(fd.first) < kCenterTol) return narrowed(c);
    if (!(std::abs(fd.second) > 0.0L)) {
      throw NonConvergenceError("critical-orbit derivative vanished during center search");
    }
    Cxl step = fd.first / fd.second;
    long double scale = 1.0L;
    Cxl next = c - step;
    std::pair<Cxl, Cxl> fd_next = critical_value(next, q);
    for (int halvings = 0; halvings < 8 && std::abs(fd_next.first) > std::abs(fd.first);
         ++halvings) {
      scale *= 0.5L;
      next = c - scale * step;
      fd_next = critical_value(next, q);
    }
    c = next;
    fd = fd_next;
  }
  if (std::abs(fd.first) < kCenterTol) return narrowed(c);
  throw NonConvergenceError("center iteration did not reach |f_c^q(0)| < 1e-13 in 200 steps");
}

// Rejects parameters that are superattracting already for a proper divisor
// of q.
void check_exact_period(Cx c, long long q) {
  for (long long d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    if (std::abs(iterate_critical(c, d)) < kDivisorTol) {
      throw WrongPeriodError("center has period " + std::to_string(d) +
                                 " dividing the requested " + std::to_string(q),
                             d);
    }
  }
}

ParamPoint make_center_point(Cx c, long long p, long long q) {
  ParamPoint pt;
  pt.c = c;
  pt.role = ParamRole::center;
  pt.theta = static_cast<double>(p) / static_cast<double>(q);
  pt.p = p;
  pt.q = q;
  return pt;
}

const char* side_name(ApproachSide s) { return s == ApproachSide::left ? "left" : "right"; }

}  // namespace

ParamPoint cardioid_point(const RotationNumber& theta) {
  double t = theta.value();
  Cx lambda = std::polar(1.0, 2.0 * std::numbers::pi * t);
  ParamPoint pt;
  pt.c = lambda / 2.0 - lambda * lambda / 4.0;
  pt.role = ParamRole::cardioid;
  pt.theta = t;
  return pt;
}

std::complex<double> cardioid_normal(double theta) {
  Cx lambda = std::polar(1.0, 2.0 * std::numbers::pi * theta);
  Cx deriv = Cx(0.0, std::numbers::pi) * lambda * (1.0 - lambda);
  double mag = std::abs(deriv);
  if (!(mag > 0.0)) throw DomainError("cardioid normal is undefined at the cusp");
  return deriv * Cx(0.0, -1.0) / mag;
}

ParamPoint satellite_root(long long p, long long q) {
  require_limb(p, q);
  ParamPoint pt = cardioid_point(RotationNumber::rational(p, q));
  pt.role = ParamRole::root;
  pt.p = p;
  pt.q = q;
  return pt;
}

ParamPoint satellite_center(long long p, long long q, std::optional<std::complex<double>> seed) {
  require_limb(p, q);
  Cx start;
  if (seed) {
    start = *seed;
  } else {
    double t = static_cast<double>(p) / static_cast<double>(q);
    start = satellite_root(p, q).c + (4.0 / (static_cast<double>(q) * q)) * cardioid_normal(t);
  }
  Cx c = newton_center(start, q);
  check_exact_period(c, q);
  return make_center_point(c, p, q);
}

ParamPoint center_bruteforce(long long p, long long q) {
  require_limb(p, q);
  if (q > 12) throw DomainError("grid search is only feasible for q <= 12");
  Cx root = satellite_root(p, q).c;
  double radius = 8.0 / (static_cast<double>(q) * q);
  double step = 1e-3;
  long long half = static_cast<long long>(std::ceil(radius / step));

  double best = 1e300;
  Cx best_c = root;
  for (long long i = -half; i <= half; ++i) {
    double y = static_cast<double>(i) * step;
    for (long long j = -half; j <= half; ++j) {
      double x = static_cast<double>(j) * step;
      if (x * x + y * y > radius * radius) continue;
      Cx c = root + Cx(x, y);
      Cx z = 0.0;
      bool lower_period = false;
      for (long long k = 0; k < q; ++k) {
        z = z * z + c;
        if (k + 1 < q && q % (k + 1) == 0 && std::abs(z) < 0.05) {
          lower_period = true;
          break;
        }
      }
      if (lower_period) continue;
      double v = std::abs(z);
      if (v < best) {
        best = v;
        best_c = c;
      }
    }
  }
  if (best >= 0.1) {
    throw NonConvergenceError("no grid point in the 8/q^2 disk brought |f_c^q(0)| below 0.1");
  }
  Cx c = newton_center(best_c, q);
  check_exact_period(c, q);
  return make_center_point(c, p, q);
}

std::complex<double> multiplier_of_cycle(std::complex<double> c, long long q,
                                         std::complex<double> z_seed) {
  if (q < 1) throw DomainError("cycle period must be positive");
  Cx z = z_seed;
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    Cx w = z, dw = 1.0;
    for (long long k = 0; k < q; ++k) {
      dw = 2.0 * w * dw;
      w = w * w + c;
    }
    Cx g = w - z;
    if (std::abs(g) < 1e-12) {
      converged = true;
      break;
    }
    Cx dg = dw - 1.0;
    if (!(std::abs(dg) > 1e-18)) {
      throw NonConvergenceError("periodic-point Newton hit a critical derivative");
    }
    z -= g / dg;
  }
  if (!converged) {
    throw NonConvergenceError("periodic-point refinement did not converge in 100 steps");
  }
  Cx mult = 1.0, w = z;
  for (long long k = 0; k < q; ++k) {
    mult *= 2.0 * w;
    w = w * w + c;
  }
  return mult;
}

std::complex<double> fixed_point_multiplier(std::complex<double> c) {
  return 1.0 - std::sqrt(Cx(1.0, 0.0) - 4.0 * c);
}

MoleculeBoundaryStep molecule_boundary_step(const RotationNumber& theta) {
  MoleculeBoundaryStep step{prime_renormalize(theta), cardioid_point(theta), ParamPoint{}};
  step.c_next = cardioid_point(step.theta_next);
  return step;
}

ScalingTable scaling_table(const RotationNumber& theta, long long q_max, int threads) {
  if (q_max < 5) throw DomainError("q_max must be at least 5");
  OrbitSignature sig = orbit_signature(theta);
  if (sig.kind != OrbitSignature::Kind::periodic || sig.preperiod != 0) {
    throw DomainError("scaling table requires a rotation number of periodic type");
  }

  std::vector<Convergent> conv = convergents(theta, q_max);
  Cx limit = cardioid_point(theta).c;

  struct Item {
    int n;
    Convergent cv;
  };
  std::vector<Item> by_side[2];
  for (std::size_t i = 0; i < conv.size(); ++i) {
    int s = conv[i].side == ApproachSide::left ? 0 : 1;
    by_side[s].push_back({static_cast<int>(i) + 1, conv[i]});
  }

  struct Partial {
    std::vector<ScalingRow> rows;
    std::vector<std::pair<int, std::string>> errors;
  };
  Partial parts[2];

  auto run_chain = [&](int s) {
    std::vector<Cx> history;
    for (const Item& item : by_side[s]) {
      std::optional<Cx> seed;
      if (history.size() >= 2) {
        Cx a0 = history[history.size() - 2], a1 = history.back();
        Cx r = (a1 - limit) / (a0 - limit);
        seed = limit + (a1 - limit) * r;
      }
      try {
        ParamPoint center = satellite_center(item.cv.p, item.cv.q, seed);
        ScalingRow row;
        row.n = item.n;
        row.p = item.cv.p;
        row.q = item.cv.q;
        row.side = item.cv.side;
        row.a = center.c;
        row.d = std::abs(limit - center.c);
        row.s = static_cast<double>(item.cv.q) * static_cast<double>(item.cv.q) * row.d;
        parts[s].rows.push_back(row);
        history.push_back(center.c);
      } catch (const Error& e) {
        parts[s].errors.emplace_back(item.n, std::to_string(item.cv.p) + "/" +
                                                 std::to_string(item.cv.q) + ": " + e.what());
      }
    }
  };

  if (threads >= 2) {
    std::thread worker([&] { run_chain(0); });
    run_chain(1);
    worker.join();
  } else {
    run_chain(0);
    run_chain(1);
  }

  ScalingTable table;
  table.theta = theta;
  table.rows.reserve(parts[0].rows.size() + parts[1].rows.size());
  for (int s = 0; s < 2; ++s)
    table.rows.insert(table.rows.end(), parts[s].rows.begin(), parts[s].rows.end());
  std::sort(table.rows.begin(), table.rows.end(),
            [](const ScalingRow& a, const ScalingRow& b) { return a.n < b.n; });
  std::vector<std::pair<int, std::string>> errs;
  for (int s = 0; s < 2; ++s) errs.insert(errs.end(), parts[s].errors.begin(), parts[s].errors.end());
  std::sort(errs.begin(), errs.end());
  for (auto& [n, msg] : errs) table.row_errors.push_back(std::move(msg));
  return table;
}

std::string scaling_table_csv(const ScalingTable& table) {
  std::string out = "n,p,q,side,re_a,im_a,d,s\n";
  for (const ScalingRow& row : table.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.p);
    out += ',';
    out += std::to_string(row.q);
    out += ',';
    out += side_name(row.side);
    out += ',';
    out += format_double(row.a.real());
    out += ',';
    out += format_double(row.a.imag());
    out += ',';
    out += format_double(row.d);
    out += ',';
    out += format_double(row.s);
    out += '\n';
  }
  return out;
}

RasterImage mandelbrot_render(std::complex<double> center, double width, int px_width,
                              int px_height, int max_iter, int threads) {
  if (max_iter < 1) throw DomainError("max_iter must be at least 1");
  RasterImage img = make_raster(px_width, px_height, center, width);
  parallel_for_rows(px_height, threads, [&](int row) {
    std::uint8_t* line = img.pixels.data() + static_cast<std::size_t>(row) * img.width;
    for (int col = 0; col < img.width; ++col) {
      Cx c = pixel_point(img, row, col);
      Cx z = 0.0;
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

}  // namespace rotren
