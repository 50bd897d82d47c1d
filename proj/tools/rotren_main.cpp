#include <complex>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotren/circle.hpp"
#include "rotren/dyn_plane.hpp"
#include "rotren/errors.hpp"
#include "rotren/format.hpp"
#include "rotren/param_plane.hpp"
#include "rotren/raster.hpp"
#include "rotren/rotation_number.hpp"
#include "rotren/words.hpp"

namespace {

using rotren::ParseError;
using Cx = std::complex<double>;

// "re,im" -> complex
Cx parse_complex(const std::string& s) {
  std::size_t comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("expected re,im: " + s);
  try {
    std::size_t used1 = 0, used2 = 0;
    double re = std::stod(s.substr(0, comma), &used1);
    double im = std::stod(s.substr(comma + 1), &used2);
    if (used1 != comma || used2 != s.size() - comma - 1) {
      throw ParseError("trailing characters in complex literal: " + s);
    }
    return {re, im};
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed complex literal: " + s);
  } catch (const std::out_of_range&) {
    throw ParseError("complex literal out of range: " + s);
  }
}

struct Window {
  Cx center;
  double width = 0.0;
};

// "cx,cy,w" -> window
Window parse_window(const std::string& s) {
  std::size_t c1 = s.find(',');
  std::size_t c2 = c1 == std::string::npos ? std::string::npos : s.find(',', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw ParseError("expected cx,cy,w: " + s);
  }
  try {
    Window win;
    win.center = {std::stod(s.substr(0, c1)), std::stod(s.substr(c1 + 1, c2 - c1 - 1))};
    win.width = std::stod(s.substr(c2 + 1));
    if (!(win.width > 0.0)) throw ParseError("window width must be positive: " + s);
    return win;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed window literal: " + s);
  } catch (const std::out_of_range&) {
    throw ParseError("window literal out of range: " + s);
  }
}

struct Resolution {
  int width = 0;
  int height = 0;
};

// "WxH" -> resolution
Resolution parse_resolution(const std::string& s) {
  std::size_t x = s.find('x');
  if (x == std::string::npos) throw ParseError("expected WxH: " + s);
  try {
    Resolution res;
    res.width = std::stoi(s.substr(0, x));
    res.height = std::stoi(s.substr(x + 1));
    if (res.width < 1 || res.height < 1) throw ParseError("resolution must be positive: " + s);
    return res;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed resolution: " + s);
  } catch (const std::out_of_range&) {
    throw ParseError("resolution out of range: " + s);
  }
}

// "p/q" -> angle fraction
std::pair<long long, long long> parse_angle(const std::string& s) {
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) throw ParseError("expected p/q: " + s);
  try {
    long long p = std::stoll(s.substr(0, slash));
    long long q = std::stoll(s.substr(slash + 1));
    if (q < 1 || p < 0 || p >= q) throw ParseError("angle must satisfy 0 <= p < q: " + s);
    return {p, q};
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed angle: " + s);
  } catch (const std::out_of_range&) {
    throw ParseError("angle out of range: " + s);
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rotren::DomainError("cannot open output file: " + path);
  out << content;
  out.flush();
  if (!out) throw rotren::DomainError("failed writing output file: " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact renormalization of rotation numbers and the scaling geometry around them"};
  app.require_subcommand(1);

  std::string theta_str, out_path, window_str = "-0.5,0,3.2", res_str = "640x480", c_str = "0,0",
                                    angle_str;
  long long steps = 10, qmax = 100, p = 0, q = 0, maxiter = 256;
  int threads = 0, depth = 48, substeps = 4;
  bool bruteforce = false, fast = false;

  auto* renorm = app.add_subcommand("renorm", "iterate the renormalization step on a rotation number");
  renorm->add_option("--theta", theta_str, "rotation number: p/q, [0;a1,(b1,...)] or 1-[0;...]")
      ->required();
  renorm->add_option("--steps", steps, "number of values to print, the input included")
      ->check(CLI::PositiveNumber);
  renorm->add_flag("--fast", fast, "take one accelerated step per line instead");
  renorm->callback([&] {
    rotren::RotationNumber theta = rotren::RotationNumber::parse(theta_str);
    std::string line;
    for (long long k = 0; k < steps; ++k) {
      if (k) line += ' ';
      line += theta.str();
      if (k + 1 < steps) {
        theta = fast ? rotren::fast_renormalize(theta) : rotren::prime_renormalize(theta);
      }
    }
    std::cout << line << "\n";
  });

  auto* seq = app.add_subcommand("seq", "rotation word and first-return times of p/q");
  seq->add_option("p", p, "numerator")->required();
  seq->add_option("q", q, "denominator")->required();
  seq->callback([&] {
    rotren::RotationWord word = rotren::RotationWord::build(p, q);
    std::string line;
    for (std::size_t i = 0; i < word.letters().size(); ++i) {
      if (i) line += ' ';
      line += static_cast<char>(word.letters()[i]);
    }
    rotren::ReturnTimes times = word.times();
    std::cout << line << "\n";
    std::cout << "(a,b)=(" << times.a << "," << times.b << ")\n";
  });

  auto* scale = app.add_subcommand("scale", "satellite-center scaling table along the convergents");
  scale->add_option("--theta", theta_str, "rotation number of periodic type")->required();
  scale->add_option("--qmax", qmax, "largest convergent denominator")->check(CLI::PositiveNumber);
  scale->add_option("--out", out_path, "CSV output path")->required();
  scale->add_option("--threads", threads, "worker thread cap (0 = all cores)");
  scale->callback([&] {
    rotren::ScalingTable table =
        rotren::scaling_table(rotren::RotationNumber::parse(theta_str), qmax,
                              threads == 0 ? 2 : threads);
    for (const std::string& err : table.row_errors) {
      std::cerr << "row skipped: " << err << "\n";
    }
    write_text_file(out_path, rotren::scaling_table_csv(table));
  });

  auto* centers = app.add_subcommand("centers", "superattracting center of the p/q satellite");
  centers->add_option("--p", p, "limb numerator")->required();
  centers->add_option("--q", q, "limb denominator")->required();
  centers->add_flag("--bruteforce", bruteforce, "use the grid search instead of Newton (q <= 12)");
  centers->callback([&] {
    rotren::ParamPoint pt =
        bruteforce ? rotren::center_bruteforce(p, q) : rotren::satellite_center(p, q);
    std::cout << rotren::format_double(pt.c.real()) << " " << rotren::format_double(pt.c.imag())
              << "\n";
  });

  auto* circle_stats =
      app.add_subcommand("circle-stats", "partition gap statistics along the convergents");
  circle_stats->add_option("--theta", theta_str, "rotation number")->required();
  circle_stats->add_option("--qmax", qmax, "largest convergent denominator")
      ->check(CLI::PositiveNumber);
  circle_stats->add_option("--out", out_path, "CSV output path")->required();
  circle_stats->callback([&] {
    rotren::RotationNumber theta = rotren::RotationNumber::parse(theta_str);
    std::string csv = "q,min_arc,max_arc,ratio\n";
    for (const rotren::Convergent& cv : rotren::convergents(theta, qmax)) {
      rotren::TriangulationStats stats = rotren::triangulation_stats(theta, cv.p, cv.q);
      csv += std::to_string(cv.q);
      csv += ',';
      csv += rotren::format_double(stats.min_arc);
      csv += ',';
      csv += rotren::format_double(stats.max_arc);
      csv += ',';
      csv += rotren::format_double(stats.ratio);
      csv += '\n';
    }
    write_text_file(out_path, csv);
  });

  auto add_render_options = [&](CLI::App* cmd) {
    cmd->add_option("--window", window_str, "complex window as cx,cy,w");
    cmd->add_option("--res", res_str, "resolution as WxH");
    cmd->add_option("--maxiter", maxiter, "iteration budget per pixel")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", out_path, "PPM output path")->required();
    cmd->add_option("--threads", threads, "worker thread cap (0 = all cores)");
  };

  auto* julia = app.add_subcommand("julia", "escape-time picture of the filled Julia set of z^2+c");
  julia->add_option("--c", c_str, "parameter as re,im");
  add_render_options(julia);
  julia->callback([&] {
    Window win = parse_window(window_str);
    Resolution res = parse_resolution(res_str);
    rotren::write_ppm_file(rotren::julia_render(parse_complex(c_str), win.center, win.width,
                                                res.width, res.height,
                                                static_cast<int>(maxiter), threads),
                           out_path);
  });

  auto* mandel = app.add_subcommand("mandel", "escape-time picture of the Mandelbrot set");
  add_render_options(mandel);
  mandel->callback([&] {
    Window win = parse_window(window_str);
    Resolution res = parse_resolution(res_str);
    rotren::write_ppm_file(rotren::mandelbrot_render(win.center, win.width, res.width, res.height,
                                                     static_cast<int>(maxiter), threads),
                           out_path);
  });

  auto* siegel = app.add_subcommand("siegel", "closest returns of the critical orbit at the convergents");
  siegel->add_option("--theta", theta_str, "rotation number of periodic type")->required();
  siegel->add_option("--qmax", qmax, "largest convergent denominator")->check(CLI::PositiveNumber);
  siegel->add_option("--out", out_path, "CSV output path")->required();
  siegel->callback([&] {
    rotren::ClosestReturnReport report =
        rotren::closest_returns(rotren::RotationNumber::parse(theta_str), qmax);
    write_text_file(out_path, rotren::closest_returns_csv(report));
  });

  auto* molecule =
      app.add_subcommand("molecule", "escape-time picture of the cubic model map z(z+1)^2");
  add_render_options(molecule);
  molecule->callback([&] {
    Window win = parse_window(window_str);
    Resolution res = parse_resolution(res_str);
    rotren::write_ppm_file(rotren::molecule_render(win.center, win.width, res.width, res.height,
                                                   static_cast<int>(maxiter), threads),
                           out_path);
  });

  auto* rays = app.add_subcommand("rays", "external ray of z^2+c at a rational angle");
  rays->add_option("--c", c_str, "parameter as re,im");
  rays->add_option("--angle", angle_str, "angle in turns as p/q")->required();
  rays->add_option("--depth", depth, "number of potential halvings")->check(CLI::PositiveNumber);
  rays->add_option("--substeps", substeps, "points per halving")->check(CLI::PositiveNumber);
  rays->add_option("--out", out_path, "polyline output path, one re im pair per line")->required();
  rays->callback([&] {
    auto [ap, aq] = parse_angle(angle_str);
    rotren::RayTrace trace =
        rotren::external_ray_trace(parse_complex(c_str), ap, aq, depth, substeps);
    std::string text;
    for (Cx z : trace.points) {
      text += rotren::format_double(z.real());
      text += ' ';
      text += rotren::format_double(z.imag());
      text += '\n';
    }
    write_text_file(out_path, text);
    if (!trace.completed) {
      throw rotren::NonConvergenceError(
          "ray pullback broke down; " + out_path + " holds the trace up to the last good point");
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "E_USAGE: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rotren::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "E_INTERNAL: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
