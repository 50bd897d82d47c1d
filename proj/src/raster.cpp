#include "rotren/raster.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "rotren/errors.hpp"

namespace rotren {

RasterImage make_raster(int width, int height, std::complex<double> center, double window_width) {
  if (width < 1 || height < 1) throw DomainError("raster resolution must be at least 1x1");
  if (!(window_width > 0.0)) throw DomainError("raster window width must be positive");
  RasterImage img;
  img.width = width;
  img.height = height;
  img.window_center = center;
  img.window_width = window_width;
  img.pixels.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
  return img;
}

std::complex<double> pixel_point(const RasterImage& img, int row, int col) {
  double h = img.window_width * static_cast<double>(img.height) / static_cast<double>(img.width);
  double re = img.window_center.real() +
              ((static_cast<double>(col) + 0.5) / static_cast<double>(img.width) - 0.5) * img.window_width;
  double im = img.window_center.imag() +
              (0.5 - (static_cast<double>(row) + 0.5) / static_cast<double>(img.height)) * h;
  return {re, im};
}

std::uint8_t escape_shade(long long iter, long long max_iter) {
  if (iter < 0) return 0;
  if (iter > max_iter) iter = max_iter;
  return static_cast<std::uint8_t>(55 + (200 * (max_iter - iter)) / max_iter);
}

void write_ppm(const RasterImage& img, std::ostream& out) {
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  for (std::uint8_t g : img.pixels) {
    char c = static_cast<char>(g);
    out.write(&c, 1);
    out.write(&c, 1);
    out.write(&c, 1);
  }
}

void write_ppm_file(const RasterImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file: " + path);
  write_ppm(img, out);
  out.flush();
  if (!out) throw DomainError("failed writing output file: " + path);
}

}  // namespace rotren
