#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rotren {

// 8-bit grayscale raster over an axis-aligned window of the complex plane.
// Pixels are row-major with the top row first; the window is described by
// its center and width, the height following from the aspect ratio.
struct RasterImage {
  int width = 0;
  int height = 0;
  std::complex<double> window_center;
  double window_width = 0.0;
  std::vector<std::uint8_t> pixels;
};

RasterImage make_raster(int width, int height, std::complex<double> center, double window_width);

// Complex coordinate of the pixel center at (row, col), rows counted from
// the top. Column j covers re = cx + ((j+0.5)/W - 0.5)*width and row i
// covers im = cy + (0.5 - (i+0.5)/H)*height with height = width*H/W.
std::complex<double> pixel_point(const RasterImage& img, int row, int col);

// Shade for a pixel that escaped after `iter` steps (0-based), or stayed
// bounded for the whole budget (iter < 0): interior pixels are black, and
// escaping ones ramp from 255 (instant escape) down to 55.
std::uint8_t escape_shade(long long iter, long long max_iter);

// Binary PPM (P6), maxval 255, gray replicated across the three channels.
// Byte-deterministic for a given raster.
void write_ppm(const RasterImage& img, std::ostream& out);
void write_ppm_file(const RasterImage& img, const std::string& path);

}  // namespace rotren
