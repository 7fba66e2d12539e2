// Copyright 2026 The conetomo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "conetomo/radon.hpp"

#include <algorithm>
#include <complex>
#include <vector>

#include "fft.hpp"

namespace conetomo {

namespace {

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Linear interpolation of a projection row at offset s.
double interp_row(std::span<const double> row, const RadonLattice& lat,
                  double s) {
  const double pos = (s + lat.s_max) / lat.ds();
  if (pos < 0.0 || pos > lat.n_s - 1) return 0.0;
  int i = static_cast<int>(pos);
  if (i >= lat.n_s - 1) i = lat.n_s - 2;
  const double w = pos - i;
  return (1.0 - w) * row[i] + w * row[i + 1];
}

// Frequency response of the band-limited ramp on a circular lattice of
// length n with spacing ds, angular-frequency normalization.
std::vector<double> ramp_response(int n, double ds, double taper_fraction) {
  std::vector<double> kernel(n, 0.0);
  kernel[0] = 1.0 / (4.0 * ds * ds);
  for (int k = 1; k < n; ++k) {
    const int lag = k <= n / 2 ? k : k - n;
    if (lag % 2 != 0) {
      kernel[k] = -1.0 / (kPi * kPi * double(lag) * lag * ds * ds);
    }
  }
  detail::RealFft1d fft(n);
  std::vector<std::complex<double>> spectrum(fft.spectrum_size());
  fft.forward(kernel, spectrum);

  std::vector<double> response(fft.spectrum_size());
  const double half = n / 2;
  const double knee = 1.0 - taper_fraction;
  for (int m = 0; m < fft.spectrum_size(); ++m) {
    const double frac = m / half;
    double window = 1.0;
    if (taper_fraction > 0.0 && frac > knee) {
      window = 0.5 * (1.0 + std::cos(kPi * (frac - knee) / taper_fraction));
    }
    // Kernel above is in cycles; angular frequency carries 2 pi.
    response[m] = kTwoPi * spectrum[m].real() * window;
  }
  return response;
}

}  // namespace

double bilinear_sample(const ImageGrid& image, Vec2 x) {
  const GridSpec& g = image.spec();
  const double h = g.pixel();
  const double fx = (x.x + g.half_extent) / h - 0.5;
  const double fy = (x.y + g.half_extent) / h - 0.5;
  const double flx = std::floor(fx);
  const double fly = std::floor(fy);
  const int ix = static_cast<int>(flx);
  const int iy = static_cast<int>(fly);
  const int n = g.n_px;
  if (ix < -1 || iy < -1 || ix >= n || iy >= n) return 0.0;
  const double wx = fx - flx;
  const double wy = fy - fly;
  auto value = [&](int cx, int cy) {
    if (cx < 0 || cy < 0 || cx >= n || cy >= n) return 0.0;
    return image.at(cx, cy);
  };
  return (1.0 - wy) * ((1.0 - wx) * value(ix, iy) + wx * value(ix + 1, iy)) +
         wy * ((1.0 - wx) * value(ix, iy + 1) + wx * value(ix + 1, iy + 1));
}

RadonSinogram radon_forward_grid(const ImageGrid& image,
                                 const RadonLattice& lattice) {
  lattice.validate();
  RadonSinogram sino(lattice);
  const GridSpec& g = image.spec();
  const double step = 0.5 * g.pixel();
  const double reach = g.half_extent * std::numbers::sqrt2 + g.pixel();
  const int samples = static_cast<int>(std::ceil(2.0 * reach / step)) + 1;
  const double first = -0.5 * (samples - 1) * step;

#pragma omp parallel for schedule(static)
  for (int j = 0; j < lattice.n_theta; ++j) {
    const Vec2 normal = unit_vector(lattice.theta(j));
    const Vec2 along{normal.y, -normal.x};
    for (int i = 0; i < lattice.n_s; ++i) {
      const Vec2 foot = lattice.s(i) * normal;
      double sum = 0.0;
      for (int k = 0; k < samples; ++k) {
        sum += bilinear_sample(image, foot + (first + k * step) * along);
      }
      sino.at(j, i) = sum * step;
    }
  }
  return sino;
}

ImageGrid backprojection(const RadonSinogram& sino, const GridSpec& grid) {
  const RadonLattice& lat = sino.lattice();
  ImageGrid image(grid);
  std::vector<Vec2> normals(lat.n_theta);
  for (int j = 0; j < lat.n_theta; ++j) normals[j] = unit_vector(lat.theta(j));
  const double weight = 2.0 * lat.dtheta();
  const int n = grid.n_px;

#pragma omp parallel for schedule(static)
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const Vec2 u = grid.point(ix, iy);
      double sum = 0.0;
      for (int j = 0; j < lat.n_theta; ++j) {
        sum += interp_row(sino.row(j), lat, dot(u, normals[j]));
      }
      image.at(ix, iy) = weight * sum;
    }
  }
  return image;
}

RadonSinogram ramp_filter(const RadonSinogram& sino,
                          const RampFilterOptions& options) {
  const RadonLattice& lat = sino.lattice();
  if (!(options.taper_fraction >= 0.0 && options.taper_fraction < 1.0)) {
    throw ConfigError("ramp filter: taper fraction must lie in [0, 1)");
  }
  const int padded = next_pow2(2 * lat.n_s);
  const double ds = lat.ds();
  const std::vector<double> response =
      ramp_response(padded, ds, options.taper_fraction);

  RadonSinogram out(lat);
  detail::RealFft1d fft(padded);
  std::vector<double> buffer(padded);
  std::vector<std::complex<double>> spectrum(fft.spectrum_size());
  for (int j = 0; j < lat.n_theta; ++j) {
    std::fill(buffer.begin(), buffer.end(), 0.0);
    const auto row = sino.row(j);
    std::copy(row.begin(), row.end(), buffer.begin());
    fft.forward(buffer, spectrum);
    for (int m = 0; m < fft.spectrum_size(); ++m) spectrum[m] *= response[m];
    fft.inverse(spectrum, buffer);
    const double scale = ds / padded;
    auto dst = out.row(j);
    for (int i = 0; i < lat.n_s; ++i) dst[i] = buffer[i] * scale;
  }
  return out;
}

ImageGrid fbp_radon_inversion(const RadonSinogram& sino, const GridSpec& grid,
                              const RampFilterOptions& options) {
  ImageGrid image = backprojection(ramp_filter(sino, options), grid);
  const double scale = 1.0 / (4.0 * kPi);
  for (double& v : image.values()) v *= scale;
  return image;
}

}  // namespace conetomo
