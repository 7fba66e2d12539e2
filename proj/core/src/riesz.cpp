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

#include "conetomo/riesz.hpp"

#include <complex>
#include <vector>

#include "fft.hpp"

namespace conetomo {

namespace {

constexpr double kZeroMeanTolerance = 1e-9;

}  // namespace

RieszOrder::RieszOrder(double alpha, int dim) : alpha_(alpha), dim_(dim) {
  if (dim < 1) throw std::invalid_argument("RieszOrder: dimension must be >= 1");
  if (!(alpha < dim)) {
    throw std::domain_error("RieszOrder: alpha must be smaller than n");
  }
}

ImageGrid riesz_apply_2d(const ImageGrid& image, RieszOrder alpha,
                         const RieszOptions& options) {
  if (alpha.dim() != 2) {
    throw std::invalid_argument("riesz_apply_2d: order must be for n = 2");
  }
  if (options.pad_factor < 1) {
    throw ConfigError("riesz_apply_2d: pad factor must be >= 1");
  }
  const double a = alpha.alpha();
  if (a == 0.0) return image;

  if (a > 0.0) {
    double sum = 0.0;
    double abs_sum = 0.0;
    for (double v : image.values()) {
      sum += v;
      abs_sum += std::abs(v);
    }
    if (std::abs(sum) > kZeroMeanTolerance * abs_sum) {
      throw std::domain_error(
          "riesz_apply_2d: alpha > 0 requires a zero-mean image");
    }
  }

  const int n = image.n_px();
  const int p = options.pad_factor * n;
  const double h = image.spec().pixel();
  detail::RealFft2d fft(p, p);

  std::vector<double> padded(static_cast<std::size_t>(p) * p, 0.0);
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      padded[static_cast<std::size_t>(iy) * p + ix] = image.at(ix, iy);
    }
  }
  const int cols = fft.spectrum_cols();
  std::vector<std::complex<double>> spectrum(static_cast<std::size_t>(p) *
                                             cols);
  fft.forward(padded, spectrum);

  const double dk = kTwoPi / (p * h);
  const double norm = 1.0 / (static_cast<double>(p) * p);
  for (int r = 0; r < p; ++r) {
    const int kr = r <= p / 2 ? r : r - p;
    for (int c = 0; c < cols; ++c) {
      const double xi = dk * std::hypot(double(kr), double(c));
      const double symbol = xi > 0.0 ? std::pow(xi, -a) : 0.0;
      spectrum[static_cast<std::size_t>(r) * cols + c] *= symbol * norm;
    }
  }
  fft.inverse(spectrum, padded);

  ImageGrid out(image.spec());
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      out.at(ix, iy) = padded[static_cast<std::size_t>(iy) * p + ix];
    }
  }
  return out;
}

}  // namespace conetomo
