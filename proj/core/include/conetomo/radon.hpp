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

// Planar Radon transform on rasters: forward projection, backprojection and
// filtered backprojection.

#ifndef CONETOMO_RADON_HPP_
#define CONETOMO_RADON_HPP_

#include "conetomo/geometry.hpp"

namespace conetomo {

// Bilinear interpolation at pixel centers; zero outside the raster.
double bilinear_sample(const ImageGrid& image, Vec2 x);

// Line integrals of the bilinearly interpolated image, sampled every half
// pixel along each line.
RadonSinogram radon_forward_grid(const ImageGrid& image,
                                 const RadonLattice& lattice);

// R#g(u) = integral over the full circle of g(omega, u.omega), evaluated as
// 2 (pi / n_theta) sum_j g(theta_j, u.omega_j) using evenness. Linear
// interpolation in s; offsets beyond [-S, S] contribute zero.
ImageGrid backprojection(const RadonSinogram& sino, const GridSpec& grid);

struct RampFilterOptions {
  // Fraction of the band below Nyquist over which the cosine taper rolls
  // the response off to zero.
  double taper_fraction = 0.1;
};

// Filters every projection with the multiplier |sigma| (angular frequency),
// band-limited at Nyquist and cosine-tapered on the top of the band. The
// response is built from the sampled band-limited ramp kernel so the zero
// frequency is represented correctly on the padded lattice.
RadonSinogram ramp_filter(const RadonSinogram& sino,
                          const RampFilterOptions& options = {});

// f = (1 / 4 pi) R# I^{-1} Rf.
ImageGrid fbp_radon_inversion(const RadonSinogram& sino, const GridSpec& grid,
                              const RampFilterOptions& options = {});

// Analytic sinogram of a callable Rf(omega, s) on the lattice.
template <typename RadonFn>
RadonSinogram sample_sinogram(const RadonLattice& lattice, RadonFn&& radon) {
  RadonSinogram sino(lattice);
  for (int j = 0; j < lattice.n_theta; ++j) {
    const Direction2 omega(lattice.theta(j));
    for (int i = 0; i < lattice.n_s; ++i) {
      sino.at(j, i) = radon(omega, lattice.s(i));
    }
  }
  return sino;
}

}  // namespace conetomo

#endif  // CONETOMO_RADON_HPP_
