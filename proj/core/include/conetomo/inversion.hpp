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

// Reconstruction of planar sources from cone (V-line) data.
//
// Two routes reconstruct at cone vertices: both backproject the data of all
// cones with vertex u over (beta, psi), with weight mu(beta) or sin(psi), and
// then apply the Riesz filter I^{-1}. The third route works from detectors on
// the boundary of a square: each detector's data block is converted into
// Radon values on the lines through it, the values are binned into a
// parallel-beam sinogram, and the sinogram is inverted by filtered
// backprojection.

#ifndef CONETOMO_INVERSION_HPP_
#define CONETOMO_INVERSION_HPP_

#include <span>
#include <string>
#include <vector>

#include "conetomo/geometry.hpp"
#include "conetomo/phantom.hpp"
#include "conetomo/radon.hpp"
#include "conetomo/riesz.hpp"
#include "conetomo/spherical.hpp"

namespace conetomo {

// Weights over the axis lattice phi_j = 2 pi j / n_beta with unit quadrature
// mass (2 pi / n_beta) sum_j w_j = 1 (within 1e-10, ConfigError otherwise).
class MuWeight {
 public:
  explicit MuWeight(std::vector<double> weights);
  static MuWeight uniform(int n_beta);
  // All mass on the single axis direction phi_j.
  static MuWeight delta(int n_beta, int j);

  int n_beta() const { return static_cast<int>(weights_.size()); }
  std::span<const double> weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

struct DirectInversionOptions {
  // The backprojected data are computed on a grid enlarged by this factor
  // (same pixel size) before filtering, then cropped back.
  int extension = 2;
  RieszOptions riesz{};
};

// f(u) = (1 / 2 pi) I^{-1} [ sum_j sum_k Cf(u, phi_j, psi_k) mu_j dpsi dbeta ].
ImageGrid invert_mu_weighted(const Phantom& phantom, const GridSpec& grid,
                             const MuWeight& mu, int n_psi,
                             const DirectInversionOptions& options = {});

// f(u) = (1 / 8 pi) I^{-1} [ sum_j sum_k Cf(u, phi_j, psi_k) sin(psi_k)
// dpsi dbeta ].
ImageGrid invert_sine_weighted(const Phantom& phantom, const GridSpec& grid,
                               int n_beta, int n_psi,
                               const DirectInversionOptions& options = {});

// Radon values Rf(w_j, w_j . u), w_j = unit_vector(phi_j), from the
// n_beta x n_psi data block (beta-major) of a single vertex u:
//   -2 int_0^pi P_1(Delta_S) F [Cf(u, ., psi)](w) sin(psi) dpsi
// with the opening integral taken on the data's midpoint lattice. Requires
// n_beta divisible by 4 and >= 8.
std::vector<double> cone_to_radon_even(std::span<const double> block,
                                       const ConeLattice& lattice,
                                       const BeltramiOptions& beltrami = {});

// Detectors on the boundary of [-A, A]^2 with per_side uniformly spaced
// positions on each side, corners shared.
struct CameraConfig {
  double half_extent = 1.0;
  int per_side = 257;
  int n_beta = 200;
  int n_psi = 200;

  void validate() const;
  ConeLattice lattice() const { return {n_beta, n_psi}; }
};

// The 4 (per_side - 1) detector positions, counterclockwise from (-A, -A).
std::vector<Vec2> camera_detectors(const CameraConfig& camera);

// n_theta = n_beta / 2 so every detector direction falls on a sinogram
// angle; S = A sqrt(2); offsets spaced at most one image pixel apart.
RadonLattice default_compton_lattice(const CameraConfig& camera,
                                     const GridSpec& grid);

struct ComptonOptions {
  // Sinogram lattice; n_theta == 0 selects default_compton_lattice.
  RadonLattice lattice{0, 0, 1.0};
  BeltramiOptions beltrami{};
  RampFilterOptions ramp{};
  // Above this fraction of empty sinogram bins a warning is reported.
  double max_empty_fraction = 0.2;
};

// Scattered Radon samples binned onto a lattice.
struct BinnedSinogram {
  RadonSinogram sinogram;
  double empty_fraction = 0.0;
};

// Accumulates samples Rf(unit_vector(phi), s) by bilinear scatter in
// (theta, s) after folding with Rf(-w, -s) = Rf(w, s); each bin is the
// weight-normalized mean of its samples and empty bins are filled by linear
// interpolation along s.
class SinogramAccumulator {
 public:
  explicit SinogramAccumulator(RadonLattice lattice);

  void add(double phi, double s, double value);
  BinnedSinogram finish() const;

 private:
  void scatter(int j, double s, double weight, double value);

  RadonLattice lattice_;
  std::vector<double> sum_;
  std::vector<double> weight_;
};

struct ComptonResult {
  ImageGrid image;
  RadonSinogram sinogram;
  double empty_fraction = 0.0;
  std::vector<std::string> warnings;
};

// Full pipeline from analytically simulated camera data.
ComptonResult compton_reconstruct(const Phantom& phantom,
                                  const CameraConfig& camera,
                                  const GridSpec& grid,
                                  const ComptonOptions& options = {});

// Full pipeline from measured data with arbitrary vertex positions.
ComptonResult compton_reconstruct(const ConeSinogram& data,
                                  const GridSpec& grid,
                                  const RadonLattice& lattice,
                                  const ComptonOptions& options = {});

}  // namespace conetomo

#endif  // CONETOMO_INVERSION_HPP_
