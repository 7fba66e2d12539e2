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

#include "conetomo/inversion.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "conetomo/cone.hpp"

namespace conetomo {

namespace {

constexpr double kMassTolerance = 1e-10;
constexpr double kSameAngle = 1e-11;

struct WeightedDirection {
  double angle;
  double weight;
};

// Every V-line integral is the sum of two ray integrals along phi +- psi, so
// a weighted sum of cone data over a lattice is a weighted sum of ray
// integrals. Lattice angles coincide often (e.g. whenever the beta step is
// a multiple of the psi step); merging them is exact and saves most of the
// work.
std::vector<WeightedDirection> merged_ray_weights(
    std::span<const double> beta_weights, int n_psi,
    const std::function<double(double)>& psi_weight) {
  const ConeLattice lat{static_cast<int>(beta_weights.size()), n_psi};
  std::vector<WeightedDirection> rays;
  rays.reserve(2 * beta_weights.size() * n_psi);
  const double cell = lat.dphi() * lat.dpsi();
  for (int j = 0; j < lat.n_beta; ++j) {
    if (beta_weights[j] == 0.0) continue;
    for (int k = 0; k < n_psi; ++k) {
      const double w = beta_weights[j] * psi_weight(lat.psi(k)) * cell;
      rays.push_back({wrap_angle(lat.phi(j) + lat.psi(k)), w});
      rays.push_back({wrap_angle(lat.phi(j) - lat.psi(k)), w});
    }
  }
  std::sort(rays.begin(), rays.end(),
            [](const WeightedDirection& a, const WeightedDirection& b) {
              return a.angle < b.angle;
            });
  std::vector<WeightedDirection> merged;
  for (const WeightedDirection& r : rays) {
    if (!merged.empty() && r.angle - merged.back().angle < kSameAngle) {
      merged.back().weight += r.weight;
    } else {
      merged.push_back(r);
    }
  }
  if (merged.size() > 1 &&
      merged.front().angle + kTwoPi - merged.back().angle < kSameAngle) {
    merged.front().weight += merged.back().weight;
    merged.pop_back();
  }
  return merged;
}

ImageGrid weighted_cone_backprojection(
    const Phantom& phantom, const GridSpec& grid,
    std::span<const double> beta_weights, int n_psi,
    const std::function<double(double)>& psi_weight) {
  const std::vector<WeightedDirection> rays =
      merged_ray_weights(beta_weights, n_psi, psi_weight);
  std::vector<Vec2> dirs(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    dirs[i] = unit_vector(rays[i].angle);
  }
  ImageGrid out(grid);
  const int n = grid.n_px;
#pragma omp parallel for schedule(dynamic)
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const Vec2 u = grid.point(ix, iy);
      double sum = 0.0;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        sum += rays[i].weight * ray_integral(phantom, u, dirs[i]);
      }
      out.at(ix, iy) = sum;
    }
  }
  return out;
}

ImageGrid filter_and_crop(const ImageGrid& data, const GridSpec& grid,
                          int extension, double scale,
                          const RieszOptions& riesz) {
  const ImageGrid filtered = riesz_apply_2d(data, RieszOrder(-1.0), riesz);
  ImageGrid out(grid);
  const int offset = (extension - 1) * grid.n_px / 2;
  for (int iy = 0; iy < grid.n_px; ++iy) {
    for (int ix = 0; ix < grid.n_px; ++ix) {
      out.at(ix, iy) = scale * filtered.at(ix + offset, iy + offset);
    }
  }
  return out;
}

GridSpec extended_grid(const GridSpec& grid, int extension) {
  if (extension < 1 || (extension - 1) * grid.n_px % 2 != 0) {
    throw ConfigError(
        "direct inversion: extension must keep the grid centered");
  }
  return GridSpec{extension * grid.n_px, extension * grid.half_extent};
}

}  // namespace

MuWeight::MuWeight(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw ConfigError("MuWeight: no weights");
  const double mass = kTwoPi / weights_.size() *
                      std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(mass - 1.0) > kMassTolerance) {
    throw ConfigError("MuWeight: quadrature mass must be 1");
  }
}

MuWeight MuWeight::uniform(int n_beta) {
  if (n_beta < 1) throw ConfigError("MuWeight: n_beta must be >= 1");
  return MuWeight(std::vector<double>(n_beta, 1.0 / kTwoPi));
}

MuWeight MuWeight::delta(int n_beta, int j) {
  if (n_beta < 1 || j < 0 || j >= n_beta) {
    throw ConfigError("MuWeight: delta index out of range");
  }
  std::vector<double> w(n_beta, 0.0);
  w[j] = n_beta / kTwoPi;
  return MuWeight(std::move(w));
}

ImageGrid invert_mu_weighted(const Phantom& phantom, const GridSpec& grid,
                             const MuWeight& mu, int n_psi,
                             const DirectInversionOptions& options) {
  grid.validate();
  if (n_psi < 2) throw ConfigError("invert_mu_weighted: n_psi must be >= 2");
  const GridSpec big = extended_grid(grid, options.extension);
  const ImageGrid data = weighted_cone_backprojection(
      phantom, big, mu.weights(), n_psi, [](double) { return 1.0; });
  // pi^{-n/2} Gamma(n/2) / (2 Gamma(n-1)) at n = 2.
  return filter_and_crop(data, grid, options.extension, 1.0 / kTwoPi,
                         options.riesz);
}

ImageGrid invert_sine_weighted(const Phantom& phantom, const GridSpec& grid,
                               int n_beta, int n_psi,
                               const DirectInversionOptions& options) {
  grid.validate();
  if (n_beta < 1 || n_psi < 2) {
    throw ConfigError("invert_sine_weighted: lattice too small");
  }
  const GridSpec big = extended_grid(grid, options.extension);
  const std::vector<double> ones(n_beta, 1.0);
  const ImageGrid data = weighted_cone_backprojection(
      phantom, big, ones, n_psi, [](double psi) { return std::sin(psi); });
  // Gamma^2((n+1)/2) / (2 pi^n Gamma(n)) at n = 2.
  return filter_and_crop(data, grid, options.extension, 1.0 / (8.0 * kPi),
                         options.riesz);
}

std::vector<double> cone_to_radon_even(std::span<const double> block,
                                       const ConeLattice& lattice,
                                       const BeltramiOptions& beltrami) {
  lattice.validate();
  if (lattice.n_beta % 4 != 0 || lattice.n_beta < 8) {
    throw ConfigError(
        "cone_to_radon_even: n_beta must be divisible by 4 and >= 8");
  }
  if (block.size() !=
      static_cast<std::size_t>(lattice.n_beta) * lattice.n_psi) {
    throw ConfigError("cone_to_radon_even: block size does not match lattice");
  }
  // Every operator acting on beta is linear and independent of psi, so the
  // opening integral can be taken first.
  std::vector<double> weighted(lattice.n_beta, 0.0);
  for (int j = 0; j < lattice.n_beta; ++j) {
    double sum = 0.0;
    for (int k = 0; k < lattice.n_psi; ++k) {
      sum += block[static_cast<std::size_t>(j) * lattice.n_psi + k] *
             std::sin(lattice.psi(k));
    }
    weighted[j] = sum * lattice.dpsi();
  }
  const CircleFunction funk = funk_transform_s1(CircleFunction(weighted));
  const CircleFunction smoothed = beltrami_poly_apply(funk, 2, 1, beltrami);
  // -2^{n-1} / Gamma(n-1) at n = 2.
  std::vector<double> out(lattice.n_beta);
  for (int j = 0; j < lattice.n_beta; ++j) out[j] = -2.0 * smoothed[j];
  return out;
}

void CameraConfig::validate() const {
  if (!(half_extent > 0.0)) throw ConfigError("camera: half extent must be > 0");
  if (per_side < 2) throw ConfigError("camera: per_side must be >= 2");
  lattice().validate();
  if (n_beta % 4 != 0 || n_beta < 8) {
    throw ConfigError("camera: n_beta must be divisible by 4 and >= 8");
  }
}

std::vector<Vec2> camera_detectors(const CameraConfig& camera) {
  camera.validate();
  const double a = camera.half_extent;
  const int d = camera.per_side;
  std::vector<Vec2> out;
  out.reserve(4 * (d - 1));
  auto t = [&](int i) { return -a + 2.0 * a * i / (d - 1); };
  for (int i = 0; i < d - 1; ++i) out.push_back({t(i), -a});
  for (int i = 0; i < d - 1; ++i) out.push_back({a, t(i)});
  for (int i = 0; i < d - 1; ++i) out.push_back({-t(i), a});
  for (int i = 0; i < d - 1; ++i) out.push_back({-a, -t(i)});
  return out;
}

RadonLattice default_compton_lattice(const CameraConfig& camera,
                                     const GridSpec& grid) {
  camera.validate();
  grid.validate();
  const double s_max = camera.half_extent * std::numbers::sqrt2;
  const int half = static_cast<int>(std::ceil(s_max / grid.pixel()));
  return RadonLattice{camera.n_beta / 2, 2 * half + 1, s_max};
}

SinogramAccumulator::SinogramAccumulator(RadonLattice lattice)
    : lattice_(lattice) {
  lattice_.validate();
  const auto size = static_cast<std::size_t>(lattice_.n_theta) * lattice_.n_s;
  sum_.assign(size, 0.0);
  weight_.assign(size, 0.0);
}

void SinogramAccumulator::scatter(int j, double s, double weight,
                                  double value) {
  if (weight <= 0.0) return;
  const double pos = (s + lattice_.s_max) / lattice_.ds();
  const double fl = std::floor(pos);
  const int i0 = static_cast<int>(fl);
  const double w = pos - fl;
  auto put = [&](int i, double wi) {
    if (i < 0 || i >= lattice_.n_s || wi <= 0.0) return;
    const std::size_t idx = static_cast<std::size_t>(j) * lattice_.n_s + i;
    sum_[idx] += weight * wi * value;
    weight_[idx] += weight * wi;
  };
  put(i0, 1.0 - w);
  put(i0 + 1, w);
}

void SinogramAccumulator::add(double phi, double s, double value) {
  double theta = wrap_angle(phi);
  if (theta >= kPi) {
    theta -= kPi;
    s = -s;
  }
  double pos = theta / lattice_.dtheta();
  const double nearest = std::round(pos);
  if (std::abs(pos - nearest) < 1e-9) pos = nearest;
  const double fl = std::floor(pos);
  int j0 = static_cast<int>(fl);
  const double w = pos - fl;
  if (j0 >= lattice_.n_theta) {
    j0 -= lattice_.n_theta;
    s = -s;
  }
  scatter(j0, s, 1.0 - w, value);
  // The angle after the last lattice row is theta = pi, the mirror of row 0.
  if (j0 + 1 < lattice_.n_theta) {
    scatter(j0 + 1, s, w, value);
  } else {
    scatter(0, -s, w, value);
  }
}

BinnedSinogram SinogramAccumulator::finish() const {
  RadonSinogram sino(lattice_);
  std::size_t empty = 0;
  const int n_s = lattice_.n_s;
  std::vector<int> filled;
  for (int j = 0; j < lattice_.n_theta; ++j) {
    auto row = sino.row(j);
    filled.clear();
    for (int i = 0; i < n_s; ++i) {
      const std::size_t idx = static_cast<std::size_t>(j) * n_s + i;
      if (weight_[idx] > 0.0) {
        row[i] = sum_[idx] / weight_[idx];
        filled.push_back(i);
      }
    }
    empty += n_s - filled.size();
    if (filled.empty()) continue;
    // Linear interpolation between filled neighbours, nearest value beyond
    // the outermost ones.
    std::size_t next = 0;
    for (int i = 0; i < n_s; ++i) {
      while (next < filled.size() && filled[next] < i) ++next;
      if (next < filled.size() && filled[next] == i) continue;
      if (next == 0) {
        row[i] = row[filled.front()];
      } else if (next == filled.size()) {
        row[i] = row[filled.back()];
      } else {
        const int lo = filled[next - 1];
        const int hi = filled[next];
        const double t = double(i - lo) / (hi - lo);
        row[i] = (1.0 - t) * row[lo] + t * row[hi];
      }
    }
  }
  return BinnedSinogram{
      std::move(sino),
      static_cast<double>(empty) / (static_cast<double>(lattice_.n_theta) * n_s)};
}

namespace {

ComptonResult finish_compton(const SinogramAccumulator& acc,
                             const GridSpec& grid,
                             const ComptonOptions& options) {
  BinnedSinogram binned = acc.finish();
  ComptonResult result{fbp_radon_inversion(binned.sinogram, grid, options.ramp),
                       std::move(binned.sinogram), binned.empty_fraction, {}};
  if (result.empty_fraction > options.max_empty_fraction) {
    result.warnings.push_back(
        "under-sampled camera: " +
        std::to_string(100.0 * result.empty_fraction) +
        "% of sinogram bins received no samples");
  }
  return result;
}

void add_detector(SinogramAccumulator& acc, Vec2 u, const ConeLattice& lat,
                  std::span<const double> radon) {
  for (int j = 0; j < lat.n_beta; ++j) {
    const double phi = lat.phi(j);
    acc.add(phi, dot(unit_vector(phi), u), radon[j]);
  }
}

}  // namespace

ComptonResult compton_reconstruct(const Phantom& phantom,
                                  const CameraConfig& camera,
                                  const GridSpec& grid,
                                  const ComptonOptions& options) {
  grid.validate();
  const std::vector<Vec2> detectors = camera_detectors(camera);
  const RadonLattice lattice = options.lattice.n_theta == 0
                                   ? default_compton_lattice(camera, grid)
                                   : options.lattice;
  const ConeLattice lat = camera.lattice();
  const auto n_det = static_cast<std::ptrdiff_t>(detectors.size());

  // Detector blocks are simulated and converted independently; the
  // accumulation below runs in detector order so the result does not depend
  // on scheduling.
  std::vector<std::vector<double>> radon(detectors.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t v = 0; v < n_det; ++v) {
    const ConeSinogram block =
        cone_forward_sinogram(phantom, {detectors[v]}, lat);
    radon[v] = cone_to_radon_even(block.block(0), lat, options.beltrami);
  }
  SinogramAccumulator acc(lattice);
  for (std::size_t v = 0; v < detectors.size(); ++v) {
    add_detector(acc, detectors[v], lat, radon[v]);
  }
  return finish_compton(acc, grid, options);
}

ComptonResult compton_reconstruct(const ConeSinogram& data,
                                  const GridSpec& grid,
                                  const RadonLattice& lattice,
                                  const ComptonOptions& options) {
  grid.validate();
  const ConeLattice& lat = data.lattice();
  const auto n_det = static_cast<std::ptrdiff_t>(data.vertices().size());
  std::vector<std::vector<double>> radon(data.vertices().size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t v = 0; v < n_det; ++v) {
    radon[v] = cone_to_radon_even(data.block(v), lat, options.beltrami);
  }
  SinogramAccumulator acc(lattice);
  for (std::size_t v = 0; v < data.vertices().size(); ++v) {
    add_detector(acc, data.vertices()[v], lat, radon[v]);
  }
  return finish_compton(acc, grid, options);
}

}  // namespace conetomo
