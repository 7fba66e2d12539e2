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

#include "conetomo/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace conetomo {

namespace {

constexpr double kUnitTolerance = 1e-12;

double euclidean_norm(std::span<const double> v) {
  double sum = 0.0;
  for (double c : v) sum += c * c;
  return std::sqrt(sum);
}

void require_finite(std::span<const double> values, const char* what) {
  if (!std::all_of(values.begin(), values.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw std::invalid_argument(std::string(what) + ": non-finite value");
  }
}

}  // namespace

double wrap_angle(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative number can round up to exactly 2 pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Vec2 rotate(Vec2 p, double gamma) {
  const double c = std::cos(gamma);
  const double s = std::sin(gamma);
  return {c * p.x + s * p.y, -s * p.x + c * p.y};
}

DirectionN::DirectionN(std::vector<double> components)
    : c_(std::move(components)) {
  if (c_.empty()) throw std::invalid_argument("DirectionN: empty vector");
  if (std::abs(euclidean_norm(c_) - 1.0) > kUnitTolerance) {
    throw std::invalid_argument("DirectionN: vector is not unit length");
  }
}

DirectionN DirectionN::normalized(std::vector<double> v) {
  const double n = euclidean_norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("DirectionN: cannot normalize zero vector");
  }
  for (double& c : v) c /= n;
  return DirectionN(std::move(v));
}

DirectionN DirectionN::basis(std::size_t n, std::size_t k) {
  if (k >= n) throw std::invalid_argument("DirectionN::basis: k >= n");
  std::vector<double> v(n, 0.0);
  v[k] = 1.0;
  return DirectionN(std::move(v));
}

DirectionN DirectionN::operator-() const {
  std::vector<double> v = c_;
  for (double& c : v) c = -c;
  return DirectionN(std::move(v));
}

Cone::Cone(std::vector<double> vertex, DirectionN axis, double opening)
    : vertex_(std::move(vertex)), axis_(std::move(axis)), opening_(opening) {
  if (vertex_.size() != axis_.dim()) {
    throw std::invalid_argument("Cone: vertex and axis dimensions differ");
  }
  if (!(opening_ > 0.0 && opening_ < kPi)) {
    throw std::domain_error("Cone: opening angle must lie in (0, pi)");
  }
}

bool cone_contains(const Cone& cone, std::span<const double> x, double tol) {
  if (x.size() != cone.dim()) {
    throw std::invalid_argument("cone_contains: dimension mismatch");
  }
  double along = 0.0;
  double dist2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - cone.vertex()[i];
    along += d * cone.axis()[i];
    dist2 += d * d;
  }
  const double dist = std::sqrt(dist2);
  return std::abs(along - dist * std::cos(cone.opening())) <=
         tol * (1.0 + dist);
}

Cone reflect_cone(const Cone& cone) {
  return Cone(std::vector<double>(cone.vertex().begin(), cone.vertex().end()),
              -cone.axis(), kPi - cone.opening());
}

double sphere_area(int n) {
  if (n <= 0) throw std::domain_error("sphere_area: n must be >= 1");
  const double half = 0.5 * n;
  return 2.0 * std::pow(kPi, half) / std::tgamma(half);
}

void GridSpec::validate() const {
  if (n_px < 2) throw ConfigError("grid: n_px must be >= 2");
  if (!(half_extent > 0.0) || !std::isfinite(half_extent)) {
    throw ConfigError("grid: half extent must be positive");
  }
}

ImageGrid::ImageGrid(GridSpec spec) : spec_(spec) {
  spec_.validate();
  values_.assign(static_cast<std::size_t>(spec_.n_px) * spec_.n_px, 0.0);
}

ImageGrid::ImageGrid(GridSpec spec, std::vector<double> values)
    : spec_(spec), values_(std::move(values)) {
  spec_.validate();
  if (values_.size() != static_cast<std::size_t>(spec_.n_px) * spec_.n_px) {
    throw ConfigError("ImageGrid: value count does not match grid");
  }
  require_finite(values_, "ImageGrid");
}

void RadonLattice::validate() const {
  if (n_theta < 1) throw ConfigError("radon lattice: n_theta must be >= 1");
  if (n_s < 2) throw ConfigError("radon lattice: n_s must be >= 2");
  if (!(s_max > 0.0) || !std::isfinite(s_max)) {
    throw ConfigError("radon lattice: S must be positive");
  }
}

RadonSinogram::RadonSinogram(RadonLattice lattice) : lattice_(lattice) {
  lattice_.validate();
  values_.assign(static_cast<std::size_t>(lattice_.n_theta) * lattice_.n_s,
                 0.0);
}

RadonSinogram::RadonSinogram(RadonLattice lattice, std::vector<double> values)
    : lattice_(lattice), values_(std::move(values)) {
  lattice_.validate();
  if (values_.size() !=
      static_cast<std::size_t>(lattice_.n_theta) * lattice_.n_s) {
    throw ConfigError("RadonSinogram: value count does not match lattice");
  }
  require_finite(values_, "RadonSinogram");
}

void ConeLattice::validate() const {
  if (n_beta < 1) throw ConfigError("cone lattice: n_beta must be >= 1");
  if (n_psi < 2) throw ConfigError("cone lattice: n_psi must be >= 2");
}

ConeSinogram::ConeSinogram(std::vector<Vec2> vertices, ConeLattice lattice)
    : vertices_(std::move(vertices)), lattice_(lattice) {
  lattice_.validate();
  values_.assign(vertices_.size() * block_size(), 0.0);
}

ConeSinogram::ConeSinogram(std::vector<Vec2> vertices, ConeLattice lattice,
                           std::vector<double> values)
    : vertices_(std::move(vertices)),
      lattice_(lattice),
      values_(std::move(values)) {
  lattice_.validate();
  if (values_.size() != vertices_.size() * block_size()) {
    throw ConfigError("ConeSinogram: value count does not match lattice");
  }
  require_finite(values_, "ConeSinogram");
}

}  // namespace conetomo
