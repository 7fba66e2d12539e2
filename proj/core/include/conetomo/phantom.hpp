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

// Analytic planar source distributions: sums of uniform disks and isotropic
// Gaussians, with closed-form ray, line (Radon) and V-line (cone) integrals.

#ifndef CONETOMO_PHANTOM_HPP_
#define CONETOMO_PHANTOM_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conetomo/geometry.hpp"

namespace conetomo {

struct Disk {
  Vec2 center;
  double radius = 0.0;
  double density = 0.0;
};

// amplitude * exp(-|x - center|^2 / (2 sigma^2)).
struct GaussianBlob {
  Vec2 center;
  double sigma = 0.0;
  double amplitude = 0.0;
};

// Densities of overlapping members add.
class Phantom {
 public:
  Phantom() = default;
  Phantom(std::vector<Disk> disks, std::vector<GaussianBlob> blobs);

  const std::vector<Disk>& disks() const { return disks_; }
  const std::vector<GaussianBlob>& blobs() const { return blobs_; }
  bool empty() const { return disks_.empty() && blobs_.empty(); }

  // Radius of a centered ball outside which the phantom vanishes (Gaussians
  // are cut at 12 sigma, where they fall below 1e-31 of their amplitude).
  double support_radius() const;

  // Phantom moved by a: x -> f(x - a).
  Phantom translated(Vec2 a) const;
  // Phantom rotated so that a member at p moves to rotate(p, gamma).
  Phantom rotated(double gamma) const;

 private:
  std::vector<Disk> disks_;
  std::vector<GaussianBlob> blobs_;
};

double eval(const Phantom& phantom, Vec2 x);

// Pixel means over a 4x4 sub-pixel lattice.
ImageGrid rasterize(const Phantom& phantom, const GridSpec& grid);

// Parameter interval [r_in, r_out] of the ray origin + r dir inside the
// disk, before clipping to r >= 0. Empty when the ray line misses the disk or
// is tangent to it.
std::optional<std::pair<double, double>> disk_chord(const Disk& disk,
                                                    Vec2 origin, Vec2 dir);

// Integral of f over the half line origin + r dir, r >= 0.
double ray_integral(const Phantom& phantom, Vec2 origin, Direction2 dir);
double ray_integral(const Phantom& phantom, Vec2 origin, Vec2 unit_dir);

// Rf(omega, s): integral over the line x . omega = s.
double radon_analytic(const Phantom& phantom, Direction2 omega, double s);

// V-line integral with vertex u, axis unit_vector(phi) and opening psi:
// sum of the ray integrals along angles phi + psi and phi - psi.
double cone_analytic_2d(const Phantom& phantom, Vec2 u, double phi,
                        double psi);

// Unit-density disk of radius 0.5 at the origin.
Phantom disk_phantom();
// Disks of densities 0.3 (radius 0.5 at the origin) and 0.7 (radius 0.3 at
// (0.5, 0)).
Phantom two_disk_phantom();

// Text format, one primitive per line:
//   disk  cx cy r rho
//   gauss cx cy sigma amp
// Blank lines and '#' comments are ignored. Throws std::runtime_error with
// the offending line number on malformed input.
Phantom parse_phantom(std::istream& in);
Phantom load_phantom(const std::filesystem::path& path);
std::string format_phantom(const Phantom& phantom);

}  // namespace conetomo

#endif  // CONETOMO_PHANTOM_HPP_
