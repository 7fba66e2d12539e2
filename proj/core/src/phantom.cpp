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

#include "conetomo/phantom.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace conetomo {

namespace {

constexpr double kGaussianCutoffSigmas = 12.0;
const double kSqrtHalfPi = std::sqrt(0.5 * kPi);
const double kSqrtTwoPi = std::sqrt(kTwoPi);

double gaussian_ray(const GaussianBlob& g, Vec2 origin, Vec2 dir) {
  // |origin + r dir - c|^2 = (r + t0)^2 + p2 with t0 = dir.(origin - c).
  const Vec2 w = origin - g.center;
  const double t0 = dot(dir, w);
  const double p2 = std::max(0.0, dot(w, w) - t0 * t0);
  const double two_s2 = 2.0 * g.sigma * g.sigma;
  return g.amplitude * std::exp(-p2 / two_s2) * g.sigma * kSqrtHalfPi *
         std::erfc(t0 / (g.sigma * std::numbers::sqrt2));
}

}  // namespace

Phantom::Phantom(std::vector<Disk> disks, std::vector<GaussianBlob> blobs)
    : disks_(std::move(disks)), blobs_(std::move(blobs)) {
  for (const Disk& d : disks_) {
    if (!(d.radius > 0.0)) throw std::invalid_argument("disk radius <= 0");
  }
  for (const GaussianBlob& g : blobs_) {
    if (!(g.sigma > 0.0)) throw std::invalid_argument("gaussian sigma <= 0");
  }
}

double Phantom::support_radius() const {
  double r = 0.0;
  for (const Disk& d : disks_) r = std::max(r, norm(d.center) + d.radius);
  for (const GaussianBlob& g : blobs_) {
    r = std::max(r, norm(g.center) + kGaussianCutoffSigmas * g.sigma);
  }
  return r;
}

Phantom Phantom::translated(Vec2 a) const {
  Phantom out = *this;
  for (Disk& d : out.disks_) d.center = d.center + a;
  for (GaussianBlob& g : out.blobs_) g.center = g.center + a;
  return out;
}

Phantom Phantom::rotated(double gamma) const {
  Phantom out = *this;
  for (Disk& d : out.disks_) d.center = rotate(d.center, gamma);
  for (GaussianBlob& g : out.blobs_) g.center = rotate(g.center, gamma);
  return out;
}

double eval(const Phantom& phantom, Vec2 x) {
  double value = 0.0;
  for (const Disk& d : phantom.disks()) {
    const Vec2 w = x - d.center;
    if (dot(w, w) <= d.radius * d.radius) value += d.density;
  }
  for (const GaussianBlob& g : phantom.blobs()) {
    const Vec2 w = x - g.center;
    value += g.amplitude * std::exp(-dot(w, w) / (2.0 * g.sigma * g.sigma));
  }
  return value;
}

ImageGrid rasterize(const Phantom& phantom, const GridSpec& grid) {
  constexpr int kSub = 4;
  ImageGrid image(grid);
  const double h = grid.pixel();
  const int n = grid.n_px;
#pragma omp parallel for schedule(static)
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const Vec2 c = grid.point(ix, iy);
      double sum = 0.0;
      for (int sy = 0; sy < kSub; ++sy) {
        for (int sx = 0; sx < kSub; ++sx) {
          const Vec2 p{c.x + ((sx + 0.5) / kSub - 0.5) * h,
                       c.y + ((sy + 0.5) / kSub - 0.5) * h};
          sum += eval(phantom, p);
        }
      }
      image.at(ix, iy) = sum / (kSub * kSub);
    }
  }
  return image;
}

std::optional<std::pair<double, double>> disk_chord(const Disk& disk,
                                                    Vec2 origin, Vec2 dir) {
  // r^2 + 2 b r + c = 0 with b = dir.(origin - center).
  const Vec2 w = origin - disk.center;
  const double b = dot(dir, w);
  const double c = dot(w, w) - disk.radius * disk.radius;
  const double disc = b * b - c;
  if (disc <= 0.0) return std::nullopt;
  const double root = std::sqrt(disc);
  return std::make_pair(-b - root, -b + root);
}

double ray_integral(const Phantom& phantom, Vec2 origin, Vec2 unit_dir) {
  double value = 0.0;
  for (const Disk& d : phantom.disks()) {
    const auto chord = disk_chord(d, origin, unit_dir);
    if (!chord) continue;
    const double r_in = std::max(chord->first, 0.0);
    if (chord->second > r_in) value += d.density * (chord->second - r_in);
  }
  for (const GaussianBlob& g : phantom.blobs()) {
    value += gaussian_ray(g, origin, unit_dir);
  }
  return value;
}

double ray_integral(const Phantom& phantom, Vec2 origin, Direction2 dir) {
  return ray_integral(phantom, origin, dir.unit());
}

double radon_analytic(const Phantom& phantom, Direction2 omega, double s) {
  const Vec2 w = omega.unit();
  double value = 0.0;
  for (const Disk& d : phantom.disks()) {
    const double dist = s - dot(w, d.center);
    const double h2 = d.radius * d.radius - dist * dist;
    if (h2 > 0.0) value += 2.0 * d.density * std::sqrt(h2);
  }
  for (const GaussianBlob& g : phantom.blobs()) {
    const double dist = s - dot(w, g.center);
    value += g.amplitude * g.sigma * kSqrtTwoPi *
             std::exp(-dist * dist / (2.0 * g.sigma * g.sigma));
  }
  return value;
}

double cone_analytic_2d(const Phantom& phantom, Vec2 u, double phi,
                        double psi) {
  if (!(psi > 0.0 && psi < kPi)) {
    throw std::domain_error("cone_analytic_2d: psi must lie in (0, pi)");
  }
  return ray_integral(phantom, u, unit_vector(phi + psi)) +
         ray_integral(phantom, u, unit_vector(phi - psi));
}

Phantom disk_phantom() { return Phantom({Disk{{0.0, 0.0}, 0.5, 1.0}}, {}); }

Phantom two_disk_phantom() {
  return Phantom(
      {Disk{{0.0, 0.0}, 0.5, 0.3}, Disk{{0.5, 0.0}, 0.3, 0.7}}, {});
}

Phantom parse_phantom(std::istream& in) {
  std::vector<Disk> disks;
  std::vector<GaussianBlob> blobs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind)) continue;
    double a = 0, b = 0, c = 0, d = 0;
    if (!(fields >> a >> b >> c >> d)) {
      throw std::runtime_error("phantom line " + std::to_string(line_no) +
                               ": expected four numbers after '" + kind + "'");
    }
    std::string extra;
    if (fields >> extra) {
      throw std::runtime_error("phantom line " + std::to_string(line_no) +
                               ": trailing field '" + extra + "'");
    }
    if (kind == "disk") {
      if (!(c > 0.0)) {
        throw std::runtime_error("phantom line " + std::to_string(line_no) +
                                 ": disk radius must be positive");
      }
      disks.push_back(Disk{{a, b}, c, d});
    } else if (kind == "gauss") {
      if (!(c > 0.0)) {
        throw std::runtime_error("phantom line " + std::to_string(line_no) +
                                 ": gaussian sigma must be positive");
      }
      blobs.push_back(GaussianBlob{{a, b}, c, d});
    } else {
      throw std::runtime_error("phantom line " + std::to_string(line_no) +
                               ": unknown primitive '" + kind + "'");
    }
  }
  return Phantom(std::move(disks), std::move(blobs));
}

Phantom load_phantom(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open phantom file " + path.string());
  }
  return parse_phantom(in);
}

std::string format_phantom(const Phantom& phantom) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (const Disk& d : phantom.disks()) {
    out << "disk " << d.center.x << ' ' << d.center.y << ' ' << d.radius << ' '
        << d.density << '\n';
  }
  for (const GaussianBlob& g : phantom.blobs()) {
    out << "gauss " << g.center.x << ' ' << g.center.y << ' ' << g.sigma << ' '
        << g.amplitude << '\n';
  }
  return out.str();
}

}  // namespace conetomo
