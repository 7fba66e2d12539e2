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

// Geometric primitives and sample-lattice containers shared by the library.
//
// Angle convention: a planar direction with angle phi is the unit vector
// (sin phi, cos phi), i.e. phi is measured clockwise from the +y axis. Every
// module uses this convention; in particular the two branches of a planar
// cone with axis angle phi and opening psi point along angles phi + psi and
// phi - psi.

#ifndef CONETOMO_GEOMETRY_HPP_
#define CONETOMO_GEOMETRY_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace conetomo {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Raised for inconsistent lattice sizes, weights, or other run parameters.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// (sin phi, cos phi).
inline Vec2 unit_vector(double phi) { return {std::sin(phi), std::cos(phi)}; }

// Reduces an angle to [0, 2pi).
double wrap_angle(double phi);

// Rotation taking unit_vector(phi) to unit_vector(phi + gamma).
Vec2 rotate(Vec2 p, double gamma);

class Direction2 {
 public:
  explicit Direction2(double phi) : phi_(wrap_angle(phi)) {}

  double phi() const { return phi_; }
  Vec2 unit() const { return unit_vector(phi_); }
  Direction2 opposite() const { return Direction2(phi_ + kPi); }

 private:
  double phi_;
};

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Unit vector in R^n. Construction rejects vectors whose norm is not 1
// within 1e-12; use normalized() to build one from an arbitrary vector.
class DirectionN {
 public:
  explicit DirectionN(std::vector<double> components);
  static DirectionN normalized(std::vector<double> v);
  // e_k in R^n, zero-based k.
  static DirectionN basis(std::size_t n, std::size_t k);

  std::size_t dim() const { return c_.size(); }
  std::span<const double> components() const { return c_; }
  double operator[](std::size_t i) const { return c_[i]; }
  DirectionN operator-() const;

 private:
  std::vector<double> c_;
};

// Round cone {x : (x - u).beta = |x - u| cos psi} with psi in (0, pi).
class Cone {
 public:
  Cone(std::vector<double> vertex, DirectionN axis, double opening);

  std::size_t dim() const { return vertex_.size(); }
  std::span<const double> vertex() const { return vertex_; }
  const DirectionN& axis() const { return axis_; }
  double opening() const { return opening_; }

 private:
  std::vector<double> vertex_;
  DirectionN axis_;
  double opening_;
};

// |(x - u).beta - |x - u| cos psi| <= tol (1 + |x - u|).
bool cone_contains(const Cone& cone, std::span<const double> x, double tol);

// (u, beta, psi) -> (u, -beta, pi - psi). An involution.
Cone reflect_cone(const Cone& cone);

// Area of the unit sphere S^{n-1} in R^n: 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n);

// Square raster covering [-L, L]^2 with pixel centers at -L + (i + 0.5) h,
// h = 2L / n_px.
struct GridSpec {
  int n_px = 0;
  double half_extent = 1.0;

  double pixel() const { return 2.0 * half_extent / n_px; }
  double center(int i) const { return -half_extent + (i + 0.5) * pixel(); }
  Vec2 point(int ix, int iy) const { return {center(ix), center(iy)}; }
  void validate() const;
};

// Row-major image; values[iy * n_px + ix] is the pixel at (center(ix),
// center(iy)).
class ImageGrid {
 public:
  explicit ImageGrid(GridSpec spec);
  ImageGrid(GridSpec spec, std::vector<double> values);

  const GridSpec& spec() const { return spec_; }
  int n_px() const { return spec_.n_px; }
  double& at(int ix, int iy) { return values_[index(ix, iy)]; }
  double at(int ix, int iy) const { return values_[index(ix, iy)]; }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

 private:
  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * spec_.n_px + ix;
  }

  GridSpec spec_;
  std::vector<double> values_;
};

// Angles theta_j = j pi / n_theta on [0, pi); offsets s_i = -S + i ds with
// ds = 2S / (n_s - 1), endpoints included. The normal of line (j, i) is
// unit_vector(theta_j).
struct RadonLattice {
  int n_theta = 0;
  int n_s = 0;
  double s_max = 1.0;

  double dtheta() const { return kPi / n_theta; }
  double theta(int j) const { return j * dtheta(); }
  double ds() const { return 2.0 * s_max / (n_s - 1); }
  double s(int i) const { return -s_max + i * ds(); }
  void validate() const;
};

class RadonSinogram {
 public:
  explicit RadonSinogram(RadonLattice lattice);
  RadonSinogram(RadonLattice lattice, std::vector<double> values);

  const RadonLattice& lattice() const { return lattice_; }
  double& at(int j, int i) { return values_[index(j, i)]; }
  double at(int j, int i) const { return values_[index(j, i)]; }
  std::span<double> row(int j) {
    return std::span<double>(values_).subspan(index(j, 0), lattice_.n_s);
  }
  std::span<const double> row(int j) const {
    return std::span<const double>(values_).subspan(index(j, 0), lattice_.n_s);
  }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

 private:
  std::size_t index(int j, int i) const {
    return static_cast<std::size_t>(j) * lattice_.n_s + i;
  }

  RadonLattice lattice_;
  std::vector<double> values_;
};

// Axis angles phi_j = 2 pi j / n_beta; openings at midpoints
// psi_k = (k + 0.5) pi / n_psi so that 0 and pi are never sampled.
struct ConeLattice {
  int n_beta = 0;
  int n_psi = 0;

  double dphi() const { return kTwoPi / n_beta; }
  double phi(int j) const { return j * dphi(); }
  double dpsi() const { return kPi / n_psi; }
  double psi(int k) const { return (k + 0.5) * dpsi(); }
  void validate() const;
};

// values[(v * n_beta + j) * n_psi + k] = Cf(u_v, beta(phi_j), psi_k).
class ConeSinogram {
 public:
  ConeSinogram(std::vector<Vec2> vertices, ConeLattice lattice);
  ConeSinogram(std::vector<Vec2> vertices, ConeLattice lattice,
               std::vector<double> values);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  const ConeLattice& lattice() const { return lattice_; }
  std::size_t block_size() const {
    return static_cast<std::size_t>(lattice_.n_beta) * lattice_.n_psi;
  }
  double& at(std::size_t v, int j, int k) { return values_[index(v, j, k)]; }
  double at(std::size_t v, int j, int k) const {
    return values_[index(v, j, k)];
  }
  // n_beta x n_psi block of one vertex, beta-major.
  std::span<double> block(std::size_t v) {
    return std::span<double>(values_).subspan(v * block_size(), block_size());
  }
  std::span<const double> block(std::size_t v) const {
    return std::span<const double>(values_).subspan(v * block_size(),
                                                    block_size());
  }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

 private:
  std::size_t index(std::size_t v, int j, int k) const {
    return (v * lattice_.n_beta + j) * lattice_.n_psi + k;
  }

  std::vector<Vec2> vertices_;
  ConeLattice lattice_;
  std::vector<double> values_;
};

}  // namespace conetomo

#endif  // CONETOMO_GEOMETRY_HPP_
