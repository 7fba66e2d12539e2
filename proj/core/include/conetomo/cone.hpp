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

// Forward cone transforms and executable checks of the integral relations
// between cone and Radon data.
//
// Every check evaluates both sides of a relation by independent quadrature
// and returns them together with their relative difference. Planar checks
// take an analytic Phantom; three-dimensional checks take a compactly
// supported callable.

#ifndef CONETOMO_CONE_HPP_
#define CONETOMO_CONE_HPP_

#include <functional>
#include <vector>

#include "conetomo/geometry.hpp"
#include "conetomo/phantom.hpp"

namespace conetomo {

// values[v][j][k] = cone_analytic_2d(phantom, vertices[v], phi_j, psi_k).
ConeSinogram cone_forward_sinogram(const Phantom& phantom,
                                   std::vector<Vec2> vertices,
                                   const ConeLattice& lattice);

// A function on R^3 that vanishes outside the ball of radius support_radius
// about the origin.
struct SupportedFunction3 {
  std::function<double(const Vec3&)> evaluator;
  double support_radius = 0.0;

  double operator()(const Vec3& x) const { return evaluator(x); }
};

struct GaussianBlob3 {
  Vec3 center{};
  double sigma = 0.0;
  double amplitude = 0.0;
};

// Sum of amplitude * exp(-|x - c|^2 / (2 sigma^2)), supported on the ball
// where every blob has decayed below 1e-16 of its amplitude.
SupportedFunction3 gaussian_sum_3d(std::vector<GaussianBlob3> blobs);

// Closed-form plane integral of a Gaussian sum over {x . omega = s}.
double gaussian_sum_radon_3d(const std::vector<GaussianBlob3>& blobs,
                             const Vec3& omega, double s);

struct ConeQuadrature3 {
  // Trapezoid nodes around the cone's circular cross-section.
  int omega_nodes = 128;
  double radial_tolerance = 1e-10;
};

// int_0^inf int_{S^1} f(u + rho (sin(psi) w, cos(psi) beta)) rho sin(psi)
// dw drho, where w runs over the unit circle orthogonal to beta.
double cone_forward_3d(const SupportedFunction3& f, const Vec3& u,
                       const Vec3& axis, double psi,
                       const ConeQuadrature3& quad = {});

// cone_forward_3d with axis e_3.
double cone_forward_vertical(const SupportedFunction3& f, const Vec3& u,
                             double psi, const ConeQuadrature3& quad = {});

struct PlaneQuadrature3 {
  int angular_nodes = 64;
  double radial_tolerance = 1e-11;
};

// Plane integral of f over {x . omega = s} by polar quadrature in the plane.
double radon_3d(const SupportedFunction3& f, const Vec3& omega, double s,
                const PlaneQuadrature3& quad = {});

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_err = 0.0;

  bool passes(double tolerance) const { return rel_err <= tolerance; }
};

// |lhs - rhs| / max(|lhs|, |rhs|, scale); zero when all three vanish.
IdentityCheck make_check(double lhs, double rhs, double scale = 0.0);

struct IdentityQuadrature {
  // Midpoint nodes over the opening angle.
  int n_psi = 2000;
  // Trapezoid nodes over the cone axis direction.
  int n_beta = 256;
  // Trapezoid nodes over the Radon normal.
  int n_omega = 4096;
};

// int_0^pi Cf(u, beta(phi), psi) dpsi  vs  (1/2) int_{S^1} Rf(w, u.w) dw.
IdentityCheck check_identity_psi_integral(const Phantom& phantom, Vec2 u,
                                          double phi,
                                          const IdentityQuadrature& quad = {});

// int_0^pi Cf sin(psi) dpsi  vs  (pi / 2pi) int_{S^1} Rf(w, w.u) |w.beta| dw.
IdentityCheck check_identity_sine_weighted(
    const Phantom& phantom, Vec2 u, double phi,
    const IdentityQuadrature& quad = {});

// int_{S^1} int_0^pi Cf sin(psi) dpsi dbeta  vs  2 R#Rf(u).
IdentityCheck check_identity_bpr(const Phantom& phantom, Vec2 u,
                                 const IdentityQuadrature& quad = {});

enum class HarmonicPart { kCos, kSin };

// int int Cf(u, beta, psi) Y_m(beta) sin(psi) dpsi dbeta  vs
// pi (lambda_m / |S^1|) int Rf(w, w.u) Y_m(w) dw, with Y_m = cos(m phi) or
// sin(m phi). The relative error is scaled by max(|lhs|, |rhs|) and the
// integral of Cf |Y_m| sin(psi), so vanishing odd-degree sides compare
// against the size of the data rather than against zero.
IdentityCheck check_sph_harm_relation(const Phantom& phantom, Vec2 u, int m,
                                      HarmonicPart part,
                                      const IdentityQuadrature& quad = {});

// int_{S^1} Rf(w, p + u.w) dw  vs
// |S^0| int_{S^1} int_{|p|}^inf f(u + r w) (r^2 - p^2)^{-1/2} r dr dw,
// the radial endpoint singularity removed by r = |p| cosh(t).
IdentityCheck check_asgeirsson(const Phantom& phantom, Vec2 u, double p,
                               const IdentityQuadrature& quad = {});

struct SphereQuadrature3 {
  // Gauss-Legendre nodes in cos(theta) times trapezoid nodes in azimuth.
  int polar_nodes = 48;
  int azimuth_nodes = 96;
  double radial_tolerance = 1e-11;
  PlaneQuadrature3 plane{};
};

// int_{S^2} Rf(w, p + u.w) dw  vs  |S^1| int_{S^2} int_{|p|}^inf f(u + r w)
// r dr dw.
IdentityCheck check_asgeirsson(const SupportedFunction3& f, const Vec3& u,
                               double p, const SphereQuadrature3& quad = {});

struct LemmaQuadrature3 {
  double tau_tolerance = 1e-9;
  int omega_nodes = 128;
  ConeQuadrature3 cone{};
  PlaneQuadrature3 plane{};
};

// int_{psi0}^{pi - psi0} Cf(0, e_3, psi) (cos^2 psi0 - cos^2 psi)^{-1/2} dpsi
// vs (1 / |S^0|) int_{S^1} Rf(((cos psi0) w, sin psi0), 0) dw, for psi0 in
// (0, pi/2). The left side is integrated in tau with
// cos(psi) = cos(psi0) sin(tau), which removes the endpoint singularity.
IdentityCheck check_lemma_cone_radon(const SupportedFunction3& f, double psi0,
                                     const LemmaQuadrature3& quad = {});

}  // namespace conetomo

#endif  // CONETOMO_CONE_HPP_
