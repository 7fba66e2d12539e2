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

#include "conetomo/cone.hpp"

#include <algorithm>
#include <utility>

#include "conetomo/spherical.hpp"
#include "quadrature.hpp"

namespace conetomo {

namespace {

// Gaussians are dropped beyond this many sigmas (exp(-x^2/2) < 1e-16).
constexpr double kBlobCutoffSigmas = 8.6;

Vec3 add_scaled(const Vec3& a, double s, const Vec3& b) {
  return {a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]};
}

// Midpoint sum over psi_k = (k + 1/2) pi / n of weight(psi) Cf(u, phi, psi).
template <typename Weight>
double psi_sum(const Phantom& phantom, Vec2 u, double phi, int n_psi,
               Weight&& weight) {
  const double dpsi = kPi / n_psi;
  double sum = 0.0;
  for (int k = 0; k < n_psi; ++k) {
    const double psi = (k + 0.5) * dpsi;
    sum += weight(psi) * cone_analytic_2d(phantom, u, phi, psi);
  }
  return sum * dpsi;
}

// Integral of Rf(w, w.u) g(w) over the circle, w = unit_vector(angle).
template <typename Weight>
double radon_circle_sum(const Phantom& phantom, Vec2 u, int n_omega,
                        Weight&& weight) {
  return detail::circle_trapezoid(n_omega, [&](double angle) {
    const Direction2 w(angle);
    return weight(angle) * radon_analytic(phantom, w, dot(w.unit(), u));
  });
}

void validate(const IdentityQuadrature& quad) {
  if (quad.n_psi < 2 || quad.n_beta < 4 || quad.n_omega < 8) {
    throw ConfigError("identity quadrature: node counts too small");
  }
}

// int_{|p|}^{r_max} f(u + r w) (r^2 - p^2)^{-1/2} r dr, split at the disk
// boundaries so every piece has a smooth integrand.
double singular_radial_2d(const Phantom& phantom, Vec2 u, Vec2 w, double p,
                          double r_max) {
  const double ap = std::abs(p);
  if (r_max <= ap) return 0.0;
  std::vector<double> cuts{ap, r_max};
  for (const Disk& d : phantom.disks()) {
    if (const auto chord = disk_chord(d, u, w)) {
      for (double r : {chord->first, chord->second}) {
        if (r > ap && r < r_max) cuts.push_back(r);
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  constexpr double kTol = 1e-12;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    if (!(b > a)) continue;
    if (ap == 0.0) {
      total += detail::adaptive(
          [&](double r) { return eval(phantom, u + r * w); }, a, b, kTol);
    } else {
      // r = |p| cosh t: dr / sqrt(r^2 - p^2) = dt.
      total += detail::adaptive(
          [&](double t) {
            const double r = ap * std::cosh(t);
            return eval(phantom, u + r * w) * r;
          },
          std::acosh(a / ap), std::acosh(b / ap), kTol);
    }
  }
  return total;
}

}  // namespace

ConeSinogram cone_forward_sinogram(const Phantom& phantom,
                                   std::vector<Vec2> vertices,
                                   const ConeLattice& lattice) {
  lattice.validate();
  ConeSinogram sino(std::move(vertices), lattice);
  const auto n_vertices = static_cast<std::ptrdiff_t>(sino.vertices().size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t v = 0; v < n_vertices; ++v) {
    const Vec2 u = sino.vertices()[v];
    for (int j = 0; j < lattice.n_beta; ++j) {
      const double phi = lattice.phi(j);
      for (int k = 0; k < lattice.n_psi; ++k) {
        sino.at(v, j, k) = cone_analytic_2d(phantom, u, phi, lattice.psi(k));
      }
    }
  }
  return sino;
}

SupportedFunction3 gaussian_sum_3d(std::vector<GaussianBlob3> blobs) {
  double support = 0.0;
  for (const GaussianBlob3& b : blobs) {
    if (!(b.sigma > 0.0)) throw std::invalid_argument("blob sigma <= 0");
    support = std::max(support, norm(b.center) + kBlobCutoffSigmas * b.sigma);
  }
  auto evaluator = [blobs = std::move(blobs)](const Vec3& x) {
    double value = 0.0;
    for (const GaussianBlob3& b : blobs) {
      const Vec3 d{x[0] - b.center[0], x[1] - b.center[1], x[2] - b.center[2]};
      value += b.amplitude * std::exp(-dot(d, d) / (2.0 * b.sigma * b.sigma));
    }
    return value;
  };
  return SupportedFunction3{std::move(evaluator), support};
}

double gaussian_sum_radon_3d(const std::vector<GaussianBlob3>& blobs,
                             const Vec3& omega, double s) {
  double value = 0.0;
  for (const GaussianBlob3& b : blobs) {
    const double d = s - dot(omega, b.center);
    value += b.amplitude * kTwoPi * b.sigma * b.sigma *
             std::exp(-d * d / (2.0 * b.sigma * b.sigma));
  }
  return value;
}

double cone_forward_3d(const SupportedFunction3& f, const Vec3& u,
                       const Vec3& axis, double psi,
                       const ConeQuadrature3& quad) {
  if (!(psi > 0.0 && psi < kPi)) {
    throw std::domain_error("cone_forward_3d: psi must lie in (0, pi)");
  }
  if (std::abs(norm(axis) - 1.0) > 1e-12) {
    throw std::invalid_argument("cone_forward_3d: axis must be a unit vector");
  }
  Vec3 e1;
  Vec3 e2;
  detail::orthonormal_frame(axis, e1, e2);
  const double sin_psi = std::sin(psi);
  const double cos_psi = std::cos(psi);
  const double rho_max = norm(u) + f.support_radius;
  return detail::circle_trapezoid(quad.omega_nodes, [&](double alpha) {
    const double ca = std::cos(alpha);
    const double sa = std::sin(alpha);
    Vec3 dir;
    for (int i = 0; i < 3; ++i) {
      dir[i] = sin_psi * (ca * e1[i] + sa * e2[i]) + cos_psi * axis[i];
    }
    return detail::adaptive(
        [&](double rho) { return f(add_scaled(u, rho, dir)) * rho * sin_psi; },
        0.0, rho_max, quad.radial_tolerance);
  });
}

double cone_forward_vertical(const SupportedFunction3& f, const Vec3& u,
                             double psi, const ConeQuadrature3& quad) {
  return cone_forward_3d(f, u, Vec3{0.0, 0.0, 1.0}, psi, quad);
}

double radon_3d(const SupportedFunction3& f, const Vec3& omega, double s,
                const PlaneQuadrature3& quad) {
  const double r2 = f.support_radius * f.support_radius - s * s;
  if (r2 <= 0.0) return 0.0;
  const double reach = std::sqrt(r2);
  Vec3 e1;
  Vec3 e2;
  detail::orthonormal_frame(omega, e1, e2);
  const Vec3 foot{s * omega[0], s * omega[1], s * omega[2]};
  return detail::circle_trapezoid(quad.angular_nodes, [&](double alpha) {
    const double ca = std::cos(alpha);
    const double sa = std::sin(alpha);
    const Vec3 dir{ca * e1[0] + sa * e2[0], ca * e1[1] + sa * e2[1],
                   ca * e1[2] + sa * e2[2]};
    return detail::adaptive(
        [&](double rho) { return f(add_scaled(foot, rho, dir)) * rho; }, 0.0,
        reach, quad.radial_tolerance);
  });
}

IdentityCheck make_check(double lhs, double rhs, double scale) {
  const double den = std::max({std::abs(lhs), std::abs(rhs), std::abs(scale)});
  const double rel = den > 0.0 ? std::abs(lhs - rhs) / den : 0.0;
  return IdentityCheck{lhs, rhs, rel};
}

IdentityCheck check_identity_psi_integral(const Phantom& phantom, Vec2 u,
                                          double phi,
                                          const IdentityQuadrature& quad) {
  validate(quad);
  const double lhs =
      psi_sum(phantom, u, phi, quad.n_psi, [](double) { return 1.0; });
  const double rhs =
      0.5 * radon_circle_sum(phantom, u, quad.n_omega,
                             [](double) { return 1.0; });
  return make_check(lhs, rhs);
}

IdentityCheck check_identity_sine_weighted(const Phantom& phantom, Vec2 u,
                                           double phi,
                                           const IdentityQuadrature& quad) {
  validate(quad);
  const double lhs = psi_sum(phantom, u, phi, quad.n_psi,
                             [](double psi) { return std::sin(psi); });
  const Vec2 beta = unit_vector(phi);
  const double rhs =
      kPi / sphere_area(2) *
      radon_circle_sum(phantom, u, quad.n_omega, [&](double angle) {
        return std::abs(dot(unit_vector(angle), beta));
      });
  return make_check(lhs, rhs);
}

IdentityCheck check_identity_bpr(const Phantom& phantom, Vec2 u,
                                 const IdentityQuadrature& quad) {
  validate(quad);
  const double lhs = detail::circle_trapezoid(quad.n_beta, [&](double phi) {
    return psi_sum(phantom, u, phi, quad.n_psi,
                   [](double psi) { return std::sin(psi); });
  });
  const double rhs =
      2.0 * radon_circle_sum(phantom, u, quad.n_omega,
                             [](double) { return 1.0; });
  return make_check(lhs, rhs);
}

IdentityCheck check_sph_harm_relation(const Phantom& phantom, Vec2 u, int m,
                                      HarmonicPart part,
                                      const IdentityQuadrature& quad) {
  validate(quad);
  if (m < 0) throw std::domain_error("check_sph_harm_relation: m < 0");
  auto harmonic = [m, part](double phi) {
    return part == HarmonicPart::kCos ? std::cos(m * phi) : std::sin(m * phi);
  };
  double lhs = 0.0;
  double magnitude = 0.0;
  const double dphi = kTwoPi / quad.n_beta;
  for (int j = 0; j < quad.n_beta; ++j) {
    const double phi = j * dphi;
    const double data = psi_sum(phantom, u, phi, quad.n_psi,
                                [](double psi) { return std::sin(psi); });
    lhs += data * harmonic(phi);
    magnitude += std::abs(data * harmonic(phi));
  }
  lhs *= dphi;
  magnitude *= dphi;
  const double eigen = funk_hecke_lambda(m, 2) / sphere_area(2);
  const double rhs = kPi * eigen *
                     radon_circle_sum(phantom, u, quad.n_omega, harmonic);
  return make_check(lhs, rhs, magnitude);
}

IdentityCheck check_asgeirsson(const Phantom& phantom, Vec2 u, double p,
                               const IdentityQuadrature& quad) {
  validate(quad);
  const double lhs = detail::circle_trapezoid(quad.n_omega, [&](double a) {
    const Direction2 w(a);
    return radon_analytic(phantom, w, p + dot(w.unit(), u));
  });
  const double r_max = norm(u) + phantom.support_radius();
  const double rhs =
      sphere_area(1) *
      detail::circle_trapezoid(quad.n_omega, [&](double a) {
        return singular_radial_2d(phantom, u, unit_vector(a), p, r_max);
      });
  return make_check(lhs, rhs);
}

namespace {

// sum over a Gauss-Legendre (cos theta) x trapezoid (azimuth) grid on S^2.
template <typename F>
double sphere_sum(const SphereQuadrature3& quad, F&& f) {
  const detail::GaussRule rule = detail::gauss_legendre(quad.polar_nodes);
  double total = 0.0;
  for (int i = 0; i < quad.polar_nodes; ++i) {
    const double z = rule.nodes[i];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    total += rule.weights[i] *
             detail::circle_trapezoid(quad.azimuth_nodes, [&](double a) {
               return f(Vec3{rho * std::cos(a), rho * std::sin(a), z});
             });
  }
  return total;
}

}  // namespace

IdentityCheck check_asgeirsson(const SupportedFunction3& f, const Vec3& u,
                               double p, const SphereQuadrature3& quad) {
  const double lhs = sphere_sum(quad, [&](const Vec3& w) {
    return radon_3d(f, w, p + dot(w, u), quad.plane);
  });
  const double ap = std::abs(p);
  const double r_max = norm(u) + f.support_radius;
  const double rhs =
      sphere_area(2) * sphere_sum(quad, [&](const Vec3& w) {
        return detail::adaptive(
            [&](double r) { return f(add_scaled(u, r, w)) * r; }, ap, r_max,
            quad.radial_tolerance);
      });
  return make_check(lhs, rhs);
}

IdentityCheck check_lemma_cone_radon(const SupportedFunction3& f, double psi0,
                                     const LemmaQuadrature3& quad) {
  if (!(psi0 > 0.0 && psi0 < 0.5 * kPi)) {
    throw std::domain_error("check_lemma_cone_radon: psi0 must lie in (0, pi/2)");
  }
  const double c0 = std::cos(psi0);
  const double s0 = std::sin(psi0);
  const Vec3 origin{0.0, 0.0, 0.0};
  // g dpsi = -dtau / sin(psi) under cos(psi) = cos(psi0) sin(tau).
  const double lhs = detail::adaptive(
      [&](double tau) {
        const double psi = std::acos(c0 * std::sin(tau));
        return cone_forward_vertical(f, origin, psi, quad.cone) / std::sin(psi);
      },
      -0.5 * kPi, 0.5 * kPi, quad.tau_tolerance);
  // (cos psi0)^{n-3} / |S^{n-3}| with n = 3.
  const double rhs =
      detail::circle_trapezoid(quad.omega_nodes, [&](double a) {
        const Vec3 normal{c0 * std::cos(a), c0 * std::sin(a), s0};
        return radon_3d(f, normal, 0.0, quad.plane);
      }) /
      sphere_area(1);
  return make_check(lhs, rhs);
}

}  // namespace conetomo
