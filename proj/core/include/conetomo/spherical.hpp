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

// Operators on functions on the unit circle sampled on a uniform lattice:
// cosine transform, Funk transform, polynomials in the Beltrami-Laplace
// operator, and Funk-Hecke eigenvalues of the kernel |t|.
//
// With Ct(g)(w) = (1/|S^{n-1}|) int g(s) |s.w| ds and lambda_m the
// Funk-Hecke eigenvalue of |t|, a degree-m harmonic satisfies
// Ct(Y_m) = (lambda_m / |S^{n-1}|) Y_m.

#ifndef CONETOMO_SPHERICAL_HPP_
#define CONETOMO_SPHERICAL_HPP_

#include <functional>
#include <span>
#include <vector>

#include "conetomo/geometry.hpp"

namespace conetomo {

// Samples over phi_j = 2 pi j / M, j = 0..M-1. M is even and >= 8.
class CircleFunction {
 public:
  explicit CircleFunction(std::vector<double> samples);
  static CircleFunction from(int m_count,
                             const std::function<double(double)>& fn);

  int size() const { return static_cast<int>(samples_.size()); }
  double angle(int j) const { return kTwoPi * j / size(); }
  double operator[](int j) const { return samples_[j]; }
  std::span<const double> samples() const { return samples_; }

 private:
  std::vector<double> samples_;
};

// (1/2pi) int_0^{2pi} |cos t| cos(m t) dt, in closed form: zero for odd m,
// 2 cos(m pi / 2) / (pi (1 - m^2)) for even m.
double cosine_kernel_moment(int m);

enum class CosineRule {
  // Kernel integrated exactly against the trigonometric interpolant of the
  // samples (spectral, exact on harmonics below M/2).
  kExactKernel,
  // Plain rectangle rule (1/2pi)(2pi/M) sum_k f(s_k)|s_k.w_j|.
  kRectangle,
};

CircleFunction cosine_transform_s1(const CircleFunction& f,
                                   CosineRule rule = CosineRule::kExactKernel);

// (Ff)(t_j) = (f(t_j + pi/2) + f(t_j - pi/2)) / 2. Requires M % 4 == 0
// (ConfigError otherwise).
CircleFunction funk_transform_s1(const CircleFunction& f);

enum class LaplacianMode { kSpectral, kFiniteDifference };

struct BeltramiOptions {
  LaplacianMode mode = LaplacianMode::kSpectral;
  // Spectral mode keeps harmonics m <= cutoff and drops the rest; a negative
  // value keeps the full band (M / 2).
  int cutoff = -1;
};

// Multiplier of P_r(Delta_S) on S^{n-1} acting on degree-m harmonics, with
// Delta_S Y_m = -m (m + n - 2) Y_m:
//   4^{-r} prod_{k<r} [m (m + n - 2) + (2k - 1)(n - 1 - 2k)].
double beltrami_poly_multiplier(int m, int n, int r);

// P_r(Delta_S) on the circle lattice. The multiplier is evaluated with the
// circle spectrum (n enters only through the polynomial's constants).
CircleFunction beltrami_poly_apply(const CircleFunction& f, int n, int r,
                                   const BeltramiOptions& options = {});

// lambda_m = |S^{n-2}| int_{-1}^{1} |t| P_m(t) (1 - t^2)^{(n-3)/2} dt with P_m
// the degree-m Legendre polynomial of dimension n normalized to P_m(1) = 1
// (cos(m arccos t) for n = 2), by adaptive quadrature.
double funk_hecke_lambda(int m, int n);

// c = -pi 2^{n-1} / Gamma(n-1), the even-dimension constant of the cosine
// transform inversion f = c P_{n/2}(Delta_S) F Ct(f).
double cosine_inversion_constant(int n);

}  // namespace conetomo

#endif  // CONETOMO_SPHERICAL_HPP_
