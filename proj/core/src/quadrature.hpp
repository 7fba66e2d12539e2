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

#ifndef CONETOMO_SRC_QUADRATURE_HPP_
#define CONETOMO_SRC_QUADRATURE_HPP_

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <vector>

#include "conetomo/geometry.hpp"

namespace conetomo::detail {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule (Newton iteration on P_n).
GaussRule gauss_legendre(int n);

// Adaptive 15-point Gauss-Kronrod on [a, b].
template <typename F>
double adaptive(F&& f, double a, double b, double tolerance) {
  if (!(b > a)) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, 15, tolerance);
}

// (2 pi / n) sum_j f(2 pi j / n).
template <typename F>
double circle_trapezoid(int n, F&& f) {
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += f(kTwoPi * j / n);
  return sum * kTwoPi / n;
}

// Orthonormal pair spanning the plane orthogonal to a unit vector.
void orthonormal_frame(const Vec3& axis, Vec3& e1, Vec3& e2);

}  // namespace conetomo::detail

#endif  // CONETOMO_SRC_QUADRATURE_HPP_
