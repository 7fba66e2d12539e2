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

#include "conetomo/spherical.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gegenbauer.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include <utility>

#include "fft.hpp"

namespace conetomo {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double kQuadratureTolerance = 1e-14;
constexpr unsigned kQuadratureDepth = 20;

// Legendre polynomial of dimension n (Gegenbauer with index (n - 2) / 2,
// normalized to 1 at t = 1), n >= 3.
double legendre_dim(int m, int n, double t) {
  if (n == 3) return boost::math::legendre_p(m, t);
  const double index = 0.5 * (n - 2);
  return boost::math::gegenbauer(m, index, t) /
         boost::math::gegenbauer(m, index, 1.0);
}

template <typename F>
double integrate(F&& f, double a, double b) {
  return gauss_kronrod<double, 61>::integrate(f, a, b, kQuadratureDepth,
                                               kQuadratureTolerance);
}

// 5-point second difference on the periodic lattice.
std::vector<double> second_difference(std::span<const double> f) {
  const int m = static_cast<int>(f.size());
  const double h = kTwoPi / m;
  std::vector<double> out(m);
  auto at = [&](int j) { return f[((j % m) + m) % m]; };
  for (int j = 0; j < m; ++j) {
    out[j] = (-at(j + 2) + 16.0 * at(j + 1) - 30.0 * at(j) +
              16.0 * at(j - 1) - at(j - 2)) /
             (12.0 * h * h);
  }
  return out;
}

double polynomial_constant(int k, int n) {
  return static_cast<double>((2 * k - 1) * (n - 1 - 2 * k));
}

}  // namespace

CircleFunction::CircleFunction(std::vector<double> samples)
    : samples_(std::move(samples)) {
  if (samples_.size() < 8 || samples_.size() % 2 != 0) {
    throw ConfigError("CircleFunction: sample count must be even and >= 8");
  }
}

CircleFunction CircleFunction::from(int m_count,
                                    const std::function<double(double)>& fn) {
  if (m_count < 0) throw ConfigError("CircleFunction: negative sample count");
  std::vector<double> samples(m_count);
  for (int j = 0; j < m_count; ++j) samples[j] = fn(kTwoPi * j / m_count);
  return CircleFunction(std::move(samples));
}

double cosine_kernel_moment(int m) {
  m = std::abs(m);
  if (m % 2 != 0) return 0.0;
  const double sign = (m / 2) % 2 == 0 ? 1.0 : -1.0;
  return 2.0 * sign / (kPi * (1.0 - double(m) * m));
}

CircleFunction cosine_transform_s1(const CircleFunction& f, CosineRule rule) {
  if (rule == CosineRule::kExactKernel) {
    return CircleFunction(
        detail::apply_circle_multiplier(f.samples(), cosine_kernel_moment));
  }
  const int m = f.size();
  std::vector<double> out(m);
  for (int j = 0; j < m; ++j) {
    double sum = 0.0;
    for (int k = 0; k < m; ++k) {
      sum += f[k] * std::abs(std::cos(f.angle(k) - f.angle(j)));
    }
    out[j] = sum / m;
  }
  return CircleFunction(std::move(out));
}

CircleFunction funk_transform_s1(const CircleFunction& f) {
  const int m = f.size();
  if (m % 4 != 0) {
    throw ConfigError("funk_transform_s1: sample count must be divisible by 4");
  }
  const int quarter = m / 4;
  std::vector<double> out(m);
  for (int j = 0; j < m; ++j) {
    out[j] = 0.5 * (f[(j + quarter) % m] + f[(j - quarter + m) % m]);
  }
  return CircleFunction(std::move(out));
}

double beltrami_poly_multiplier(int m, int n, int r) {
  const double eigen = double(m) * (m + n - 2);
  double product = std::pow(4.0, -r);
  for (int k = 0; k < r; ++k) product *= eigen + polynomial_constant(k, n);
  return product;
}

CircleFunction beltrami_poly_apply(const CircleFunction& f, int n, int r,
                                   const BeltramiOptions& options) {
  if (r < 0) throw std::invalid_argument("beltrami_poly_apply: r < 0");
  if (options.mode == LaplacianMode::kSpectral) {
    const int cutoff = options.cutoff < 0 ? f.size() / 2 : options.cutoff;
    return CircleFunction(detail::apply_circle_multiplier(
        f.samples(), [&](int m) {
          if (m > cutoff) return 0.0;
          double product = std::pow(4.0, -r);
          for (int k = 0; k < r; ++k) {
            product *= double(m) * m + polynomial_constant(k, n);
          }
          return product;
        }));
  }
  std::vector<double> g(f.samples().begin(), f.samples().end());
  for (int k = 0; k < r; ++k) {
    const std::vector<double> lap = second_difference(g);
    const double c = polynomial_constant(k, n);
    for (std::size_t j = 0; j < g.size(); ++j) {
      g[j] = 0.25 * (-lap[j] + c * g[j]);
    }
  }
  return CircleFunction(std::move(g));
}

double funk_hecke_lambda(int m, int n) {
  if (m < 0) throw std::domain_error("funk_hecke_lambda: m must be >= 0");
  if (n < 2) throw std::domain_error("funk_hecke_lambda: n must be >= 2");
  if (n == 2) {
    // t = cos(theta) absorbs the weight (1 - t^2)^{-1/2}.
    auto integrand = [m](double theta) {
      return std::abs(std::cos(theta)) * std::cos(m * theta);
    };
    return sphere_area(1) *
           (integrate(integrand, 0.0, 0.5 * kPi) +
            integrate(integrand, 0.5 * kPi, kPi));
  }
  const double exponent = 0.5 * (n - 3);
  auto integrand = [m, n, exponent](double t) {
    return std::abs(t) * legendre_dim(m, n, t) *
           std::pow(1.0 - t * t, exponent);
  };
  return sphere_area(n - 1) *
         (integrate(integrand, -1.0, 0.0) + integrate(integrand, 0.0, 1.0));
}

double cosine_inversion_constant(int n) {
  if (n < 2) throw std::domain_error("cosine_inversion_constant: n < 2");
  return -kPi * std::pow(2.0, n - 1) / std::tgamma(n - 1.0);
}

}  // namespace conetomo
