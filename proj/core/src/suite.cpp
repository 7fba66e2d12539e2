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

#include "conetomo/suite.hpp"

#include <algorithm>
#include <cstdio>

namespace conetomo {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Vec2 point_in_disk(std::mt19937_64& rng, double radius) {
  const double r = radius * std::sqrt(uniform(rng, 0.0, 1.0));
  return r * unit_vector(uniform(rng, 0.0, kTwoPi));
}

std::string format_point(const char* fmt, double a, double b, double c = 0.0) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

}  // namespace

Phantom random_phantom(std::mt19937_64& rng) {
  std::vector<Disk> disks(uniform_int(rng, 1, 3));
  for (Disk& d : disks) {
    d.radius = uniform(rng, 0.1, 0.35);
    d.center = point_in_disk(rng, 0.8 - d.radius);
    d.density = uniform(rng, 0.2, 1.0);
  }
  std::vector<GaussianBlob> blobs(uniform_int(rng, 0, 2));
  for (GaussianBlob& g : blobs) {
    g.sigma = uniform(rng, 0.08, 0.2);
    g.center = point_in_disk(rng, 0.4);
    g.amplitude = uniform(rng, 0.2, 1.0);
  }
  return Phantom(std::move(disks), std::move(blobs));
}

std::vector<GaussianBlob3> random_gaussians_3d(std::mt19937_64& rng) {
  std::vector<GaussianBlob3> blobs(uniform_int(rng, 1, 3));
  for (GaussianBlob3& g : blobs) {
    for (double& c : g.center) c = uniform(rng, -0.35, 0.35);
    g.sigma = uniform(rng, 0.1, 0.25);
    g.amplitude = uniform(rng, 0.2, 1.0);
  }
  return blobs;
}

void SuiteOptions::validate() const {
  if (n_phantoms < 0) throw ConfigError("suite: phantom count must be >= 0");
  if (m_max < 0) throw ConfigError("suite: m_max must be >= 0");
  if (dim != 0 && dim != 2 && dim != 3) {
    throw ConfigError("suite: dimension must be 2 or 3");
  }
  const auto& names = identity_names();
  if (identity != "all" &&
      std::find(names.begin(), names.end(), identity) == names.end()) {
    throw ConfigError("suite: unknown identity '" + identity + "'");
  }
}

std::vector<SuiteRow> run_identity_suite(const SuiteOptions& options) {
  options.validate();
  std::mt19937_64 rng(options.seed);
  std::vector<SuiteRow> rows;
  const auto wanted = [&](const char* name, int dim) {
    return (options.identity == "all" || options.identity == name) &&
           (options.dim == 0 || options.dim == dim);
  };
  const auto add = [&](const char* name, int dim, int index, std::string point,
                       const IdentityCheck& check) {
    rows.push_back({name, dim, index, std::move(point), check,
                    check.passes(options.tolerance)});
  };
  const IdentityQuadrature& quad = options.quadrature;

  for (int i = 0; i < options.n_phantoms; ++i) {
    // Every draw happens regardless of the filters so that a row does not
    // depend on which other rows were requested.
    const Phantom phantom = random_phantom(rng);
    const Vec2 u = point_in_disk(rng, 0.9);
    const double phi = uniform(rng, 0.0, kTwoPi);
    const std::vector<GaussianBlob3> blobs = random_gaussians_3d(rng);
    Vec3 u3;
    for (double& c : u3) c = uniform(rng, -0.3, 0.3);

    const std::string at_u_phi =
        format_point("x=%.6f y=%.6f phi=%.6f", u.x, u.y, phi);
    const std::string at_u = format_point("x=%.6f y=%.6f", u.x, u.y);
    if (wanted("psi_integral", 2)) {
      add("psi_integral", 2, i, at_u_phi,
          check_identity_psi_integral(phantom, u, phi, quad));
    }
    if (wanted("sine_weighted", 2)) {
      add("sine_weighted", 2, i, at_u_phi,
          check_identity_sine_weighted(phantom, u, phi, quad));
    }
    if (wanted("bpr", 2)) {
      add("bpr", 2, i, at_u, check_identity_bpr(phantom, u, quad));
    }
    if (wanted("sph_harm", 2)) {
      for (int m = 0; m <= options.m_max; ++m) {
        for (HarmonicPart part : {HarmonicPart::kCos, HarmonicPart::kSin}) {
          if (m == 0 && part == HarmonicPart::kSin) continue;
          add("sph_harm", 2, i,
              at_u + (part == HarmonicPart::kCos ? " cos" : " sin") +
                  " m=" + std::to_string(m),
              check_sph_harm_relation(phantom, u, m, part, quad));
        }
      }
    }
    for (double p : {0.0, 0.2}) {
      if (wanted("asgeirsson", 2)) {
        add("asgeirsson", 2, i, at_u + format_point(" p=%.1f", p, 0.0),
            check_asgeirsson(phantom, u, p, quad));
      }
    }
    const SupportedFunction3 f3 = gaussian_sum_3d(blobs);
    for (double p : {0.0, 0.2}) {
      if (wanted("asgeirsson", 3)) {
        add("asgeirsson", 3, i,
            format_point("x=%.6f y=%.6f z=%.6f", u3[0], u3[1], u3[2]) +
                format_point(" p=%.1f", p, 0.0),
            check_asgeirsson(f3, u3, p));
      }
    }
    for (int k : {6, 4, 3}) {
      if (wanted("lemma", 3)) {
        add("lemma", 3, i, "psi0=pi/" + std::to_string(k),
            check_lemma_cone_radon(f3, kPi / k));
      }
    }
  }
  return rows;
}

}  // namespace conetomo
