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

// Seeded random phantoms and the batch of cone/Radon identity checks run on
// them.

#ifndef CONETOMO_SUITE_HPP_
#define CONETOMO_SUITE_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "conetomo/cone.hpp"
#include "conetomo/phantom.hpp"

namespace conetomo {

// One to three disks and zero to two Gaussians inside the disk of radius
// 0.8 about the origin.
Phantom random_phantom(std::mt19937_64& rng);

// One to three Gaussians inside the ball of radius 0.6 about the origin.
std::vector<GaussianBlob3> random_gaussians_3d(std::mt19937_64& rng);

// Identity names accepted by the suite.
inline const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{
      "psi_integral", "sine_weighted", "bpr",
      "sph_harm",     "asgeirsson",    "lemma"};
  return names;
}

struct SuiteOptions {
  int n_phantoms = 10;
  std::uint64_t seed = 1;
  std::string identity = "all";  // "all" or one of identity_names()
  int dim = 0;                   // 0: both, otherwise 2 or 3
  int m_max = 4;
  double tolerance = 1e-3;
  IdentityQuadrature quadrature{};

  // ConfigError on unknown identity, dimension or negative counts.
  void validate() const;
};

struct SuiteRow {
  std::string identity;
  int dim = 2;
  int phantom = 0;
  std::string point;  // sample point description, comma free
  IdentityCheck check;
  bool pass = false;
};

// Rows are ordered by phantom, then identity. Deterministic for a given
// seed on a given standard library.
std::vector<SuiteRow> run_identity_suite(const SuiteOptions& options);

}  // namespace conetomo

#endif  // CONETOMO_SUITE_HPP_
