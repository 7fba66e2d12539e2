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

#ifndef CONETOMO_TOOLS_COMMANDS_HPP_
#define CONETOMO_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace conetomo::cli {

enum ExitCode : int { kOk = 0, kThresholdFailed = 1, kUsageError = 2 };

// Every parameter of every command; lengths in phantom units.
struct RunConfig {
  std::string phantom;
  std::string out = "out";
  int npx = 256;
  double extent = 1.0;         // image grid covers [-extent, extent]^2
  double camera_extent = 1.0;  // detectors on the boundary of the square
  int perside = 257;
  int nbeta = 200;
  int npsi = 200;
  std::string method = "compton";  // thm2 | thm6 | compton | fbp
  std::string mu = "uniform";      // thm2 axis weight: uniform | delta
  std::string mode = "cone";       // forward: cone | radon
  std::vector<std::string> vertex;  // "x,y"; empty selects the camera
  std::string sinogram;
  int ntheta = 0;  // 0 derives the Radon lattice from the grid
  int ns = 0;
  int extension = 2;
  std::string laplacian = "spectral";  // spectral | fd
  std::uint64_t seed = 1;
  int phantoms = 10;
  std::string identity = "all";
  int n = 0;
  int mmax = 4;
  double max_rel_l2 = -1.0;  // negative: no threshold
  // Whether --nbeta / --npsi were given explicitly.
  bool lattice_given = false;
};

int cmd_phantom(const RunConfig& config);
int cmd_forward(const RunConfig& config);
int cmd_reconstruct(const RunConfig& config);
int cmd_verify(const RunConfig& config);
int cmd_lambda(const RunConfig& config);

}  // namespace conetomo::cli

#endif  // CONETOMO_TOOLS_COMMANDS_HPP_
