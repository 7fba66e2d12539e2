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

// Reconstruction quality measures.

#ifndef CONETOMO_METRICS_HPP_
#define CONETOMO_METRICS_HPP_

#include <cstddef>
#include <vector>

#include "conetomo/geometry.hpp"
#include "conetomo/phantom.hpp"

namespace conetomo {

// ||image - truth||_2 / ||truth||_2 over the raster.
double rel_l2(const ImageGrid& image, const ImageGrid& truth);

// Pixels of a disk phantom grouped by the set of disks that contain them,
// skipping pixels whose center lies within erosion_px pixels of any disk
// boundary.
struct PlateauRegion {
  unsigned mask = 0;  // bit i set: inside disk i
  double truth = 0.0;
  double mean = 0.0;
  std::size_t pixels = 0;
};

struct PlateauReport {
  // Non-empty regions in increasing mask order; mask 0 is the background.
  std::vector<PlateauRegion> regions;
  // 99th percentile of |value| over the background region.
  double background_p99_abs = 0.0;
};

// Requires a phantom made of at most 32 disks and no Gaussians
// (std::invalid_argument otherwise).
PlateauReport disk_plateaus(const Phantom& phantom, const ImageGrid& image,
                            double erosion_px = 3.0);

}  // namespace conetomo

#endif  // CONETOMO_METRICS_HPP_
