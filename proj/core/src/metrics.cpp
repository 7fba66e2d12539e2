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

#include "conetomo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace conetomo {

double rel_l2(const ImageGrid& image, const ImageGrid& truth) {
  if (image.n_px() != truth.n_px()) {
    throw std::invalid_argument("rel_l2: raster sizes differ");
  }
  double num = 0.0;
  double den = 0.0;
  const auto a = image.values();
  const auto b = truth.values();
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - b[i]) * (a[i] - b[i]);
    den += b[i] * b[i];
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
  return std::sqrt(num / den);
}

PlateauReport disk_plateaus(const Phantom& phantom, const ImageGrid& image,
                            double erosion_px) {
  if (!phantom.blobs().empty() || phantom.disks().size() > 32) {
    throw std::invalid_argument(
        "disk_plateaus: phantom must consist of at most 32 disks");
  }
  const GridSpec& grid = image.spec();
  const double margin = erosion_px * grid.pixel();
  const auto& disks = phantom.disks();

  struct Sum {
    double value = 0.0;
    std::size_t count = 0;
  };
  std::map<unsigned, Sum> sums;
  std::vector<double> background;
  for (int iy = 0; iy < grid.n_px; ++iy) {
    for (int ix = 0; ix < grid.n_px; ++ix) {
      const Vec2 p = grid.point(ix, iy);
      unsigned mask = 0;
      bool near_edge = false;
      for (std::size_t i = 0; i < disks.size(); ++i) {
        const double d = norm(p - disks[i].center) - disks[i].radius;
        if (std::abs(d) <= margin) near_edge = true;
        if (d < 0.0) mask |= 1u << i;
      }
      if (near_edge) continue;
      const double v = image.at(ix, iy);
      sums[mask].value += v;
      ++sums[mask].count;
      if (mask == 0) background.push_back(std::abs(v));
    }
  }

  PlateauReport report;
  for (const auto& [mask, sum] : sums) {
    double truth = 0.0;
    for (std::size_t i = 0; i < disks.size(); ++i) {
      if (mask & (1u << i)) truth += disks[i].density;
    }
    report.regions.push_back(
        {mask, truth, sum.value / sum.count, sum.count});
  }
  if (!background.empty()) {
    const auto k = static_cast<std::size_t>(
        std::ceil(0.99 * static_cast<double>(background.size()))) - 1;
    std::nth_element(background.begin(), background.begin() + k,
                     background.end());
    report.background_p99_abs = background[k];
  }
  return report;
}

}  // namespace conetomo
