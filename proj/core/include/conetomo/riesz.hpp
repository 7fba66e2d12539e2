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

#ifndef CONETOMO_RIESZ_HPP_
#define CONETOMO_RIESZ_HPP_

#include "conetomo/geometry.hpp"

namespace conetomo {

// Order alpha of the Riesz potential I^alpha, symbol |xi|^{-alpha}; valid
// for alpha < n.
class RieszOrder {
 public:
  explicit RieszOrder(double alpha, int dim = 2);

  double alpha() const { return alpha_; }
  int dim() const { return dim_; }

 private:
  double alpha_;
  int dim_;
};

struct RieszOptions {
  // The image is embedded in a zero-padded square of pad_factor * n_px
  // pixels per side before the periodic transform. 1 means no padding.
  int pad_factor = 2;
};

// Applies I^alpha on the raster through the discrete Fourier transform,
// with xi the angular frequency. Zero mode: kept for alpha == 0, dropped for
// alpha < 0. For alpha > 0 the symbol has a pole there, so the input must
// have zero mean (std::domain_error otherwise) and the mode is dropped.
ImageGrid riesz_apply_2d(const ImageGrid& image, RieszOrder alpha,
                         const RieszOptions& options = {});

}  // namespace conetomo

#endif  // CONETOMO_RIESZ_HPP_
