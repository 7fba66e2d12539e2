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

// Thin RAII wrappers over FFTW real transforms. Plans are made with
// FFTW_ESTIMATE so results do not depend on run-time measurements. A wrapper
// instance is not reentrant; give each thread its own.

#ifndef CONETOMO_SRC_FFT_HPP_
#define CONETOMO_SRC_FFT_HPP_

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace conetomo::detail {

class RealFft1d {
 public:
  explicit RealFft1d(int n);
  ~RealFft1d();
  RealFft1d(const RealFft1d&) = delete;
  RealFft1d& operator=(const RealFft1d&) = delete;

  int size() const { return n_; }
  int spectrum_size() const { return n_ / 2 + 1; }

  void forward(std::span<const double> in,
               std::span<std::complex<double>> out);
  // Unnormalized: inverse(forward(x)) == n * x.
  void inverse(std::span<const std::complex<double>> in,
               std::span<double> out);

 private:
  int n_;
  double* real_ = nullptr;
  void* spec_ = nullptr;
  void* fwd_ = nullptr;
  void* inv_ = nullptr;
};

// n0 x n1 row-major real array (n1 fastest).
class RealFft2d {
 public:
  RealFft2d(int n0, int n1);
  ~RealFft2d();
  RealFft2d(const RealFft2d&) = delete;
  RealFft2d& operator=(const RealFft2d&) = delete;

  int rows() const { return n0_; }
  int cols() const { return n1_; }
  int spectrum_cols() const { return n1_ / 2 + 1; }

  void forward(std::span<const double> in,
               std::span<std::complex<double>> out);
  // Unnormalized: inverse(forward(x)) == n0 * n1 * x.
  void inverse(std::span<const std::complex<double>> in,
               std::span<double> out);

 private:
  int n0_;
  int n1_;
  double* real_ = nullptr;
  void* spec_ = nullptr;
  void* fwd_ = nullptr;
  void* inv_ = nullptr;
};

// Applies a real, even Fourier multiplier to samples of a function on the
// circle: harmonic m (0 <= m <= M/2) is scaled by multiplier(m).
std::vector<double> apply_circle_multiplier(
    std::span<const double> samples,
    const std::function<double(int)>& multiplier);

}  // namespace conetomo::detail

#endif  // CONETOMO_SRC_FFT_HPP_
