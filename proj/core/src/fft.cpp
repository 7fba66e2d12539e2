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

#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <new>
#include <stdexcept>

namespace conetomo::detail {

namespace {

// The FFTW planner is not thread safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

template <typename T>
T* fftw_buffer(std::size_t count) {
  void* p = fftw_malloc(sizeof(T) * count);
  if (p == nullptr) throw std::bad_alloc();
  return static_cast<T*>(p);
}

fftw_plan as_plan(void* p) { return static_cast<fftw_plan>(p); }
fftw_complex* as_complex(void* p) { return static_cast<fftw_complex*>(p); }

}  // namespace

RealFft1d::RealFft1d(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("RealFft1d: n must be >= 1");
  real_ = fftw_buffer<double>(n_);
  spec_ = fftw_buffer<fftw_complex>(spectrum_size());
  std::lock_guard lock(planner_mutex());
  fwd_ = fftw_plan_dft_r2c_1d(n_, real_, as_complex(spec_), FFTW_ESTIMATE);
  inv_ = fftw_plan_dft_c2r_1d(n_, as_complex(spec_), real_, FFTW_ESTIMATE);
}

RealFft1d::~RealFft1d() {
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(as_plan(fwd_));
    fftw_destroy_plan(as_plan(inv_));
  }
  fftw_free(real_);
  fftw_free(spec_);
}

void RealFft1d::forward(std::span<const double> in,
                        std::span<std::complex<double>> out) {
  std::copy_n(in.begin(), n_, real_);
  fftw_execute(as_plan(fwd_));
  const auto* s = reinterpret_cast<const std::complex<double>*>(spec_);
  std::copy_n(s, spectrum_size(), out.begin());
}

void RealFft1d::inverse(std::span<const std::complex<double>> in,
                        std::span<double> out) {
  auto* s = reinterpret_cast<std::complex<double>*>(spec_);
  std::copy_n(in.begin(), spectrum_size(), s);
  fftw_execute(as_plan(inv_));
  std::copy_n(real_, n_, out.begin());
}

RealFft2d::RealFft2d(int n0, int n1) : n0_(n0), n1_(n1) {
  if (n0 < 1 || n1 < 1) throw std::invalid_argument("RealFft2d: bad size");
  real_ = fftw_buffer<double>(static_cast<std::size_t>(n0_) * n1_);
  spec_ = fftw_buffer<fftw_complex>(static_cast<std::size_t>(n0_) *
                                    spectrum_cols());
  std::lock_guard lock(planner_mutex());
  fwd_ = fftw_plan_dft_r2c_2d(n0_, n1_, real_, as_complex(spec_),
                              FFTW_ESTIMATE);
  inv_ = fftw_plan_dft_c2r_2d(n0_, n1_, as_complex(spec_), real_,
                              FFTW_ESTIMATE);
}

RealFft2d::~RealFft2d() {
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(as_plan(fwd_));
    fftw_destroy_plan(as_plan(inv_));
  }
  fftw_free(real_);
  fftw_free(spec_);
}

void RealFft2d::forward(std::span<const double> in,
                        std::span<std::complex<double>> out) {
  std::copy_n(in.begin(), static_cast<std::size_t>(n0_) * n1_, real_);
  fftw_execute(as_plan(fwd_));
  const auto* s = reinterpret_cast<const std::complex<double>*>(spec_);
  std::copy_n(s, static_cast<std::size_t>(n0_) * spectrum_cols(),
              out.begin());
}

void RealFft2d::inverse(std::span<const std::complex<double>> in,
                        std::span<double> out) {
  auto* s = reinterpret_cast<std::complex<double>*>(spec_);
  std::copy_n(in.begin(), static_cast<std::size_t>(n0_) * spectrum_cols(), s);
  fftw_execute(as_plan(inv_));
  std::copy_n(real_, static_cast<std::size_t>(n0_) * n1_, out.begin());
}

std::vector<double> apply_circle_multiplier(
    std::span<const double> samples,
    const std::function<double(int)>& multiplier) {
  const int m_count = static_cast<int>(samples.size());
  RealFft1d fft(m_count);
  std::vector<std::complex<double>> spectrum(fft.spectrum_size());
  fft.forward(samples, spectrum);
  for (int m = 0; m < fft.spectrum_size(); ++m) {
    spectrum[m] *= multiplier(m) / m_count;
  }
  std::vector<double> out(m_count);
  fft.inverse(spectrum, out);
  return out;
}

}  // namespace conetomo::detail
