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

// Binary sinogram and image files. All multi-byte fields are little-endian.
//
//   CONESG: "CONESG01", u32 n_vertices, u32 n_beta, u32 n_psi,
//           f64 beta origin, f64 beta step, f64 psi origin, f64 psi step,
//           n_vertices x (f64 x, f64 y), values (vertex, beta, psi order).
//   RADSG:  "RADSG001", u32 n_theta, u32 n_s, f64 S, values (theta-major).
//   raw image: "IMGRAW01", u32 n, u32 n, values (row-major, y-major).
//
// Readers throw ConfigError on malformed files, including lattice metadata
// that does not match the lattice implied by the counts.

#ifndef CONETOMO_IO_HPP_
#define CONETOMO_IO_HPP_

#include <filesystem>
#include <iosfwd>

#include "conetomo/geometry.hpp"

namespace conetomo {

void write_cone_sinogram(std::ostream& out, const ConeSinogram& sino);
ConeSinogram read_cone_sinogram(std::istream& in);
void write_cone_sinogram(const std::filesystem::path& path,
                         const ConeSinogram& sino);
ConeSinogram read_cone_sinogram(const std::filesystem::path& path);

void write_radon_sinogram(std::ostream& out, const RadonSinogram& sino);
RadonSinogram read_radon_sinogram(std::istream& in);
void write_radon_sinogram(const std::filesystem::path& path,
                          const RadonSinogram& sino);
RadonSinogram read_radon_sinogram(const std::filesystem::path& path);

void write_raw_image(std::ostream& out, const ImageGrid& image);
// The header stores only the pixel count; the extent is supplied.
ImageGrid read_raw_image(std::istream& in, double half_extent);

// Min-max scaling to [0, 65535]; a constant image maps to all zeros.
struct ImageScaling {
  double min = 0.0;
  double max = 0.0;
};
ImageScaling image_scaling(const ImageGrid& image);

// 16-bit binary PGM (P5), big-endian samples, first row at the largest y.
void write_pgm16(std::ostream& out, const ImageGrid& image);

// key,value rows describing the raster and its PGM scaling.
void write_scaling_csv(std::ostream& out, const ImageGrid& image);

// Writes <stem>.raw, <stem>.pgm and <stem>_scaling.csv into dir.
void write_image_set(const std::filesystem::path& dir, const std::string& stem,
                     const ImageGrid& image);

}  // namespace conetomo

#endif  // CONETOMO_IO_HPP_
