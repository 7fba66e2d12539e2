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

#include "conetomo/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>

namespace conetomo {

namespace {

constexpr std::string_view kConeMagic = "CONESG01";
constexpr std::string_view kRadonMagic = "RADSG001";
constexpr std::string_view kImageMagic = "IMGRAW01";

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in) {
  std::array<char, sizeof(T)> bytes;
  if (!in.read(bytes.data(), bytes.size())) {
    throw ConfigError("truncated file");
  }
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

void put_doubles(std::ostream& out, std::span<const double> values) {
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size_bytes()));
  } else {
    for (double v : values) put_le(out, v);
  }
}

void get_doubles(std::istream& in, std::span<double> values) {
  if constexpr (std::endian::native == std::endian::little) {
    if (!in.read(reinterpret_cast<char*>(values.data()),
                 static_cast<std::streamsize>(values.size_bytes()))) {
      throw ConfigError("truncated file");
    }
  } else {
    for (double& v : values) v = get_le<double>(in);
  }
}

void expect_magic(std::istream& in, std::string_view magic) {
  std::array<char, 8> got{};
  if (!in.read(got.data(), got.size()) ||
      std::string_view(got.data(), got.size()) != magic) {
    throw ConfigError("bad magic, expected " + std::string(magic));
  }
}

void check_written(const std::ostream& out, const std::filesystem::path& path) {
  if (!out) throw ConfigError("cannot write " + path.string());
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  return in;
}

std::uint32_t checked_count(std::size_t n) {
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw ConfigError("count does not fit the file format");
  }
  return static_cast<std::uint32_t>(n);
}

int to_int(std::uint32_t n) {
  if (n > static_cast<std::uint32_t>(std::numeric_limits<int>::max())) {
    throw ConfigError("count out of range");
  }
  return static_cast<int>(n);
}

}  // namespace

void write_cone_sinogram(std::ostream& out, const ConeSinogram& sino) {
  const ConeLattice& lat = sino.lattice();
  out.write(kConeMagic.data(), kConeMagic.size());
  put_le(out, checked_count(sino.vertices().size()));
  put_le(out, checked_count(lat.n_beta));
  put_le(out, checked_count(lat.n_psi));
  put_le(out, lat.phi(0));
  put_le(out, lat.dphi());
  put_le(out, lat.psi(0));
  put_le(out, lat.dpsi());
  for (const Vec2& v : sino.vertices()) {
    put_le(out, v.x);
    put_le(out, v.y);
  }
  put_doubles(out, sino.values());
}

ConeSinogram read_cone_sinogram(std::istream& in) {
  expect_magic(in, kConeMagic);
  const auto n_vertices = get_le<std::uint32_t>(in);
  const ConeLattice lat{to_int(get_le<std::uint32_t>(in)),
                        to_int(get_le<std::uint32_t>(in))};
  lat.validate();
  const std::array<double, 4> expected{lat.phi(0), lat.dphi(), lat.psi(0),
                                       lat.dpsi()};
  for (double e : expected) {
    if (get_le<double>(in) != e) {
      throw ConfigError("CONESG: lattice metadata does not match counts");
    }
  }
  std::vector<Vec2> vertices(n_vertices);
  for (Vec2& v : vertices) {
    v.x = get_le<double>(in);
    v.y = get_le<double>(in);
  }
  std::vector<double> values(static_cast<std::size_t>(n_vertices) *
                             lat.n_beta * lat.n_psi);
  get_doubles(in, values);
  return ConeSinogram(std::move(vertices), lat, std::move(values));
}

void write_cone_sinogram(const std::filesystem::path& path,
                         const ConeSinogram& sino) {
  std::ofstream out = open_out(path);
  write_cone_sinogram(out, sino);
  check_written(out, path);
}

ConeSinogram read_cone_sinogram(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  return read_cone_sinogram(in);
}

void write_radon_sinogram(std::ostream& out, const RadonSinogram& sino) {
  const RadonLattice& lat = sino.lattice();
  out.write(kRadonMagic.data(), kRadonMagic.size());
  put_le(out, checked_count(lat.n_theta));
  put_le(out, checked_count(lat.n_s));
  put_le(out, lat.s_max);
  put_doubles(out, sino.values());
}

RadonSinogram read_radon_sinogram(std::istream& in) {
  expect_magic(in, kRadonMagic);
  RadonLattice lat;
  lat.n_theta = to_int(get_le<std::uint32_t>(in));
  lat.n_s = to_int(get_le<std::uint32_t>(in));
  lat.s_max = get_le<double>(in);
  lat.validate();
  std::vector<double> values(static_cast<std::size_t>(lat.n_theta) * lat.n_s);
  get_doubles(in, values);
  return RadonSinogram(lat, std::move(values));
}

void write_radon_sinogram(const std::filesystem::path& path,
                          const RadonSinogram& sino) {
  std::ofstream out = open_out(path);
  write_radon_sinogram(out, sino);
  check_written(out, path);
}

RadonSinogram read_radon_sinogram(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  return read_radon_sinogram(in);
}

void write_raw_image(std::ostream& out, const ImageGrid& image) {
  out.write(kImageMagic.data(), kImageMagic.size());
  put_le(out, checked_count(image.n_px()));
  put_le(out, checked_count(image.n_px()));
  put_doubles(out, image.values());
}

ImageGrid read_raw_image(std::istream& in, double half_extent) {
  expect_magic(in, kImageMagic);
  const int nx = to_int(get_le<std::uint32_t>(in));
  const int ny = to_int(get_le<std::uint32_t>(in));
  if (nx != ny) throw ConfigError("raw image: only square rasters supported");
  const GridSpec spec{nx, half_extent};
  spec.validate();
  std::vector<double> values(static_cast<std::size_t>(nx) * ny);
  get_doubles(in, values);
  return ImageGrid(spec, std::move(values));
}

ImageScaling image_scaling(const ImageGrid& image) {
  const auto values = image.values();
  if (values.empty()) return {};
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return {*lo, *hi};
}

void write_pgm16(std::ostream& out, const ImageGrid& image) {
  const int n = image.n_px();
  const ImageScaling sc = image_scaling(image);
  const double range = sc.max - sc.min;
  out << "P5\n" << n << ' ' << n << "\n65535\n";
  for (int iy = n - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < n; ++ix) {
      std::uint16_t level = 0;
      if (range > 0.0) {
        const double t = (image.at(ix, iy) - sc.min) / range;
        level = static_cast<std::uint16_t>(
            std::lround(std::clamp(t, 0.0, 1.0) * 65535.0));
      }
      const char bytes[2] = {static_cast<char>(level >> 8),
                             static_cast<char>(level & 0xff)};
      out.write(bytes, 2);
    }
  }
}

void write_scaling_csv(std::ostream& out, const ImageGrid& image) {
  const ImageScaling sc = image_scaling(image);
  out << std::setprecision(17);
  out << "key,value\n";
  out << "n_px," << image.n_px() << '\n';
  out << "half_extent," << image.spec().half_extent << '\n';
  out << "pixel," << image.spec().pixel() << '\n';
  out << "min," << sc.min << '\n';
  out << "max," << sc.max << '\n';
  out << "pgm_maxval,65535\n";
}

void write_image_set(const std::filesystem::path& dir, const std::string& stem,
                     const ImageGrid& image) {
  {
    const auto path = dir / (stem + ".raw");
    std::ofstream out = open_out(path);
    write_raw_image(out, image);
    check_written(out, path);
  }
  {
    const auto path = dir / (stem + ".pgm");
    std::ofstream out = open_out(path);
    write_pgm16(out, image);
    check_written(out, path);
  }
  {
    const auto path = dir / (stem + "_scaling.csv");
    std::ofstream out = open_out(path);
    write_scaling_csv(out, image);
    check_written(out, path);
  }
}

}  // namespace conetomo
