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

#include <gtest/gtest.h>

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "conetomo/io.hpp"

namespace conetomo {
namespace {

template <class T>
std::vector<double> copy(std::span<T> v) {
  return {v.begin(), v.end()};
}

void fill_random(std::span<double> values, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 10.0);
  for (double& v : values) v = g(rng);
}

std::uint32_t read_u32_le(const std::string& bytes, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) {
    v = (v << 8) | static_cast<unsigned char>(bytes[at + i]);
  }
  return v;
}

double read_f64_le(const std::string& bytes, std::size_t at) {
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) {
    bits = (bits << 8) | static_cast<unsigned char>(bytes[at + i]);
  }
  double v;
  std::memcpy(&v, &bits, sizeof v);
  return v;
}

ConeSinogram random_cone_sinogram(std::uint64_t seed) {
  ConeSinogram s({{0.1, -0.2}, {1.0, 1.0}, {-1.0, 0.25}}, ConeLattice{8, 5});
  fill_random(s.values(), seed);
  return s;
}

TEST(ConeSinogramFile, RoundTripIsBitExact) {
  const ConeSinogram s = random_cone_sinogram(1);
  std::stringstream buf;
  write_cone_sinogram(buf, s);
  const ConeSinogram r = read_cone_sinogram(buf);
  EXPECT_EQ(r.lattice().n_beta, 8);
  EXPECT_EQ(r.lattice().n_psi, 5);
  ASSERT_EQ(r.vertices().size(), 3u);
  for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(r.vertices()[v], s.vertices()[v]);
  EXPECT_EQ(copy(r.values()), copy(s.values()));
}

TEST(ConeSinogramFile, HeaderLayout) {
  const ConeSinogram s = random_cone_sinogram(2);
  std::stringstream buf;
  write_cone_sinogram(buf, s);
  const std::string bytes = buf.str();
  ASSERT_EQ(bytes.size(), 8 + 12 + 32 + 3 * 16 + 3 * 8 * 5 * 8u);
  EXPECT_EQ(bytes.substr(0, 8), "CONESG01");
  EXPECT_EQ(read_u32_le(bytes, 8), 3u);
  EXPECT_EQ(read_u32_le(bytes, 12), 8u);
  EXPECT_EQ(read_u32_le(bytes, 16), 5u);
  EXPECT_EQ(read_f64_le(bytes, 20), 0.0);
  EXPECT_EQ(read_f64_le(bytes, 28), kTwoPi / 8);
  EXPECT_EQ(read_f64_le(bytes, 36), kPi / 10);
  EXPECT_EQ(read_f64_le(bytes, 44), kPi / 5);
  EXPECT_EQ(read_f64_le(bytes, 52), 0.1);
  EXPECT_EQ(read_f64_le(bytes, 60), -0.2);
  EXPECT_EQ(read_f64_le(bytes, 100), s.values()[0]);
}

TEST(ConeSinogramFile, RejectsMalformedInput) {
  std::stringstream buf;
  write_cone_sinogram(buf, random_cone_sinogram(3));
  const std::string good = buf.str();

  std::string bad_magic = good;
  bad_magic[0] = 'X';
  std::istringstream m(bad_magic);
  EXPECT_THROW(read_cone_sinogram(m), ConfigError);

  std::istringstream t(good.substr(0, good.size() - 1));
  EXPECT_THROW(read_cone_sinogram(t), ConfigError);

  std::istringstream h(good.substr(0, 30));
  EXPECT_THROW(read_cone_sinogram(h), ConfigError);

  // Psi step inconsistent with the count.
  std::string bad_step = good;
  const double step = 0.5;
  std::memcpy(&bad_step[44], &step, sizeof step);
  std::istringstream s(bad_step);
  EXPECT_THROW(read_cone_sinogram(s), ConfigError);
}

TEST(ConeSinogramFile, PathRoundTripAndMissingFile) {
  const auto path =
      std::filesystem::temp_directory_path() / "conetomo_io_test.csg";
  const ConeSinogram s = random_cone_sinogram(4);
  write_cone_sinogram(path, s);
  EXPECT_EQ(copy(read_cone_sinogram(path).values()), copy(s.values()));
  std::filesystem::remove(path);
  EXPECT_THROW(read_cone_sinogram(path), ConfigError);
}

TEST(RadonSinogramFile, RoundTripAndHeader) {
  RadonSinogram s(RadonLattice{6, 9, 1.25});
  fill_random(s.values(), 5);
  std::stringstream buf;
  write_radon_sinogram(buf, s);
  const std::string bytes = buf.str();
  ASSERT_EQ(bytes.size(), 8 + 8 + 8 + 6 * 9 * 8u);
  EXPECT_EQ(bytes.substr(0, 8), "RADSG001");
  EXPECT_EQ(read_u32_le(bytes, 8), 6u);
  EXPECT_EQ(read_u32_le(bytes, 12), 9u);
  EXPECT_EQ(read_f64_le(bytes, 16), 1.25);
  const RadonSinogram r = read_radon_sinogram(buf);
  EXPECT_EQ(r.lattice().n_theta, 6);
  EXPECT_EQ(r.lattice().s_max, 1.25);
  EXPECT_EQ(copy(r.values()), copy(s.values()));

  std::istringstream t(bytes.substr(0, bytes.size() - 8));
  EXPECT_THROW(read_radon_sinogram(t), ConfigError);
  std::istringstream wrong(std::string("CONESG01") + bytes.substr(8));
  EXPECT_THROW(read_radon_sinogram(wrong), ConfigError);
}

TEST(RawImage, RoundTrip) {
  ImageGrid img(GridSpec{7, 1.5});
  fill_random(img.values(), 6);
  std::stringstream buf;
  write_raw_image(buf, img);
  EXPECT_EQ(buf.str().size(), 16 + 49 * 8u);
  EXPECT_EQ(buf.str().substr(0, 8), "IMGRAW01");
  const ImageGrid r = read_raw_image(buf, 1.5);
  EXPECT_EQ(r.n_px(), 7);
  EXPECT_EQ(copy(r.values()), copy(img.values()));
}

TEST(Pgm16, HeaderScalingAndRowOrder) {
  ImageGrid img(GridSpec{2, 1.0});
  // Row iy = 0 is the bottom row.
  img.at(0, 0) = -1.0;
  img.at(1, 0) = 0.0;
  img.at(0, 1) = 1.0;
  img.at(1, 1) = 3.0;
  const ImageScaling sc = image_scaling(img);
  EXPECT_EQ(sc.min, -1.0);
  EXPECT_EQ(sc.max, 3.0);
  std::stringstream buf;
  write_pgm16(buf, img);
  const std::string bytes = buf.str();
  const std::string header = "P5\n2 2\n65535\n";
  ASSERT_EQ(bytes.size(), header.size() + 8);
  EXPECT_EQ(bytes.substr(0, header.size()), header);
  auto sample = [&](int i) {
    const auto* p =
        reinterpret_cast<const unsigned char*>(bytes.data() + header.size());
    return (p[2 * i] << 8) | p[2 * i + 1];
  };
  // Top row first: (1, 3), then (-1, 0).
  EXPECT_EQ(sample(0), static_cast<int>(std::lround(65535 * 0.5)));
  EXPECT_EQ(sample(1), 65535);
  EXPECT_EQ(sample(2), 0);
  EXPECT_EQ(sample(3), static_cast<int>(std::lround(65535 * 0.25)));
}

TEST(Pgm16, ConstantImageIsBlack) {
  ImageGrid img(GridSpec{3, 1.0});
  for (double& v : img.values()) v = 2.5;
  std::stringstream buf;
  write_pgm16(buf, img);
  const std::string bytes = buf.str();
  for (std::size_t i = bytes.size() - 18; i < bytes.size(); ++i) {
    EXPECT_EQ(bytes[i], '\0');
  }
}

TEST(ScalingCsv, Keys) {
  ImageGrid img(GridSpec{4, 2.0});
  img.at(1, 1) = 5.0;
  std::stringstream buf;
  write_scaling_csv(buf, img);
  const std::string text = buf.str();
  for (const char* key : {"n_px,4", "half_extent,2", "pixel,1", "min,0",
                          "max,5", "pgm_maxval,65535"}) {
    EXPECT_NE(text.find(key), std::string::npos) << key << "\n" << text;
  }
}

TEST(ImageSet, WritesThreeFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "conetomo_io_set";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ImageGrid img(GridSpec{4, 1.0});
  fill_random(img.values(), 7);
  write_image_set(dir, "img", img);
  EXPECT_TRUE(std::filesystem::exists(dir / "img.raw"));
  EXPECT_TRUE(std::filesystem::exists(dir / "img.pgm"));
  EXPECT_TRUE(std::filesystem::exists(dir / "img_scaling.csv"));
  std::ifstream raw(dir / "img.raw", std::ios::binary);
  EXPECT_EQ(copy(read_raw_image(raw, 1.0).values()), copy(img.values()));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace conetomo
