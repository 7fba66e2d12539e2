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

#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

#include "conetomo/phantom.hpp"
#include "conetomo/suite.hpp"
#include "oracles.hpp"

namespace conetomo {
namespace {

TEST(Eval, ReferenceValues) {
  EXPECT_EQ(eval(disk_phantom(), {0.0, 0.0}), 1.0);
  EXPECT_DOUBLE_EQ(eval(two_disk_phantom(), {0.4, 0.0}), 1.0);
  EXPECT_DOUBLE_EQ(eval(two_disk_phantom(), {-0.3, 0.0}), 0.3);
  EXPECT_DOUBLE_EQ(eval(two_disk_phantom(), {0.7, 0.0}), 0.7);
  EXPECT_EQ(eval(two_disk_phantom(), {3.0, -2.0}), 0.0);
}

TEST(Eval, GaussianProfile) {
  const Phantom p({}, {{{0.1, 0.2}, 0.3, 2.0}});
  EXPECT_DOUBLE_EQ(eval(p, {0.1, 0.2}), 2.0);
  EXPECT_NEAR(eval(p, {0.4, 0.2}), 2.0 * std::exp(-0.5), 1e-15);
}

TEST(Rasterize, InteriorExteriorAndBoundaryPixels) {
  const GridSpec grid{16, 1.0};
  const ImageGrid img = rasterize(disk_phantom(), grid);
  EXPECT_EQ(img.at(8, 8), 1.0);
  EXPECT_EQ(img.at(0, 0), 0.0);
  // Pixel (11, 10) spans x in [0.375, 0.5], y in [0.25, 0.375]; it straddles
  // the circle of radius 0.5.
  double sum = 0.0;
  const double h = grid.pixel();
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const double x = -1.0 + 11 * h + (a + 0.5) * h / 4;
      const double y = -1.0 + 10 * h + (b + 0.5) * h / 4;
      sum += std::hypot(x, y) < 0.5 ? 1.0 : 0.0;
    }
  }
  EXPECT_GT(img.at(11, 10), 0.0);
  EXPECT_LT(img.at(11, 10), 1.0);
  EXPECT_DOUBLE_EQ(img.at(11, 10), sum / 16);
}

TEST(Rasterize, EmptyPhantomIsZero) {
  const ImageGrid img = rasterize(Phantom{}, GridSpec{8, 1.0});
  for (double v : img.values()) EXPECT_EQ(v, 0.0);
}

TEST(RayIntegral, ReferenceValues) {
  const Phantom disk = disk_phantom();
  for (double phi : {0.0, 0.3, 2.0, 4.0}) {
    EXPECT_NEAR(ray_integral(disk, {0.0, 0.0}, Direction2(phi)), 0.5, 1e-15);
  }
  // unit_vector(3 pi / 2) = (-1, 0).
  EXPECT_NEAR(ray_integral(disk, {1.0, 0.0}, Direction2(1.5 * kPi)), 1.0,
              1e-14);
  EXPECT_EQ(ray_integral(disk, {1.0, 0.0}, Direction2(0.0)), 0.0);
  // Pointing away from the disk.
  EXPECT_EQ(ray_integral(disk, {1.0, 0.0}, Direction2(kPi / 2)), 0.0);
}

TEST(RayIntegral, TangentRayHasZeroLength) {
  EXPECT_EQ(ray_integral(disk_phantom(), {0.5, -1.0}, Direction2(0.0)), 0.0);
}

TEST(RayIntegral, MatchesQuadratureOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(-1.2, 1.2);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  for (int i = 0; i < 30; ++i) {
    const Phantom p = random_phantom(rng);
    const Vec2 u{pos(rng), pos(rng)};
    const double phi = ang(rng);
    EXPECT_NEAR(ray_integral(p, u, Direction2(phi)), oracle::ray(p, u, phi),
                1e-9)
        << "case " << i;
  }
}

TEST(RadonAnalytic, ReferenceValues) {
  const Phantom disk = disk_phantom();
  for (double theta : {0.0, 1.0, 3.0}) {
    EXPECT_NEAR(radon_analytic(disk, Direction2(theta), 0.0), 1.0, 1e-15);
  }
  EXPECT_NEAR(radon_analytic(disk, Direction2(0.4), 0.3), 0.8, 1e-14);
  EXPECT_NEAR(oracle::radon(disk, 0.4, 0.3), 0.8, 1e-10);
  EXPECT_EQ(radon_analytic(disk, Direction2(0.4), 0.6), 0.0);
}

TEST(RadonAnalytic, MatchesQuadratureOracleAndIsEven) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> off(-0.9, 0.9);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  for (int i = 0; i < 30; ++i) {
    const Phantom p = random_phantom(rng);
    const double theta = ang(rng);
    const double s = off(rng);
    const double r = radon_analytic(p, Direction2(theta), s);
    EXPECT_NEAR(r, oracle::radon(p, theta, s), 1e-9) << "case " << i;
    EXPECT_NEAR(r, radon_analytic(p, Direction2(theta + kPi), -s), 1e-13);
  }
}

TEST(ConeAnalytic2d, ReferenceValues) {
  const Phantom disk = disk_phantom();
  for (double phi : {0.0, 1.0, 5.0}) {
    for (double psi : {0.1, 1.5, 3.0}) {
      EXPECT_NEAR(cone_analytic_2d(disk, {0.0, 0.0}, phi, psi), 1.0, 1e-15);
    }
  }
  // Vertex above the disk, axis pointing up: both branches miss.
  EXPECT_EQ(cone_analytic_2d(disk, {0.0, 2.0}, 0.0, 0.2), 0.0);
  // Axis pointing down with a narrow opening: both branches cross the disk.
  EXPECT_GT(cone_analytic_2d(disk, {0.0, 2.0}, kPi, 0.1), 1.5);
  EXPECT_THROW(cone_analytic_2d(disk, {0.0, 0.0}, 0.0, 0.0),
               std::domain_error);
  EXPECT_THROW(cone_analytic_2d(disk, {0.0, 0.0}, 0.0, kPi),
               std::domain_error);
}

TEST(ConeAnalytic2d, IsSumOfTwoOracleRays) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> pos(-1.5, 1.5);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::uniform_real_distribution<double> open(0.01, kPi - 0.01);
  for (int i = 0; i < 20; ++i) {
    const Phantom p = random_phantom(rng);
    const Vec2 u{pos(rng), pos(rng)};
    const double phi = ang(rng);
    const double psi = open(rng);
    // Branches along (sin(psi + phi), cos(psi + phi)) and
    // (-sin(psi - phi), cos(psi - phi)).
    const double expected =
        oracle::line_integral(p, u, {std::sin(psi + phi), std::cos(psi + phi)},
                              0.0, 4.0) +
        oracle::line_integral(
            p, u, {-std::sin(psi - phi), std::cos(psi - phi)}, 0.0, 4.0);
    EXPECT_NEAR(cone_analytic_2d(p, u, phi, psi), expected, 1e-9);
  }
}

// Evenness, translation and rotation invariance of the V-line transform.
TEST(ConeAnalytic2d, InvarianceProperties) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> pos(-1.5, 1.5);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::uniform_real_distribution<double> open(0.01, kPi - 0.01);
  for (int i = 0; i < 100; ++i) {
    const Phantom p = random_phantom(rng);
    const Vec2 u{pos(rng), pos(rng)};
    const double phi = ang(rng);
    const double psi = open(rng);
    const double c = cone_analytic_2d(p, u, phi, psi);
    EXPECT_NEAR(cone_analytic_2d(p, u, phi + kPi, kPi - psi), c, 1e-10);
    const Vec2 a{pos(rng), pos(rng)};
    EXPECT_NEAR(cone_analytic_2d(p.translated(a), u + a, phi, psi), c, 1e-12);
    const double gamma = ang(rng);
    EXPECT_NEAR(
        cone_analytic_2d(p.rotated(gamma), rotate(u, gamma), phi + gamma, psi),
        c, 1e-10);
  }
}

TEST(Phantom, SupportRadiusBoundsAllMembers) {
  const Phantom p({{{0.3, 0.4}, 0.2, 1.0}}, {{{-0.1, 0.0}, 0.05, 1.0}});
  EXPECT_NEAR(p.support_radius(), 0.7, 1e-12);
  EXPECT_NEAR(eval(p, 1.01 * p.support_radius() * unit_vector(0.3)), 0.0,
              1e-30);
}

TEST(ParsePhantom, ReadsDisksGaussiansAndComments) {
  std::istringstream in(
      "# two members\n"
      "disk 0.1 -0.2 0.3 0.5   # trailing\n"
      "\n"
      "gauss 0 0 0.25 1.5\n");
  const Phantom p = parse_phantom(in);
  ASSERT_EQ(p.disks().size(), 1u);
  ASSERT_EQ(p.blobs().size(), 1u);
  EXPECT_EQ(p.disks()[0].center.y, -0.2);
  EXPECT_EQ(p.disks()[0].density, 0.5);
  EXPECT_EQ(p.blobs()[0].sigma, 0.25);
  EXPECT_EQ(p.blobs()[0].amplitude, 1.5);
}

TEST(ParsePhantom, RoundTripsThroughFormat) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 10; ++i) {
    const Phantom p = random_phantom(rng);
    std::istringstream in(format_phantom(p));
    const Phantom q = parse_phantom(in);
    ASSERT_EQ(q.disks().size(), p.disks().size());
    ASSERT_EQ(q.blobs().size(), p.blobs().size());
    for (std::size_t k = 0; k < p.disks().size(); ++k) {
      EXPECT_EQ(q.disks()[k].center, p.disks()[k].center);
      EXPECT_EQ(q.disks()[k].radius, p.disks()[k].radius);
      EXPECT_EQ(q.disks()[k].density, p.disks()[k].density);
    }
    for (std::size_t k = 0; k < p.blobs().size(); ++k) {
      EXPECT_EQ(q.blobs()[k].center, p.blobs()[k].center);
      EXPECT_EQ(q.blobs()[k].sigma, p.blobs()[k].sigma);
    }
  }
}

TEST(ParsePhantom, ReportsLineOfMalformedInput) {
  for (const char* text : {"disk 0 0 0.5\n", "disk 0 0 -1 1\n",
                           "blob 0 0 1 1\n", "gauss 0 0 0 1\n",
                           "disk 0 0 1 1 extra\n"}) {
    std::istringstream in(std::string("# ok\n") + text);
    try {
      parse_phantom(in);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const std::runtime_error& e) {
      EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos)
          << e.what();
    }
  }
}

TEST(LoadPhantom, MissingFileThrows) {
  EXPECT_THROW(load_phantom("/nonexistent/phantom.txt"), std::runtime_error);
}

}  // namespace
}  // namespace conetomo
