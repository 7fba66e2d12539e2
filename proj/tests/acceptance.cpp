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

// Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Everything runs on a single thread so the reported
// runtimes are single-core timings.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "conetomo/cone.hpp"
#include "conetomo/inversion.hpp"
#include "conetomo/io.hpp"
#include "conetomo/metrics.hpp"
#include "conetomo/phantom.hpp"
#include "conetomo/spherical.hpp"
#include "conetomo/suite.hpp"

namespace conetomo {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Identity suite on 10 seeded phantoms within 5 minutes.
Outcome identity_suite() {
  const auto t0 = Clock::now();
  const std::vector<SuiteRow> rows = run_identity_suite(SuiteOptions{});
  const double t = seconds_since(t0);
  int failed = 0;
  double worst = 0.0;
  for (const SuiteRow& r : rows) {
    failed += !r.pass;
    worst = std::max(worst, r.check.rel_err);
  }
  std::ostringstream d;
  d << rows.size() - failed << "/" << rows.size() << " rows pass, max rel_err "
    << fmt("%.2e", worst) << ", " << fmt("%.1f", t) << " s";
  return {failed == 0 && t <= 300.0, d.str()};
}

// Cosine-transform eigenvalues, odd annihilation and the inversion identity.
Outcome spectral_suite() {
  const int size = 512;
  double eig_err = 0.0;
  double odd_err = 0.0;
  double inv_err = 0.0;
  const double c = cosine_inversion_constant(2);
  for (int m = 0; m <= 9; ++m) {
    for (bool sine : {false, true}) {
      if (m == 0 && sine) continue;
      const CircleFunction in = CircleFunction::from(size, [=](double t) {
        return sine ? std::sin(m * t) : std::cos(m * t);
      });
      const CircleFunction ct = cosine_transform_s1(in);
      if (m % 2 == 1) {
        for (int j = 0; j < size; ++j) {
          odd_err = std::max(odd_err, std::abs(ct[j]));
        }
        continue;
      }
      const double eig = 4.0 * std::cos(m * kPi / 2) / (1.0 - m * m) / kTwoPi;
      const CircleFunction back =
          beltrami_poly_apply(funk_transform_s1(ct), 2, 1);
      for (int j = 0; j < size; ++j) {
        eig_err = std::max(eig_err, std::abs(ct[j] - eig * in[j]) / std::abs(eig));
        inv_err = std::max(inv_err, std::abs(c * back[j] - in[j]));
      }
    }
  }
  std::ostringstream d;
  d << "eigen " << fmt("%.1e", eig_err) << ", odd " << fmt("%.1e", odd_err)
    << ", inversion " << fmt("%.1e", inv_err);
  return {eig_err <= 1e-6 && odd_err <= 1e-10 && inv_err <= 1e-6, d.str()};
}

const CameraConfig kCamera{1.0, 257, 200, 200};
const GridSpec kGrid{256, 1.0};

// Single-disk Compton reconstruction.
Outcome compton_disk() {
  const auto t0 = Clock::now();
  const ComptonResult r = compton_reconstruct(disk_phantom(), kCamera, kGrid);
  const double t = seconds_since(t0);
  const PlateauReport p = disk_plateaus(disk_phantom(), r.image);
  double interior = 0.0;
  for (const PlateauRegion& reg : p.regions) {
    if (reg.mask == 1) interior = reg.mean;
  }
  std::ostringstream d;
  d << "interior mean " << fmt("%.4f", interior) << ", background p99 "
    << fmt("%.4f", p.background_p99_abs) << ", " << fmt("%.1f", t) << " s";
  return {std::abs(interior - 1.0) <= 0.05 && p.background_p99_abs <= 0.05 &&
              t <= 900.0,
          d.str()};
}

// Two-disk Compton reconstruction: plateaus 0.3, 0.7 and the overlap 1.0.
Outcome compton_two_disks() {
  const Phantom phantom = two_disk_phantom();
  const ComptonResult r = compton_reconstruct(phantom, kCamera, kGrid);
  const PlateauReport p = disk_plateaus(phantom, r.image);
  bool pass = true;
  int found = 0;
  std::ostringstream d;
  for (const PlateauRegion& reg : p.regions) {
    if (reg.mask == 0) continue;
    ++found;
    pass = pass && std::abs(reg.mean - reg.truth) <= 0.07;
    d << (found > 1 ? ", " : "") << fmt("%.2f", reg.truth) << " -> "
      << fmt("%.4f", reg.mean);
  }
  return {pass && found == 3, d.str()};
}

// Mu-weighted (uniform and delta) and sine-weighted inversions of a
// Gaussian blob.
Outcome direct_inversions() {
  const Phantom blob({}, {{{0.0, 0.0}, 0.25, 1.0}});
  const GridSpec grid{128, 1.0};
  const ImageGrid truth = rasterize(blob, grid);
  const ImageGrid uni =
      invert_mu_weighted(blob, grid, MuWeight::uniform(64), 256);
  const ImageGrid del =
      invert_mu_weighted(blob, grid, MuWeight::delta(64, 0), 256);
  const ImageGrid sine = invert_sine_weighted(blob, grid, 64, 256);
  const double e_uni = rel_l2(uni, truth);
  const double e_del = rel_l2(del, truth);
  const double e_sine = rel_l2(sine, truth);
  const double agree = std::max(rel_l2(uni, sine), rel_l2(del, sine));
  std::ostringstream d;
  d << "uniform " << fmt("%.4f", e_uni) << ", delta " << fmt("%.4f", e_del)
    << ", sine " << fmt("%.4f", e_sine) << ", agreement "
    << fmt("%.4f", agree);
  return {e_uni <= 0.05 && e_del <= 0.05 && e_sine <= 0.05 && agree <= 0.03,
          d.str()};
}

// Evenness, shift and rotation equivariance of the forward transform.
Outcome invariances() {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> pos(-1.5, 1.5);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::uniform_real_distribution<double> open(0.01, kPi - 0.01);
  double even = 0.0;
  double shift = 0.0;
  double rot = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Phantom p = random_phantom(rng);
    const Vec2 u{pos(rng), pos(rng)};
    const double phi = ang(rng);
    const double psi = open(rng);
    const Vec2 a{pos(rng), pos(rng)};
    const double gamma = ang(rng);
    const double c = cone_analytic_2d(p, u, phi, psi);
    even = std::max(even,
                    std::abs(cone_analytic_2d(p, u, phi + kPi, kPi - psi) - c));
    shift = std::max(
        shift, std::abs(cone_analytic_2d(p.translated(a), u + a, phi, psi) - c));
    rot = std::max(rot, std::abs(cone_analytic_2d(p.rotated(gamma),
                                                  rotate(u, gamma),
                                                  phi + gamma, psi) -
                                 c));
  }
  std::ostringstream d;
  d << "evenness " << fmt("%.1e", even) << ", shift " << fmt("%.1e", shift)
    << ", rotation " << fmt("%.1e", rot);
  return {even <= 1e-10 && shift <= 1e-12 && rot <= 1e-10, d.str()};
}

// Largest Radon value of the phantom over a fine lattice.
double radon_peak(const Phantom& p) {
  double peak = 0.0;
  for (int j = 0; j < 360; ++j) {
    for (int i = 0; i <= 800; ++i) {
      const double s = -2.0 + 4.0 * i / 800;
      peak = std::max(peak,
                      std::abs(radon_analytic(p, Direction2(kPi * j / 360), s)));
    }
  }
  return peak;
}

// Cone-to-Radon conversion at random camera detectors and axis directions.
// The error is relative to max(|Rf|, peak of Rf), so chords near tangency
// (where Rf -> 0) are measured against the data's scale.
Outcome cone_to_radon_pairs() {
  const std::vector<Vec2> detectors = camera_detectors(kCamera);
  const ConeLattice lat = kCamera.lattice();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick_det(0, detectors.size() - 1);
  std::uniform_int_distribution<int> pick_dir(0, lat.n_beta - 1);
  int failed = 0;
  double worst = 0.0;
  for (const Phantom& p : {disk_phantom(), two_disk_phantom()}) {
    const double peak = radon_peak(p);
    for (int k = 0; k < 10; ++k) {
      const Vec2 u = detectors[pick_det(rng)];
      const int j = pick_dir(rng);
      const ConeSinogram data = cone_forward_sinogram(p, {u}, lat);
      const double got = cone_to_radon_even(data.block(0), lat)[j];
      const Direction2 w(lat.phi(j));
      const double truth = radon_analytic(p, w, dot(w.unit(), u));
      const double err =
          std::abs(got - truth) / std::max(std::abs(truth), peak);
      worst = std::max(worst, err);
      failed += err > 1e-2;
    }
  }
  std::ostringstream d;
  d << 20 - failed << "/20 pairs within 1e-2, max " << fmt("%.2e", worst);
  return {failed == 0, d.str()};
}

// Bit-exact read-after-write of both sinogram formats.
Outcome file_round_trip() {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g(0.0, 1e3);
  bool pass = true;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Vec2> vertices(3 + trial);
    for (Vec2& v : vertices) v = {g(rng), g(rng)};
    ConeSinogram cone(vertices, ConeLattice{8 + 4 * trial, 3 + trial});
    for (double& v : cone.values()) v = g(rng);
    std::stringstream cbuf;
    write_cone_sinogram(cbuf, cone);
    const ConeSinogram cr = read_cone_sinogram(cbuf);
    pass = pass && std::equal(cr.values().begin(), cr.values().end(),
                              cone.values().begin(), cone.values().end());
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      pass = pass && cr.vertices()[k] == vertices[k];
    }

    RadonSinogram radon(RadonLattice{5 + trial, 7 + 2 * trial, 1.0 + trial});
    for (double& v : radon.values()) v = g(rng);
    std::stringstream rbuf;
    write_radon_sinogram(rbuf, radon);
    const RadonSinogram rr = read_radon_sinogram(rbuf);
    pass = pass && rr.lattice().s_max == radon.lattice().s_max &&
           std::equal(rr.values().begin(), rr.values().end(),
                      radon.values().begin(), radon.values().end());
  }
  return {pass, "5 CONESG and 5 RADSG arrays"};
}

}  // namespace
}  // namespace conetomo

int main() {
  using namespace conetomo;
  omp_set_num_threads(1);
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"identity suite", identity_suite},
      {"spherical spectral suite", spectral_suite},
      {"Compton reconstruction, single disk", compton_disk},
      {"Compton reconstruction, two disks", compton_two_disks},
      {"direct vertex inversions", direct_inversions},
      {"forward transform invariances", invariances},
      {"cone-to-Radon pointwise", cone_to_radon_pairs},
      {"sinogram file round trip", file_round_trip},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
