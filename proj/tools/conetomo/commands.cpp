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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "conetomo/cone.hpp"
#include "conetomo/inversion.hpp"
#include "conetomo/io.hpp"
#include "conetomo/metrics.hpp"
#include "conetomo/phantom.hpp"
#include "conetomo/radon.hpp"
#include "conetomo/spherical.hpp"
#include "conetomo/suite.hpp"

namespace conetomo::cli {

namespace fs = std::filesystem;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

GridSpec grid_of(const RunConfig& c) {
  const GridSpec grid{c.npx, c.extent};
  grid.validate();
  return grid;
}

std::optional<Phantom> phantom_of(const RunConfig& c) {
  if (c.phantom.empty()) return std::nullopt;
  return load_phantom(c.phantom);
}

Phantom require_phantom(const RunConfig& c, const char* why) {
  auto p = phantom_of(c);
  if (!p) throw ConfigError(std::string("--phantom is required ") + why);
  return *p;
}

fs::path out_dir(const RunConfig& c) {
  const fs::path dir(c.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + c.out);
  return dir;
}

std::ofstream open_text(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

Vec2 parse_vertex(const std::string& text) {
  std::istringstream in(text);
  Vec2 v;
  char comma = 0;
  if (!(in >> v.x >> comma >> v.y) || comma != ',' || !(in >> std::ws).eof()) {
    throw ConfigError("bad --vertex '" + text + "', expected x,y");
  }
  return v;
}

CameraConfig camera_of(const RunConfig& c) {
  CameraConfig camera{c.camera_extent, c.perside, c.nbeta, c.npsi};
  camera.validate();
  return camera;
}

// Lattice for analytic Radon data covering the image grid.
RadonLattice radon_lattice_of(const RunConfig& c) {
  const GridSpec grid = grid_of(c);
  const double s_max = c.extent * std::numbers::sqrt2;
  RadonLattice lat{
      c.ntheta > 0 ? c.ntheta : 360,
      c.ns > 0 ? c.ns
               : 2 * static_cast<int>(std::ceil(s_max / grid.pixel())) + 1,
      s_max};
  lat.validate();
  return lat;
}

BeltramiOptions beltrami_of(const RunConfig& c) {
  if (c.laplacian == "spectral") return {LaplacianMode::kSpectral, -1};
  if (c.laplacian == "fd") return {LaplacianMode::kFiniteDifference, -1};
  throw ConfigError("unknown --laplacian '" + c.laplacian + "'");
}

}  // namespace

int cmd_phantom(const RunConfig& c) {
  const Phantom phantom = require_phantom(c, "for 'phantom'");
  const ImageGrid raster = rasterize(phantom, grid_of(c));
  const fs::path dir = out_dir(c);
  write_image_set(dir, "phantom", raster);
  const ImageScaling sc = image_scaling(raster);
  std::cout << "wrote " << (dir / "phantom").string() << ".{raw,pgm}, range ["
            << sc.min << ", " << sc.max << "]\n";
  return kOk;
}

int cmd_forward(const RunConfig& c) {
  const Phantom phantom = require_phantom(c, "for 'forward'");
  if (c.mode == "cone") {
    const ConeLattice lattice{c.nbeta, c.npsi};
    lattice.validate();
    std::vector<Vec2> vertices;
    for (const std::string& v : c.vertex) vertices.push_back(parse_vertex(v));
    if (vertices.empty()) vertices = camera_detectors(camera_of(c));
    const ConeSinogram sino =
        cone_forward_sinogram(phantom, std::move(vertices), lattice);
    const fs::path path = out_dir(c) / "cone.csg";
    write_cone_sinogram(path, sino);
    std::cout << "wrote " << path.string() << ": " << sino.vertices().size()
              << " vertices x " << lattice.n_beta << " x " << lattice.n_psi
              << "\n";
    return kOk;
  }
  if (c.mode == "radon") {
    const RadonLattice lattice = radon_lattice_of(c);
    const RadonSinogram sino =
        sample_sinogram(lattice, [&](Direction2 omega, double s) {
          return radon_analytic(phantom, omega, s);
        });
    const fs::path path = out_dir(c) / "radon.rsg";
    write_radon_sinogram(path, sino);
    std::cout << "wrote " << path.string() << ": " << lattice.n_theta << " x "
              << lattice.n_s << "\n";
    return kOk;
  }
  throw ConfigError("unknown --mode '" + c.mode + "', expected cone or radon");
}

int cmd_reconstruct(const RunConfig& c) {
  const GridSpec grid = grid_of(c);
  const std::optional<Phantom> phantom = phantom_of(c);
  std::vector<std::pair<std::string, std::string>> report{
      {"method", c.method}, {"n_px", std::to_string(c.npx)}};
  std::optional<ImageGrid> image;

  if (c.method == "thm2" || c.method == "thm6") {
    if (!phantom) throw ConfigError("--phantom is required for " + c.method);
    const DirectInversionOptions opts{c.extension, {}};
    if (c.method == "thm6") {
      image = invert_sine_weighted(*phantom, grid, c.nbeta, c.npsi, opts);
    } else if (c.mu == "uniform") {
      image = invert_mu_weighted(*phantom, grid, MuWeight::uniform(c.nbeta),
                                 c.npsi, opts);
    } else if (c.mu == "delta") {
      image = invert_mu_weighted(*phantom, grid, MuWeight::delta(c.nbeta, 0),
                                 c.npsi, opts);
    } else {
      throw ConfigError("unknown --mu '" + c.mu + "'");
    }
  } else if (c.method == "compton") {
    ComptonOptions opts;
    opts.beltrami = beltrami_of(c);
    ComptonResult result = [&] {
      if (!c.sinogram.empty()) {
        const ConeSinogram data = read_cone_sinogram(fs::path(c.sinogram));
        const ConeLattice& lat = data.lattice();
        if (c.lattice_given && (lat.n_beta != c.nbeta || lat.n_psi != c.npsi)) {
          throw ConfigError("lattice mismatch: sinogram is " +
                            std::to_string(lat.n_beta) + " x " +
                            std::to_string(lat.n_psi));
        }
        CameraConfig camera = camera_of(c);
        camera.n_beta = lat.n_beta;
        camera.n_psi = lat.n_psi;
        const RadonLattice radon =
            c.ntheta > 0 ? RadonLattice{c.ntheta,
                                        c.ns > 0 ? c.ns : 2 * c.npx + 1,
                                        c.camera_extent * std::numbers::sqrt2}
                         : default_compton_lattice(camera, grid);
        return compton_reconstruct(data, grid, radon, opts);
      }
      if (!phantom) {
        throw ConfigError("compton needs --phantom or --sinogram");
      }
      return compton_reconstruct(*phantom, camera_of(c), grid, opts);
    }();
    for (const std::string& w : result.warnings) {
      std::cerr << "warning: " << w << "\n";
    }
    report.emplace_back("empty_fraction", num(result.empty_fraction));
    image = std::move(result.image);
  } else if (c.method == "fbp") {
    RadonSinogram sino = [&] {
      if (!c.sinogram.empty()) return read_radon_sinogram(fs::path(c.sinogram));
      if (!phantom) throw ConfigError("fbp needs --phantom or --sinogram");
      return sample_sinogram(radon_lattice_of(c),
                             [&](Direction2 omega, double s) {
                               return radon_analytic(*phantom, omega, s);
                             });
    }();
    image = fbp_radon_inversion(sino, grid);
  } else {
    throw ConfigError("unknown --method '" + c.method +
                      "', expected thm2, thm6, compton or fbp");
  }

  const fs::path dir = out_dir(c);
  write_image_set(dir, "recon", *image);
  int status = kOk;
  if (phantom) {
    const ImageGrid truth = rasterize(*phantom, grid);
    write_image_set(dir, "truth", truth);
    const double err = rel_l2(*image, truth);
    report.emplace_back("rel_l2", num(err));
    if (phantom->blobs().empty() && !phantom->disks().empty()) {
      const PlateauReport plateaus = disk_plateaus(*phantom, *image);
      for (const PlateauRegion& r : plateaus.regions) {
        const std::string key = "region_" + std::to_string(r.mask);
        report.emplace_back(key + "_truth", num(r.truth));
        report.emplace_back(key + "_mean", num(r.mean));
      }
      report.emplace_back("background_p99_abs",
                          num(plateaus.background_p99_abs));
    }
    std::cout << "rel. L2 error " << err << "\n";
    if (c.max_rel_l2 >= 0.0 && err > c.max_rel_l2) {
      std::cerr << "rel. L2 error " << err << " exceeds " << c.max_rel_l2
                << "\n";
      status = kThresholdFailed;
    }
  } else if (c.max_rel_l2 >= 0.0) {
    throw ConfigError("--max-rel-l2 needs --phantom as ground truth");
  }
  std::ofstream out = open_text(dir / "report.csv");
  out << "key,value\n";
  for (const auto& [k, v] : report) out << k << ',' << v << '\n';
  return status;
}

int cmd_verify(const RunConfig& c) {
  SuiteOptions options;
  options.n_phantoms = c.phantoms;
  options.seed = c.seed;
  options.identity = c.identity;
  options.dim = c.n;
  options.m_max = c.mmax;
  options.validate();
  const std::vector<SuiteRow> rows = run_identity_suite(options);
  std::ofstream out = open_text(out_dir(c) / "verify.csv");
  out << "identity,phantom,point,lhs,rhs,rel_err,pass\n";
  int failures = 0;
  for (const SuiteRow& r : rows) {
    out << r.identity << ',' << r.phantom << ",n=" << r.dim << ' ' << r.point
        << ',' << num(r.check.lhs) << ',' << num(r.check.rhs) << ','
        << num(r.check.rel_err) << ',' << (r.pass ? "pass" : "fail") << '\n';
    failures += !r.pass;
  }
  std::cout << rows.size() - failures << "/" << rows.size()
            << " identity checks pass\n";
  return failures == 0 ? kOk : kThresholdFailed;
}

int cmd_lambda(const RunConfig& c) {
  const int n = c.n == 0 ? 2 : c.n;
  if (n != 2 && n != 3) throw ConfigError("lambda: --n must be 2 or 3");
  if (c.mmax < 0) throw ConfigError("lambda: --mmax must be >= 0");
  std::ostringstream csv;
  csv << "n,m,lambda,lambda_over_area\n";
  for (int m = 0; m <= c.mmax; ++m) {
    const double lambda = funk_hecke_lambda(m, n);
    csv << n << ',' << m << ',' << num(lambda) << ','
        << num(lambda / sphere_area(n)) << '\n';
  }
  open_text(out_dir(c) / "lambda.csv") << csv.str();
  std::cout << csv.str();
  return kOk;
}

}  // namespace conetomo::cli
