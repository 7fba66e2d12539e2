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

// conetomo: phantoms, cone and Radon data, reconstructions and identity
// checks from the command line.
//
//   conetomo <command> [--flag value ...] [--config FILE]
//
// The config file holds `key = value` lines with the flag names as keys;
// flags given on the command line override it. The effective configuration
// is written to <out>/run.cfg.

#include <CLI11.hpp>

#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>

#include "commands.hpp"

namespace {

using conetomo::cli::RunConfig;

void add_options(CLI::App& app, RunConfig& c) {
  app.add_option("--phantom", c.phantom, "Phantom description file");
  app.add_option("--out", c.out, "Output directory")->capture_default_str();
  app.add_option("--npx", c.npx, "Pixels per image side")
      ->capture_default_str();
  app.add_option("--extent", c.extent,
                 "Image grid half extent L ([-L, L]^2)")
      ->capture_default_str();
  app.add_option("--camera-extent", c.camera_extent,
                 "Detector square half extent A")
      ->capture_default_str();
  app.add_option("--perside", c.perside, "Detectors per camera side")
      ->capture_default_str();
  app.add_option("--nbeta", c.nbeta, "Axis directions over [0, 2pi)")
      ->capture_default_str();
  app.add_option("--npsi", c.npsi, "Opening angles over (0, pi)")
      ->capture_default_str();
  app.add_option("--method", c.method,
                 "thm2 (mu-weighted), thm6 (sine-weighted), compton or fbp")
      ->capture_default_str();
  app.add_option("--mu", c.mu, "thm2 axis weight: uniform or delta")
      ->capture_default_str();
  app.add_option("--mode", c.mode, "forward data: cone or radon")
      ->capture_default_str();
  app.add_option("--vertex", c.vertex,
                 "Cone vertex x,y (repeatable; default: camera detectors)");
  app.add_option("--sinogram", c.sinogram,
                 "Input sinogram (CONESG for compton, RADSG for fbp)");
  app.add_option("--ntheta", c.ntheta, "Radon angles over [0, pi); 0: auto")
      ->capture_default_str();
  app.add_option("--ns", c.ns, "Radon offsets; 0: auto")
      ->capture_default_str();
  app.add_option("--extension", c.extension,
                 "Grid enlargement for thm2/thm6 filtering")
      ->capture_default_str();
  app.add_option("--laplacian", c.laplacian,
                 "Beltrami-Laplace realization: spectral or fd")
      ->capture_default_str();
  app.add_option("--seed", c.seed, "Random phantom seed")
      ->capture_default_str();
  app.add_option("--phantoms", c.phantoms, "Random phantoms for verify")
      ->capture_default_str();
  app.add_option("--identity", c.identity,
                 "verify: all, psi_integral, sine_weighted, bpr, sph_harm, "
                 "asgeirsson or lemma")
      ->capture_default_str();
  app.add_option("--n", c.n, "Dimension filter (verify) or dimension (lambda)")
      ->capture_default_str();
  app.add_option("--mmax", c.mmax, "Largest harmonic degree")
      ->capture_default_str();
  app.add_option("--max-rel-l2", c.max_rel_l2,
                 "reconstruct: fail (exit 1) above this rel. L2 error")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = conetomo::cli;
  CLI::App app{"Cone (Compton) transform tomography"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Config file of `key = value` lines");
  RunConfig config;
  add_options(app, config);

  const std::map<std::string, std::pair<std::string,
                                        std::function<int(const RunConfig&)>>>
      commands{
          {"phantom", {"Rasterize a phantom", cli::cmd_phantom}},
          {"forward", {"Simulate cone or Radon data", cli::cmd_forward}},
          {"reconstruct",
           {"Reconstruct an image (thm2, thm6, compton, fbp)",
            cli::cmd_reconstruct}},
          {"verify", {"Check the integral identities", cli::cmd_verify}},
          {"lambda", {"Tabulate Funk-Hecke eigenvalues", cli::cmd_lambda}},
      };
  for (const auto& [name, entry] : commands) {
    app.add_subcommand(name, entry.first)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsageError;
  }
  config.lattice_given =
      app.count("--nbeta") > 0 || app.count("--npsi") > 0;

  const CLI::App* sub = app.get_subcommands().front();
  try {
    std::filesystem::create_directories(config.out);
    std::ofstream echo(std::filesystem::path(config.out) / "run.cfg");
    echo << "# command: " << sub->get_name() << "\n"
         << app.config_to_str(true, false);
    if (!echo) throw std::runtime_error("cannot write run.cfg");
    return commands.at(sub->get_name()).second(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  }
}
