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

// Runs the conetomo executable as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "conetomo/io.hpp"

namespace fs = std::filesystem;

namespace conetomo {
namespace {

const std::string kCli = CONETOMO_CLI_PATH;
const std::string kData = CONETOMO_DATA_DIR;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("conetomo_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Exit status of the CLI with the given arguments; output is discarded.
  int run(const std::string& args, const fs::path& out) const {
    const std::string cmd = "'" + kCli + "' " + args + " --out '" +
                            out.string() + "' > '" +
                            (dir_ / "stdout.txt").string() + "' 2> '" +
                            (dir_ / "stderr.txt").string() + "'";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  int run(const std::string& args) const { return run(args, dir_); }

  std::string read(const fs::path& path) const {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::map<std::string, std::string> report() const {
    std::map<std::string, std::string> kv;
    std::istringstream in(read(dir_ / "report.csv"));
    std::string line;
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      kv[line.substr(0, comma)] = line.substr(comma + 1);
    }
    return kv;
  }

  fs::path dir_;
};

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("nosuchcommand"), 2);
  EXPECT_EQ(run("lambda --npsi notanumber"), 2);
  EXPECT_EQ(run("phantom"), 2);
  EXPECT_EQ(run("phantom --phantom /nonexistent/file"), 2);
  EXPECT_EQ(run("reconstruct --method bogus --phantom " + kData +
                "/disk.phantom"),
            2);
  EXPECT_EQ(run("forward --phantom " + kData + "/disk.phantom --npsi 0"), 2);
  EXPECT_NE(read(dir_ / "stderr.txt").find("error"), std::string::npos);
}

TEST_F(Cli, HelpExitsZero) { EXPECT_EQ(run("--help"), 0); }

TEST_F(Cli, LambdaTable) {
  ASSERT_EQ(run("lambda --mmax 4"), 0);
  const std::string csv = read(dir_ / "lambda.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,m,lambda,lambda_over_area");
  EXPECT_NE(csv.find("\n2,0,"), std::string::npos);
  EXPECT_NE(csv.find("\n2,4,"), std::string::npos);
  EXPECT_EQ(run("lambda --n 5"), 2);
  EXPECT_NE(read(dir_ / "run.cfg").find("# command: lambda"),
            std::string::npos);
}

TEST_F(Cli, PhantomWritesImageSet) {
  ASSERT_EQ(run("phantom --npx 32 --phantom " + kData + "/two_disks.phantom"), 0);
  std::ifstream raw(dir_ / "phantom.raw", std::ios::binary);
  const ImageGrid img = read_raw_image(raw, 1.0);
  EXPECT_EQ(img.n_px(), 32);
  EXPECT_TRUE(fs::exists(dir_ / "phantom.pgm"));
  EXPECT_TRUE(fs::exists(dir_ / "phantom_scaling.csv"));
}

TEST_F(Cli, ForwardConeThenCompton) {
  ASSERT_EQ(run("forward --npx 32 --perside 9 --nbeta 32 --npsi 32 --phantom " +
                kData + "/blob.phantom"),
            0);
  const ConeSinogram data = read_cone_sinogram(dir_ / "cone.csg");
  EXPECT_EQ(data.vertices().size(), 32u);
  EXPECT_EQ(data.lattice().n_beta, 32);

  const std::string sino = (dir_ / "cone.csg").string();
  const fs::path out = dir_ / "rec";
  EXPECT_EQ(run("reconstruct --method compton --npx 32 --sinogram " + sino,
                out),
            0);
  EXPECT_TRUE(fs::exists(out / "recon.raw"));
  // Explicit lattice flags must match the file.
  EXPECT_EQ(run("reconstruct --method compton --npx 32 --nbeta 64 --npsi 32 "
                "--sinogram " + sino,
                out),
            2);
  EXPECT_NE(read(dir_ / "stderr.txt").find("lattice mismatch"),
            std::string::npos);
}

TEST_F(Cli, ForwardConeAtExplicitVertices) {
  ASSERT_EQ(run("forward --nbeta 8 --npsi 4 --vertex 0,0 --vertex 0.5,-1 "
                "--phantom " + kData + "/disk.phantom"),
            0);
  const ConeSinogram data = read_cone_sinogram(dir_ / "cone.csg");
  ASSERT_EQ(data.vertices().size(), 2u);
  EXPECT_EQ(data.vertices()[1], (Vec2{0.5, -1.0}));
  // Every cone from the center of the unit-density disk of radius 0.5 has
  // integral 1.
  for (int j = 0; j < 8; ++j) EXPECT_NEAR(data.at(0, j, 1), 1.0, 1e-12);
  EXPECT_EQ(run("forward --vertex '1;2' --phantom " + kData + "/disk.phantom"),
            2);
}

TEST_F(Cli, FbpFromRadonFileAndThreshold) {
  const std::string ph = " --phantom " + kData + "/disk.phantom";
  ASSERT_EQ(run("forward --mode radon --npx 64 --ntheta 180" + ph), 0);
  const RadonSinogram sino = read_radon_sinogram(dir_ / "radon.rsg");
  EXPECT_EQ(sino.lattice().n_theta, 180);
  const std::string file = (dir_ / "radon.rsg").string();
  ASSERT_EQ(run("reconstruct --method fbp --npx 64 --sinogram " + file + ph),
            0);
  auto kv = report();
  EXPECT_EQ(kv["method"], "fbp");
  EXPECT_NEAR(std::stod(kv["region_1_mean"]), 1.0, 0.05);
  EXPECT_TRUE(kv.count("background_p99_abs"));
  EXPECT_EQ(run("reconstruct --method fbp --npx 64 --max-rel-l2 0.9" + ph), 0);
  EXPECT_EQ(run("reconstruct --method fbp --npx 64 --max-rel-l2 1e-6" + ph), 1);
}

TEST_F(Cli, DirectInversionsWriteReports) {
  const std::string ph = " --phantom " + kData + "/blob.phantom";
  for (const char* m : {"thm2", "thm6"}) {
    ASSERT_EQ(run(std::string("reconstruct --npx 32 --nbeta 64 --npsi 64 "
                              "--method ") + m + ph),
              0)
        << m;
    auto kv = report();
    EXPECT_EQ(kv["method"], m);
    EXPECT_LT(std::stod(kv["rel_l2"]), 0.1) << m;
  }
  EXPECT_EQ(run("reconstruct --npx 32 --nbeta 64 --npsi 64 --method thm2 "
                "--mu delta" + ph),
            0);
  EXPECT_EQ(run("reconstruct --npx 32 --method thm2 --mu other" + ph), 2);
}

TEST_F(Cli, ConfigFileWithFlagOverride) {
  std::ofstream cfg(dir_ / "run.ini");
  cfg << "phantom = " << kData << "/disk.phantom\n"
      << "method = fbp\nnpx = 16\nntheta = 60\n";
  cfg.close();
  ASSERT_EQ(run("reconstruct --config " + (dir_ / "run.ini").string() +
                " --npx 24"),
            0);
  EXPECT_EQ(report()["n_px"], "24");
  EXPECT_EQ(report()["method"], "fbp");
}

TEST_F(Cli, VerifyFiltersAndIsDeterministic) {
  const std::string args =
      "verify --phantoms 2 --seed 9 --identity asgeirsson --n 3";
  ASSERT_EQ(run(args, dir_ / "a"), 0);
  ASSERT_EQ(run(args, dir_ / "b"), 0);
  const std::string a = read(dir_ / "a" / "verify.csv");
  EXPECT_EQ(a, read(dir_ / "b" / "verify.csv"));
  std::istringstream in(a);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "identity,phantom,point,lhs,rhs,rel_err,pass");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(line.rfind("asgeirsson,", 0), 0u) << line;
    EXPECT_NE(line.find(",n=3 "), std::string::npos) << line;
    EXPECT_EQ(line.substr(line.size() - 5), ",pass");
  }
  EXPECT_EQ(rows, 4);
  EXPECT_EQ(run("verify --identity nonsense"), 2);
}

}  // namespace
}  // namespace conetomo
