#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "varregion/io.hpp"

using varregion::cli::run;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> csv_rows(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream fields(line);
    std::string f;
    while (std::getline(fields, f, ',')) row.push_back(std::stod(f));
    rows.push_back(row);
  }
  return rows;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("varregion_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Cli, BoundaryCsv) {
  const Result r = invoke({"boundary", "--samples", "16", "--z0", "0.5,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "theta,re,im");
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 16u);
  EXPECT_NEAR(rows[7][0], 0.0, 1e-15);
  EXPECT_NEAR(rows[7][1], std::log(3.0) - 0.5, 1e-15);
  EXPECT_NEAR(rows[15][0], M_PI, 1e-15);
  EXPECT_NEAR(rows[15][1], 2.0 * std::atan(0.5) - 0.5, 1e-14);
}

TEST(Cli, BoundaryBothReportsDeviation) {
  const Result r = invoke({"boundary", "--gamma", "0.4", "--beta", "0.3", "--lambda", "-0.2,0.3", "--z0",
                           "0.2,0.6", "--samples", "32", "--method", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "theta,re,im,re_quadrature,im_quadrature");
  for (const auto& row : csv_rows(r.out)) {
    ASSERT_EQ(row.size(), 5u);
    EXPECT_LT(std::hypot(row[1] - row[3], row[2] - row[4]), 1e-9);
  }
  ASSERT_EQ(r.err.rfind("max_deviation=", 0), 0u);
  EXPECT_LT(std::stod(r.err.substr(14)), 1e-9);
}

TEST(Cli, BoundaryJsonAndSvg) {
  const Result json = invoke({"boundary", "--samples", "16", "--format", "json", "--class", "G", "--alpha", "2,1"});
  ASSERT_EQ(json.code, 0) << json.err;
  std::istringstream in(json.out);
  const auto doc = varregion::read_json(in);
  EXPECT_EQ(doc.samples.size(), 16u);
  ASSERT_NE(doc.meta.find("alpha_re"), nullptr);
  const Result svg = invoke({"boundary", "--samples", "16", "--format", "svg", "--class", "R"});
  ASSERT_EQ(svg.code, 0) << svg.err;
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
}

TEST(Cli, DegenerateInputsGivePoints) {
  const Result origin = invoke({"boundary", "--z0", "0,0"});
  ASSERT_EQ(origin.code, 0) << origin.err;
  EXPECT_EQ(origin.out, "re,im\n0,0\n");
  const Result unimodular = invoke({"boundary", "--lambda", "1,0", "--format", "json"});
  ASSERT_EQ(unimodular.code, 0) << unimodular.err;
  std::istringstream in(unimodular.out);
  EXPECT_NEAR(varregion::read_json(in).point.real(), 2.0 * std::log(2.0) - 0.5, 1e-15);
}

TEST(Cli, PointCommand) {
  const Result interior = invoke({"point", "--lambda", "0.5,0", "--format", "csv"});
  ASSERT_EQ(interior.code, 0) << interior.err;
  EXPECT_NEAR(csv_rows(interior.out).at(0).at(0), 0.6507282898, 1e-10);
  const Result degenerate = invoke({"point", "--lambda", "1,0", "--beta", "0.5", "--format", "csv"});
  ASSERT_EQ(degenerate.code, 0) << degenerate.err;
  EXPECT_NEAR(csv_rows(degenerate.out).at(0).at(0), std::log(2.0), 1e-15);
}

TEST(Cli, GrowthAndDisk) {
  const Result g = invoke({"growth", "--z", "0.5,0", "--format", "csv"});
  ASSERT_EQ(g.code, 0) << g.err;
  const auto gr = csv_rows(g.out).at(0);
  EXPECT_NEAR(gr[0], 17.0 / 15.0, 1e-15);
  EXPECT_NEAR(gr[2], 8.0 / 15.0, 1e-15);
  const Result d = invoke({"diskbound", "--format", "csv"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_NEAR(csv_rows(d.out).at(0).at(2), std::atanh(0.5) - std::atan(0.5), 1e-13);
}

TEST(Cli, ValidationErrors) {
  EXPECT_EQ(invoke({"boundary", "--samples", "4"}).code, 2);
  EXPECT_EQ(invoke({"boundary", "--beta", "1.5"}).code, 2);
  EXPECT_EQ(invoke({"boundary", "--lambda", "0.3"}).code, 2);
  EXPECT_EQ(invoke({"boundary", "--lambda", "a,b"}).code, 2);
  EXPECT_EQ(invoke({"boundary", "--z0", "1.2,0"}).code, 2);
  EXPECT_EQ(invoke({"boundary", "--method", "magic"}).code, 2);
  EXPECT_EQ(invoke({"boundary", "--format", "png"}).code, 2);
  EXPECT_EQ(invoke({"boundary", "--class", "R", "--gamma", "0.2"}).code, 2);
  EXPECT_EQ(invoke({"boundary", "--class", "G", "--alpha", "-1,0"}).code, 2);
  EXPECT_EQ(invoke({"diskbound", "--lambda", "1,0"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--trials", "-1"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--trials", "0"}).code, 2);
  EXPECT_EQ(invoke({"nonsense"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
}

TEST(Cli, ToleranceEnvironment) {
  ::setenv("VARREGION_TOL", "1e-20", 1);
  EXPECT_EQ(invoke({"boundary", "--samples", "16", "--method", "quadrature"}).code, 2);
  ::setenv("VARREGION_TOL", "1e-8", 1);
  EXPECT_EQ(invoke({"boundary", "--samples", "16", "--method", "quadrature"}).code, 0);
  ::unsetenv("VARREGION_TOL");
}

TEST(Cli, HelpExitsCleanly) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("boundary"), std::string::npos);
}

TEST(Cli, VerifyIsDeterministicAcrossThreads) {
  const Result a = invoke({"verify", "--seed", "9", "--trials", "2", "--threads", "1"});
  const Result b = invoke({"verify", "--seed", "9", "--trials", "2", "--threads", "4"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const Result json = invoke({"verify", "--seed", "9", "--trials", "2", "--format", "json"});
  EXPECT_EQ(json.code, 0);
  EXPECT_EQ(json.out.front(), '{');
}

TEST(Cli, Table1WritesFiles) {
  const fs::path dir = scratch_dir("table1");
  const Result r = invoke({"table1", "--samples", "64", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  for (int k = 1; k <= 5; ++k) {
    for (const char* klass : {"P", "G"}) {
      const fs::path file = dir / ("table1_row" + std::to_string(k) + "_" + klass + ".csv");
      ASSERT_TRUE(fs::exists(file)) << file;
      std::ifstream in(file);
      EXPECT_EQ(varregion::read_curve_csv(in).samples.size(), 64u);
    }
  }
  EXPECT_NE(r.out.find("row 5 G: convex=yes simple=yes"), std::string::npos) << r.out;
  fs::remove_all(dir);
}

TEST(Cli, OutFileMatchesStdout) {
  const fs::path dir = scratch_dir("out");
  fs::create_directories(dir);
  const fs::path file = dir / "curve.json";
  const Result to_file = invoke({"boundary", "--samples", "20", "--format", "json", "--out", file.string()});
  ASSERT_EQ(to_file.code, 0) << to_file.err;
  EXPECT_TRUE(to_file.out.empty());
  std::ifstream in(file, std::ios::binary);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(written, invoke({"boundary", "--samples", "20", "--format", "json"}).out);
  fs::remove_all(dir);
}
