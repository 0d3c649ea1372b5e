// Copyright 2026 The Toric QET Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qet/cli.h"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qet/report_io.h"

namespace qet {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name) {
  return std::filesystem::temp_directory_path() / ("qet_cli_test_" + name);
}

std::string slurp(const std::filesystem::path &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(cli, verify_passes_at_l2_with_both_backends) {
  Outcome o = run_cli({"verify", "--L", "2", "--backend", "both"});
  EXPECT_EQ(o.code, cli::kExitOk) << o.out << o.err;
  for (const char *tag : {"GROUND PASS", "EXCITATIONS PASS", "LEMMA1 PASS", "LEMMA2 PASS", "LEMMA3 PASS",
                          "CHAIN closed_form PASS", "BACKENDS PASS", "VERDICT"}) {
    EXPECT_NE(o.out.find(tag), std::string::npos) << tag << "\n" << o.out;
  }
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
  EXPECT_NE(o.out.find("{B0,B2}"), std::string::npos);
}

TEST(cli, verify_l3_is_fast) {
  auto start = std::chrono::steady_clock::now();
  Outcome o = run_cli({"verify", "--L", "3"});
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(o.code, cli::kExitOk);
  EXPECT_LT(seconds, 10.0);
}

TEST(cli, verify_z_basis_and_custom_edges) {
  EXPECT_EQ(run_cli({"verify", "--L", "3", "--basis", "z"}).code, cli::kExitOk);
  Outcome o = run_cli({"verify", "--L", "3", "--edges", "1,2,3,4,4"});
  EXPECT_EQ(o.code, cli::kExitOk) << o.out;
  EXPECT_NE(o.out.find("X-string on 3 edges"), std::string::npos);
  // Bob's plaquettes stay unexcited by this string, so the closed form is not claimed.
  EXPECT_NE(o.out.find("CHAIN closed_form SKIP"), std::string::npos);
}

TEST(cli, verify_json_report) {
  std::filesystem::path path = temp_path("verify.json");
  Outcome o = run_cli({"verify", "--L", "2", "--json", path.string()});
  ASSERT_EQ(o.code, cli::kExitOk);
  nlohmann::json j = nlohmann::json::parse(slurp(path));
  EXPECT_FALSE(j.empty());
  std::filesystem::remove(path);
}

TEST(cli, nogo_scan_csv) {
  std::filesystem::path path = temp_path("sweep.csv");
  Outcome o = run_cli({"nogo-scan", "--L", "2", "--theta-steps", "8", "--axes", "16", "--csv", path.string()});
  ASSERT_EQ(o.code, cli::kExitOk) << o.out << o.err;
  EXPECT_NE(o.out.find("CLAIM CONFIRMED"), std::string::npos);
  auto rows = parse_csv(slurp(path));
  ASSERT_EQ(rows.size(), 1u + 9u * 16u);
  EXPECT_EQ(rows[0].size(), 10u);
  std::string header;
  for (size_t i = 0; i < rows[0].size(); ++i) header += (i ? "," : "") + rows[0][i];
  EXPECT_EQ(header, kSweepCsvHeader);
  for (size_t r = 1; r < rows.size(); ++r) {
    ASSERT_EQ(rows[r].size(), 10u);
    double theta = std::stod(rows[r][0]);
    double ny = std::stod(rows[r][2]);
    double nz = std::stod(rows[r][3]);
    double delta = std::stod(rows[r][7]);
    double closed = std::stod(rows[r][8]);
    ASSERT_NEAR(delta, 4 * std::pow(std::sin(theta), 2) * (ny * ny + nz * nz), 1e-9);
    ASSERT_NEAR(delta, closed, 1e-9);
    ASSERT_NEAR(std::stod(rows[r][6]) - std::stod(rows[r][5]), delta, 1e-12);
    ASSERT_EQ(rows[r][9], "stabilizer");
  }
  std::filesystem::remove(path);
}

TEST(cli, nogo_scan_is_size_independent_and_deterministic) {
  std::vector<std::string> csv;
  for (const char *L : {"2", "3", "2"}) {
    std::filesystem::path path = temp_path(std::string("det_") + L + ".csv");
    ASSERT_EQ(run_cli({"nogo-scan", "--L", L, "--theta-steps", "6", "--axes", "10", "--csv", path.string()}).code,
              cli::kExitOk);
    csv.push_back(slurp(path));
    std::filesystem::remove(path);
  }
  EXPECT_EQ(csv[0], csv[2]);
  auto a = parse_csv(csv[0]);
  auto b = parse_csv(csv[1]);
  ASSERT_EQ(a.size(), b.size());
  for (size_t r = 1; r < a.size(); ++r) ASSERT_NEAR(std::stod(a[r][7]), std::stod(b[r][7]), 1e-10);
}

TEST(cli, nogo_scan_per_outcome_and_statevector) {
  Outcome o = run_cli({"nogo-scan", "--L", "2", "--backend", "both", "--per-outcome", "--theta-steps", "8",
                       "--axes", "32"});
  EXPECT_EQ(o.code, cli::kExitOk) << o.out << o.err;
}

TEST(cli, control_detects_qet) {
  Outcome o = run_cli({"control"});
  EXPECT_EQ(o.code, cli::kExitOk);
  EXPECT_NE(o.out.find("CONTROL: QET DETECTED"), std::string::npos);
  EXPECT_NE(o.out.find("-0.1055728090000"), std::string::npos) << o.out;
}

TEST(cli, control_without_coupling_reports_no_qet) {
  Outcome o = run_cli({"control", "--J", "0"});
  EXPECT_EQ(o.code, cli::kExitClaimRefuted);
  EXPECT_NE(o.out.find("CONTROL: NO QET"), std::string::npos);
}

TEST(cli, describe_matches_golden) {
  Outcome o = run_cli({"describe", "--L", "2"});
  ASSERT_EQ(o.code, cli::kExitOk);
  std::ifstream in(std::string(QET_GOLDEN_DIR) + "/describe_L2.json");
  EXPECT_EQ(nlohmann::json::parse(o.out), nlohmann::json::parse(in));
}

TEST(cli, describe_to_file) {
  std::filesystem::path path = temp_path("describe.json");
  ASSERT_EQ(run_cli({"describe", "--L", "3", "--out", path.string()}).code, cli::kExitOk);
  EXPECT_EQ(nlohmann::json::parse(slurp(path))["n_qubits"], 18);
  std::filesystem::remove(path);
}

TEST(cli, config_file_supplies_defaults) {
  std::filesystem::path path = temp_path("config.json");
  std::ofstream(path) << R"({"command": "describe", "L": 4})";
  Outcome o = run_cli({"describe", "--config", path.string()});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  EXPECT_EQ(nlohmann::json::parse(o.out)["L"], 4);
  Outcome overridden = run_cli({"describe", "--config", path.string(), "--L", "3"});
  EXPECT_EQ(nlohmann::json::parse(overridden.out)["L"], 3);
  std::ofstream(path) << R"({"L": 2, "colour": "red"})";
  EXPECT_EQ(run_cli({"describe", "--config", path.string()}).code, cli::kExitUsage);
  std::filesystem::remove(path);
  EXPECT_EQ(run_cli({"describe", "--config", path.string()}).code, cli::kExitUsage);
}

TEST(cli, usage_errors_exit_two) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--L", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--r1", "8"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--sector", "4"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--basis", "y"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--edges", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--edges", "3,3"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--L", "4", "--backend", "statevector"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"control", "--N", "9"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"nogo-scan", "--csv", "/nonexistent/dir/out.csv", "--theta-steps", "2", "--axes", "2"}).code,
            cli::kExitUsage);
}

TEST(cli, capacity_error_is_reported) {
  Outcome o = run_cli({"nogo-scan", "--L", "4", "--backend", "statevector"});
  EXPECT_EQ(o.code, cli::kExitUsage);
  EXPECT_NE(o.err.find("qubits"), std::string::npos) << o.err;
}

}  // namespace
}  // namespace qet
