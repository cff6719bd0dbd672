// Copyright 2026 The impactpower Authors
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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "impactpower/cli.hpp"
#include "impactpower/error.hpp"
#include "impactpower/io.hpp"
#include "impactpower/states.hpp"

using namespace impactpower;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto dir = fs::temp_directory_path() / "impactpower_cli_test";
  fs::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("compute on a Werner state") {
  const auto path = write_temp("werner.json", io::state_to_json(werner(0.2)).dump());
  std::ostringstream out, err;
  CHECK(cli::run_compute({path, std::nullopt}, out, err) == 0);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["saturates_bound"].get<bool>());
  CHECK_FALSE(j.contains("impact_power"));
}

TEST_CASE("compute with a Hamiltonian") {
  const auto state = write_temp("bell.json", io::state_to_json(from_pure(max_entangled(2), {2, 2})).dump());
  const auto h = write_temp("hz.json", R"({"dA": 2, "bloch_axis": [0, 0, 1], "gap": 1})");
  std::ostringstream out, err;
  CHECK(cli::run_compute({state, h, 9}, out, err) == 0);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["impact_power"]["value"].get<double>() == doctest::Approx(1.0));
  CHECK(j["impact_power"]["method"] == "closed-form");
  CHECK(j["trace_impact_power"]["value"].get<double>() == doctest::Approx(2.0));
  CHECK(j["samples"].size() == 9);
  CHECK(j["samples"][4]["impact"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("compute rejects bad input with exit code 2") {
  const auto malformed = write_temp("bad.json", "{\"dims\": [2, 2], ");
  std::ostringstream out, err;
  CHECK(cli::run_compute({malformed, std::nullopt}, out, err) == 2);
  CHECK(err.str().find("ParseError") != std::string::npos);

  const auto trace = write_temp("trace.json",
                                R"({"dims": [1, 2], "matrix": [[0.6, 0], [0, 0], [0, 0], [0.6, 0]]})");
  std::ostringstream out2, err2;
  CHECK(cli::run_compute({trace, std::nullopt}, out2, err2) == 2);
  CHECK(err2.str().find("trace invariant") != std::string::npos);

  const auto qubit = write_temp("q.json", io::state_to_json(random_state({3, 2}, 6, 0)).dump());
  const auto h = write_temp("hz2.json", R"({"dA": 2, "bloch_axis": [0, 0, 1], "gap": 1})");
  std::ostringstream out3, err3;
  CHECK(cli::run_compute({qubit, h}, out3, err3) == 2);
}

TEST_CASE("werner scan saturates the bound") {
  cli::ScanOptions o;
  o.family = "werner";
  o.grid = 101;
  std::ostringstream out, err;
  CHECK(cli::run_scan(o, out, err) == 0);
  CHECK(out.str().find('\r') == std::string::npos);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] == "family_param_or_seed,purity,p_min,p_max,discord,bound_rhs,gap_to_bound");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split(rows[i]);
    REQUIRE(cells.size() == 7);
    CHECK(std::abs(std::stod(cells[6])) <= 1e-9);
  }
}

TEST_CASE("random scan respects the purity bound and is deterministic") {
  cli::ScanOptions o;
  o.family = "random";
  o.samples = 5000;
  o.seed = 7;
  std::ostringstream a, b, err;
  CHECK(cli::run_scan(o, a, err) == 0);
  CHECK(cli::run_scan(o, b, err) == 0);
  CHECK(a.str() == b.str());
  const auto rows = lines(a.str());
  REQUIRE(rows.size() == 5001);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split(rows[i]);
    CHECK(std::stod(cells[2]) <= std::stod(cells[5]) + 1e-9);
  }
}

TEST_CASE("isotropic and non-qubit scans leave inapplicable fields empty") {
  cli::ScanOptions iso;
  iso.family = "isotropic";
  iso.grid = 11;
  std::ostringstream out, err;
  CHECK(cli::run_scan(iso, out, err) == 0);
  CHECK(lines(out.str()).size() == 12);

  cli::ScanOptions wide;
  wide.family = "random";
  wide.samples = 3;
  wide.dims = "3x2";
  std::ostringstream out2;
  CHECK(cli::run_scan(wide, out2, err) == 0);
  const auto cells = split(lines(out2.str())[1]);
  REQUIRE(cells.size() == 7);
  CHECK(cells[2].empty());
  CHECK(cells[5].empty());
  CHECK(cells[6].empty());
}

TEST_CASE("scan writes to a file") {
  cli::ScanOptions o;
  o.family = "werner";
  o.grid = 3;
  o.out_file = fs::temp_directory_path() / "impactpower_cli_test" / "scan.csv";
  std::ostringstream out, err;
  CHECK(cli::run_scan(o, out, err) == 0);
  CHECK(out.str().empty());
  std::ifstream in(*o.out_file);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(lines(text.str()).size() == 4);
}

TEST_CASE("scan rejects invalid parameters") {
  std::ostringstream out, err;
  cli::ScanOptions unknown;
  unknown.family = "ghz";
  CHECK(cli::run_scan(unknown, out, err) == 2);
  cli::ScanOptions dims;
  dims.family = "random";
  dims.dims = "2by2";
  CHECK(cli::run_scan(dims, out, err) == 2);
  cli::ScanOptions rank;
  rank.family = "random";
  rank.rank = 5;
  CHECK(cli::run_scan(rank, out, err) == 2);
  cli::ScanOptions dim;
  dim.family = "isotropic";
  dim.dim = 1;
  CHECK(cli::run_scan(dim, out, err) == 2);
}

TEST_CASE("verify output is deterministic and reports failures") {
  cli::VerifyOptions o;
  o.suite = "theorem3";
  std::ostringstream a, b, err;
  CHECK(cli::run_verify(o, a, err) == 0);
  CHECK(cli::run_verify(o, b, err) == 0);
  CHECK(a.str() == b.str());
  CHECK(nlohmann::json::parse(a.str())["passed"].get<bool>());

  o.inject_corrupt_trace = true;
  std::ostringstream out, err2;
  CHECK(cli::run_verify(o, out, err2) == 1);
  CHECK(err2.str().find("trace invariant") != std::string::npos);

  o.suite = "unknown";
  CHECK(cli::run_verify(o, out, err2) == 2);
}

TEST_CASE("seed resolution") {
  CHECK(cli::resolve_seed(5) == 5);
  setenv("IMPACTPOWER_SEED", "123", 1);
  CHECK(cli::resolve_seed(std::nullopt) == 123);
  setenv("IMPACTPOWER_SEED", "12x", 1);
  CHECK_THROWS_AS(cli::resolve_seed(std::nullopt), Error);
  unsetenv("IMPACTPOWER_SEED");
  CHECK(cli::resolve_seed(std::nullopt) == cli::kDefaultSeed);
}

TEST_CASE("dims parsing") {
  CHECK(cli::parse_dims("2x3").b == 3);
  CHECK_THROWS_AS(cli::parse_dims("2x"), Error);
  CHECK_THROWS_AS(cli::parse_dims("0x2"), Error);
  CHECK_THROWS_AS(cli::parse_dims("x"), Error);
}
