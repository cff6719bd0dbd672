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

#include <iostream>
#include <map>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "impactpower/cli.hpp"
#include "impactpower/error.hpp"
#include "impactpower/kernels.hpp"

int main(int argc, char** argv) {
  using namespace impactpower;

  CLI::App app{"Quantum correlations from the impact power of local unitary evolutions"};
  app.require_subcommand(1);
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  cli::ComputeOptions compute;
  auto* compute_cmd = app.add_subcommand("compute", "Correlation report for one state");
  compute_cmd->add_option("state", compute.state_file, "State JSON file")->required();
  std::string hamiltonian;
  compute_cmd->add_option("--hamiltonian,-H", hamiltonian, "Local Hamiltonian JSON file");
  compute_cmd->add_option("--time-samples", compute.time_samples, "Samples over one period")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));

  cli::ScanOptions scan;
  std::optional<std::uint64_t> scan_seed;
  std::optional<std::size_t> scan_rank;
  std::string scan_out;
  auto* scan_cmd = app.add_subcommand("scan", "CSV frontier data for a state family");
  scan_cmd->add_option("family", scan.family, "werner, isotropic or random")->required();
  scan_cmd->add_option("--grid", scan.grid, "Grid points (werner, isotropic)");
  scan_cmd->add_option("--dim", scan.dim, "Local dimension (isotropic)");
  scan_cmd->add_option("--samples", scan.samples, "Sample count (random)");
  scan_cmd->add_option("--seed", scan_seed, "Master seed (random)");
  scan_cmd->add_option("--dims", scan.dims, "AxB (random)");
  scan_cmd->add_option("--rank", scan_rank, "Ginibre rank (random, default full)");
  scan_cmd->add_option("--out", scan_out, "Output file (default stdout)");

  cli::VerifyOptions verify_opts;
  std::optional<std::uint64_t> verify_seed;
  std::string budget = "quick";
  auto* verify_cmd = app.add_subcommand("verify", "Run the property batteries");
  verify_cmd->add_option("--suite", verify_opts.suite, "Battery to run")
      ->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--seed", verify_seed, "Master seed");
  verify_cmd->add_option("--budget", budget, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_flag("--inject-corrupt-trace", verify_opts.inject_corrupt_trace)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  kernels::set_thread_count(threads);

  try {
    if (compute_cmd->parsed()) {
      if (!hamiltonian.empty()) compute.hamiltonian_file = hamiltonian;
      return cli::run_compute(compute, std::cout, std::cerr);
    }
    if (scan_cmd->parsed()) {
      scan.seed = cli::resolve_seed(scan_seed);
      scan.rank = scan_rank;
      if (!scan_out.empty()) scan.out_file = scan_out;
      return cli::run_scan(scan, std::cout, std::cerr);
    }
    verify_opts.seed = cli::resolve_seed(verify_seed);
    verify_opts.budget = budget == "full" ? verify::Budget::full : verify::Budget::quick;
    return cli::run_verify(verify_opts, std::cout, std::cerr);
  } catch (const Error& e) {
    std::cerr << "impactpower: " << e.what() << '\n';
    return 2;
  }
}
