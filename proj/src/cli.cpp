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

#include "impactpower/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "impactpower/correlations.hpp"
#include "impactpower/dynamics.hpp"
#include "impactpower/error.hpp"
#include "impactpower/io.hpp"
#include "impactpower/kernels.hpp"
#include "impactpower/random.hpp"
#include "impactpower/states.hpp"

namespace impactpower::cli {

namespace {

using nlohmann::json;

json power_to_json(const ImpactPower& p) {
  return {{"value", io::round_to_output(p.value)},
          {"method", std::string(to_string(p.method))},
          {"t_max", io::round_to_output(p.t_max)},
          {"upper_bound", io::round_to_output(p.upper_bound)}};
}

std::string field(const std::optional<double>& v) { return v ? io::format_number(*v) : std::string(); }

struct Row {
  std::string label;
  CorrelationReport report;
};

void write_csv(const std::vector<Row>& rows, std::ostream& out) {
  out << "family_param_or_seed,purity,p_min,p_max,discord,bound_rhs,gap_to_bound\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    std::optional<double> gap;
    if (r.bound_rhs && r.p_min) gap = *r.bound_rhs - *r.p_min;
    out << row.label << ',' << io::format_number(r.purity) << ',' << field(r.p_min) << ','
        << field(r.p_max) << ',' << io::format_number(r.discord) << ',' << field(r.bound_rhs) << ','
        << field(gap) << '\n';
  }
}

double grid_point(std::size_t i, std::size_t n, double lo, double hi) {
  return n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

std::vector<Row> scan_rows(const ScanOptions& o) {
  if (o.family == "werner") {
    if (o.grid == 0) throw Error(ErrorKind::out_of_range, "--grid must be positive");
    return kernels::omp::map(o.grid, [&](std::size_t i) {
      const double x = grid_point(i, o.grid, -1.0, 1.0);
      return Row{io::format_number(x), report(werner(x))};
    });
  }
  if (o.family == "isotropic") {
    if (o.grid == 0) throw Error(ErrorKind::out_of_range, "--grid must be positive");
    if (o.dim < 2) throw Error(ErrorKind::out_of_range, "--dim must be at least 2");
    return kernels::omp::map(o.grid, [&](std::size_t i) {
      const double f = grid_point(i, o.grid, 0.0, 1.0);
      return Row{io::format_number(f), report(isotropic(f, o.dim))};
    });
  }
  if (o.family == "random") {
    const Dims dims = parse_dims(o.dims);
    const std::size_t rank = o.rank.value_or(dims.total());
    if (rank == 0 || rank > dims.total()) {
      throw Error(ErrorKind::out_of_range, "--rank must lie in [1, dA*dB]");
    }
    return kernels::omp::map(o.samples, [&](std::size_t i) {
      const std::uint64_t seed = derive_seed(o.seed, i);
      MeasurementSearchOptions options;
      options.seed = seed;
      return Row{std::to_string(seed), report(random_state(dims, rank, seed), options)};
    });
  }
  throw Error(ErrorKind::out_of_range, "unknown family \"" + o.family + "\" (werner, isotropic, random)");
}

}  // namespace

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  const char* env = std::getenv("IMPACTPOWER_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  std::uint64_t value = 0;
  std::istringstream in(env);
  if (!(in >> value) || !in.eof()) {
    throw Error(ErrorKind::parse_error, std::string("IMPACTPOWER_SEED is not an integer: ") + env);
  }
  return value;
}

Dims parse_dims(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const auto a = std::stoul(text.substr(0, x), &used_a);
    const auto b = std::stoul(text.substr(x + 1), &used_b);
    if (used_a != x || used_b != text.size() - x - 1 || a < 1 || b < 1) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::parse_error, "dims must look like AxB, got \"" + text + "\"");
  }
}

int run_compute(const ComputeOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const DensityMatrix rho = io::load_state(options.state_file);
    json result = io::report_to_json(report(rho));
    if (options.hamiltonian_file) {
      const LocalHamiltonian h = io::load_hamiltonian(*options.hamiltonian_file);
      if (h.dim_a() != rho.dims().a) {
        throw Error(ErrorKind::dimension_mismatch, "Hamiltonian acts on dimension " +
                                                       std::to_string(h.dim_a()) + ", state has dA = " +
                                                       std::to_string(rho.dims().a));
      }
      const auto coeffs = impact_coefficients(rho, h);
      result["impact_power"] = power_to_json(maximize_profile(coeffs));
      result["trace_impact_power"] = power_to_json(trace_impact_power(rho, h));
      const double gap = coeffs.level_energies.size() > 1 ? coeffs.min_gap() : 1.0;
      const double period = 2.0 * std::numbers::pi / gap;
      const std::size_t n = options.time_samples;
      const auto samples = kernels::omp::map(n, [&](std::size_t i) {
        const double t = grid_point(i, n, 0.0, period);
        return json{{"t", io::round_to_output(t)},
                    {"impact", io::round_to_output(impact(rho, h, t))},
                    {"trace_impact", io::round_to_output(trace_impact(rho, h, t))}};
      });
      result["samples"] = samples;
    }
    out << result.dump(2) << '\n';
    return 0;
  } catch (const Error& e) {
    err << "impactpower compute: " << e.what() << '\n';
    return 2;
  }
}

int run_scan(const ScanOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const auto rows = scan_rows(options);
    if (options.out_file) {
      std::ofstream file(*options.out_file, std::ios::binary);
      if (!file) throw Error(ErrorKind::parse_error, "cannot open " + options.out_file->string());
      write_csv(rows, file);
    } else {
      write_csv(rows, out);
    }
    return 0;
  } catch (const Error& e) {
    err << "impactpower scan: " << e.what() << '\n';
    return 2;
  }
}

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  verify::Hooks hooks;
  if (options.inject_corrupt_trace) {
    hooks.injected_state = 0.25 * 1.1 * ComplexMatrix::identity(4);
  }
  verify::SuiteSummary summary;
  try {
    summary = verify::run_suite(options.suite, options.seed, options.budget, hooks);
  } catch (const Error& e) {
    err << "impactpower verify: " << e.what() << '\n';
    return 2;
  }
  out << verify::to_json(summary).dump(2) << '\n';
  for (const auto& c : summary.checks) {
    if (c.passed()) continue;
    err << "FAIL " << c.name << " (criterion " << c.criterion << "): " << c.failures << '/' << c.cases
        << " cases, worst margin " << io::format_number(c.worst_margin) << " at case " << c.worst_index
        << " seed " << c.worst_seed;
    if (!c.detail.empty()) err << ": " << c.detail;
    err << '\n';
  }
  return summary.passed() ? 0 : 1;
}

}  // namespace impactpower::cli
