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

#include "impactpower/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "impactpower/correlations.hpp"
#include "impactpower/dynamics.hpp"
#include "impactpower/error.hpp"
#include "impactpower/kernels.hpp"
#include "impactpower/oracle.hpp"
#include "impactpower/random.hpp"
#include "impactpower/states.hpp"

namespace impactpower::verify {

namespace {

// Pinned tolerances, one per acceptance criterion.
constexpr double kWernerValueTol = 1e-10;
constexpr double kWernerSaturationTol = 1e-9;
constexpr double kCqOracleTol = 1e-6;
constexpr double kAxisOracleTol = 1e-8;
constexpr double kIdentityTol = 1e-10;
constexpr double kPmaxOracleTol = 1e-6;
constexpr double kProfileTol = 1e-10;
constexpr double kOrderTol = 1e-10;
constexpr double kGeneralDimTol = 1e-6;
constexpr double kPurityBoundTol = 1e-9;
constexpr double kCqDiscordTol = 1e-9;
constexpr double kCqPowerTol = 1e-10;
constexpr double kDiscordantThreshold = 1e-3;
constexpr double kDiscordantGap = 5e-4;
constexpr double kTraceOrderTol = 1e-10;
constexpr double kTraceGap = 1e-4;
constexpr double kEndpointTol = 1e-10;

struct Sizes {
  std::size_t equivalence_states;     // per dimension pair
  std::size_t axis_samples;
  std::size_t identity_states;
  std::size_t identity_axes;
  std::size_t pmax_states;
  std::size_t pmax_axes;
  std::size_t profile_triples;
  std::size_t order_pairs;
  std::size_t general_dim_states;
  std::size_t bound_states;
  std::size_t cq_states;
  std::size_t trace_triples;
  std::size_t product_states;
};

Sizes sizes_for(Budget budget) {
  if (budget == Budget::full) {
    return {200, 1000, 200, 50, 200, 10000, 500, 1000, 100, 10000, 100, 1000, 100};
  }
  return {50, 1000, 100, 50, 50, 1000, 100, 100, 25, 100, 100, 100, 100};
}

/// Folds per-case margins into a CheckResult; negative margin = violation.
class Tally {
 public:
  Tally(std::string name, int criterion, std::string description, double tolerance) {
    result_.name = std::move(name);
    result_.criterion = criterion;
    result_.description = std::move(description);
    result_.tolerance = tolerance;
    result_.worst_margin = std::numeric_limits<double>::infinity();
  }

  void record(std::size_t index, std::uint64_t seed, double margin) {
    ++result_.cases;
    if (!(margin >= 0.0)) ++result_.failures;
    if (!(margin >= result_.worst_margin)) {
      result_.worst_margin = margin;
      result_.worst_index = index;
      result_.worst_seed = seed;
    }
  }

  CheckResult finish() && { return std::move(result_); }

 private:
  CheckResult result_;
};

struct Case {
  std::uint64_t seed = 0;
  double margin = 0.0;
};

/// Runs `count` seeded cases in parallel and tallies them in index order.
CheckResult run_cases(Tally tally, std::size_t count, std::uint64_t base_seed,
                      const std::function<double(std::size_t, std::uint64_t)>& margin_of) {
  const auto cases = kernels::omp::map(count, [&](std::size_t i) {
    const std::uint64_t seed = derive_seed(base_seed, i);
    return Case{seed, margin_of(i, seed)};
  });
  for (std::size_t i = 0; i < cases.size(); ++i) tally.record(i, cases[i].seed, cases[i].margin);
  return std::move(tally).finish();
}

std::uint64_t check_seed(std::uint64_t master, int criterion, int sub) {
  return derive_seed(master, static_cast<std::uint64_t>(criterion) * 16 + static_cast<std::uint64_t>(sub));
}

/// d_B cycles through {2, 3, 4} with the case index.
Dims cycling_dims(std::size_t i) { return {2, 2 + i % 3}; }

DensityMatrix full_rank(Dims dims, std::uint64_t seed) { return random_state(dims, dims.total(), seed); }

/// Full-rank two-qubit states whose discord exceeds the threshold, with the
/// seeds that generate them. Shared by the faithfulness and trace-norm checks.
std::vector<std::pair<std::uint64_t, DensityMatrix>> discordant_states(std::uint64_t master,
                                                                       std::size_t count) {
  std::vector<std::pair<std::uint64_t, DensityMatrix>> out;
  const std::uint64_t base = check_seed(master, 8, 2);
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    const std::uint64_t seed = derive_seed(base, i);
    auto rho = full_rank({2, 2}, seed);
    if (geometric_discord(rho).value > kDiscordantThreshold) out.emplace_back(seed, std::move(rho));
  }
  return out;
}

std::vector<CheckResult> criterion1() {
  constexpr std::size_t kGrid = 101;
  auto x_at = [](std::size_t i) { return -1.0 + 2.0 * static_cast<double>(i) / (kGrid - 1); };
  std::vector<CheckResult> out;
  out.push_back(run_cases(Tally("werner-purity", 1, "Tr[rho_w^2] = (x^2 - x + 1)/3", kWernerValueTol),
                          kGrid, 0, [&](std::size_t i, std::uint64_t) {
                            const double x = x_at(i);
                            return kWernerValueTol -
                                   std::abs(werner(x).purity() - (x * x - x + 1.0) / 3.0);
                          }));
  out.push_back(run_cases(Tally("werner-discord", 1, "D(rho_w) = (2x - 1)^2 / 18", kWernerValueTol),
                          kGrid, 0, [&](std::size_t i, std::uint64_t) {
                            const double x = x_at(i);
                            const double expected = (2.0 * x - 1.0) * (2.0 * x - 1.0) / 18.0;
                            return kWernerValueTol -
                                   std::abs(geometric_discord(werner(x)).value - expected);
                          }));
  out.push_back(run_cases(Tally("werner-saturation", 1, "p_min = (4/3) purity - 1/3", kWernerSaturationTol),
                          kGrid, 0, [&](std::size_t i, std::uint64_t) {
                            const auto check = purity_bound_check(werner(x_at(i)));
                            return kWernerSaturationTol - std::abs(check.lhs - check.rhs);
                          }));
  return out;
}

std::vector<CheckResult> criterion2(std::uint64_t master, const Sizes& s) {
  std::vector<CheckResult> out;
  out.push_back(run_cases(
      Tally("pmin-cq-oracle", 2, "p_min = 2 min_CQ ||rho - omega||^2 (2x2)", kCqOracleTol),
      s.equivalence_states, check_seed(master, 2, 0), [&](std::size_t, std::uint64_t seed) {
        const auto rho = full_rank({2, 2}, seed);
        const double cq = oracle::discord_cq_search(rho, {64, 4, seed}).value;
        return kCqOracleTol - std::abs(p_extrema(rho).p_min - 2.0 * cq);
      }));
  out.push_back(run_cases(
      Tally("pmin-axis-oracle", 2, "p_min = min_r 2||rho - Phi_r(rho)||^2 (2x2, 2x3)", kAxisOracleTol),
      2 * s.equivalence_states, check_seed(master, 2, 1), [&](std::size_t i, std::uint64_t seed) {
        const auto rho = full_rank({2, 2 + i % 2}, seed);
        const double search = oracle::p_min_search(rho, {s.axis_samples, seed}).value;
        return kAxisOracleTol - std::abs(p_extrema(rho).p_min - search);
      }));
  return out;
}

std::vector<CheckResult> criterion3(std::uint64_t master, const Sizes& s) {
  std::vector<CheckResult> out;
  out.push_back(run_cases(
      Tally("axis-power-identity", 3, "Tr[rho^2] - r^T M r = P(rho, H_r)", kIdentityTol),
      s.identity_states, check_seed(master, 3, 0), [&](std::size_t i, std::uint64_t seed) {
        const auto rho = full_rank(cycling_dims(i), seed);
        const MMatrix m = m_matrix(rho);
        Rng rng(seed);
        std::uniform_real_distribution<double> gap(0.1, 2.0);
        double worst = 0.0;
        for (std::size_t k = 0; k < s.identity_axes; ++k) {
          const Vec3 r = random_axis(rng);
          const double p = impact_power(rho, LocalHamiltonian::qubit(r, gap(rng))).value;
          worst = std::max(worst, std::abs(axis_impact_power(m, rho.purity(), MeasurementAxis(r)) - p));
        }
        return kIdentityTol - worst;
      }));
  out.push_back(run_cases(
      Tally("pmax-oracle", 3, "p_max = Tr[rho^2] - m_min vs time-grid oracle over sampled axes",
            kPmaxOracleTol),
      s.pmax_states, check_seed(master, 3, 1), [&](std::size_t i, std::uint64_t seed) {
        const auto rho = full_rank(cycling_dims(i), seed);
        const double search = oracle::p_max_search(rho, {s.pmax_axes, seed}).value;
        return kPmaxOracleTol - std::abs(p_extrema(rho).p_max - search);
      }));
  return out;
}

std::vector<CheckResult> criterion4(std::uint64_t master, const Sizes& s) {
  std::vector<CheckResult> out;
  out.push_back(run_cases(
      Tally("impact-profile", 4, "I(t) = a - b cos(dE t) for qubit H", kProfileTol),
      s.profile_triples, check_seed(master, 4, 0), [&](std::size_t i, std::uint64_t seed) {
        const auto rho = full_rank(cycling_dims(i), seed);
        Rng rng(seed);
        const auto h = random_nondegenerate_hamiltonian(2, rng);
        const double t = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
        const auto c = impact_coefficients(rho, h);
        const double de = c.level_energies[1] - c.level_energies[0];
        return kProfileTol - std::abs(impact(rho, h, t) - (c.a - c.b_at(1, 0) * std::cos(de * t)));
      }));
  constexpr std::size_t kGrid = 1000;
  Tally argmax("impact-argmax", 4, "grid argmax of I(t) within one step of pi/dE", 0.0);
  out.push_back(run_cases(
      std::move(argmax), s.profile_triples, check_seed(master, 4, 0), [&](std::size_t i, std::uint64_t seed) {
        const auto rho = full_rank(cycling_dims(i), seed);
        Rng rng(seed);
        const auto h = random_nondegenerate_hamiltonian(2, rng);
        const double de = std::abs(h.energies()[1] - h.energies()[0]);
        const double step = 2.0 * std::numbers::pi / de / kGrid;
        const auto best = kernels::serial::argmax(
            kGrid, [&](std::size_t k) { return impact(rho, h, step * static_cast<double>(k)); });
        return step - std::abs(step * static_cast<double>(best.index) - std::numbers::pi / de);
      }));
  return out;
}

std::vector<CheckResult> criterion5(std::uint64_t master, const Sizes& s) {
  return {run_cases(Tally("order-relation", 5, "P(rho, H) >= 2D for nondegenerate qubit H", kOrderTol),
                    s.order_pairs, check_seed(master, 5, 0), [&](std::size_t i, std::uint64_t seed) {
                      const auto rho = full_rank(cycling_dims(i), seed);
                      Rng rng(seed);
                      const auto h = random_nondegenerate_hamiltonian(2, rng);
                      const double p = impact_power(rho, h).value;
                      return p - 2.0 * geometric_discord(rho).value + kOrderTol;
                    })};
}

std::vector<CheckResult> criterion6(std::uint64_t master, const Sizes& s) {
  return {run_cases(
      Tally("general-dim-bound", 6, "P(rho, H) >= 4 D / (d_A (d_A - 1)) for 3x2 states", kGeneralDimTol),
      s.general_dim_states, check_seed(master, 6, 0), [&](std::size_t, std::uint64_t seed) {
        const auto rho = full_rank({3, 2}, seed);
        Rng rng(seed);
        const auto h = random_nondegenerate_hamiltonian(3, rng);
        MeasurementSearchOptions options;
        options.seed = seed;
        const auto check = general_dim_bound_check(rho, h, kGeneralDimTol, options);
        return check.margin + kGeneralDimTol;
      })};
}

std::vector<CheckResult> criterion7(std::uint64_t master, const Sizes& s) {
  return {run_cases(Tally("purity-bound", 7, "p_min <= (4/3) Tr[rho^2] - 1/3 for two qubits", kPurityBoundTol),
                    s.bound_states, check_seed(master, 7, 0), [&](std::size_t, std::uint64_t seed) {
                      const auto check = purity_bound_check(full_rank({2, 2}, seed));
                      return check.rhs + kPurityBoundTol - check.lhs;
                    })};
}

std::vector<CheckResult> criterion8(std::uint64_t master, const Sizes& s) {
  std::vector<CheckResult> out;
  auto cq_state = [](std::size_t i, std::uint64_t seed) {
    Rng rng(seed);
    const Dims dims{2, 2 + i % 2};
    auto spec = random_classical_quantum_spec(dims, rng);
    return std::make_pair(classical_quantum(spec), std::move(spec));
  };
  out.push_back(run_cases(Tally("cq-zero-discord", 8, "CQ states have zero discord", kCqDiscordTol),
                          s.cq_states, check_seed(master, 8, 0), [&](std::size_t i, std::uint64_t seed) {
                            return kCqDiscordTol - geometric_discord(cq_state(i, seed).first).value;
                          }));
  out.push_back(run_cases(
      Tally("cq-zero-power", 8, "CQ states admit a nondegenerate H with zero impact power", kCqPowerTol),
      s.cq_states, check_seed(master, 8, 0), [&](std::size_t i, std::uint64_t seed) {
        const auto [omega, spec] = cq_state(i, seed);
        std::vector<ComplexMatrix> projectors;
        for (std::size_t k = 0; k < 2; ++k) {
          const auto v = spec.basis.column(k);
          projectors.push_back(ComplexMatrix::outer(v, v));
        }
        const LocalHamiltonian h({0.0, 1.0}, std::move(projectors));
        return kCqPowerTol - impact_power(omega, h).value;
      }));
  const auto discordant = discordant_states(master, s.cq_states);
  Tally gap("discordant-gap", 8, "discord > 1e-3 implies p_min > 5e-4", kDiscordantGap);
  for (std::size_t i = 0; i < discordant.size(); ++i) {
    gap.record(i, discordant[i].first, p_extrema(discordant[i].second).p_min - kDiscordantGap);
  }
  out.push_back(std::move(gap).finish());
  return out;
}

std::vector<CheckResult> criterion9(std::uint64_t master, const Sizes& s) {
  std::vector<CheckResult> out;
  out.push_back(run_cases(
      Tally("trace-vs-hs", 9, "trace_impact >= impact", kTraceOrderTol), s.trace_triples,
      check_seed(master, 9, 0), [&](std::size_t i, std::uint64_t seed) {
        const auto rho = full_rank(cycling_dims(i), seed);
        Rng rng(seed);
        const auto h = random_nondegenerate_hamiltonian(2, rng);
        const double t = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
        return trace_impact(rho, h, t) - impact(rho, h, t) + kTraceOrderTol;
      }));
  const auto discordant = discordant_states(master, s.cq_states);
  const auto margins = kernels::omp::map(discordant.size(), [&](std::size_t i) {
    return trace_p_min_sampled(discordant[i].second, s.axis_samples) - kTraceGap;
  });
  Tally gap("trace-gap", 9, "trace-norm p_min over sampled axes exceeds 1e-4 on discordant states",
            kTraceGap);
  for (std::size_t i = 0; i < discordant.size(); ++i) gap.record(i, discordant[i].first, margins[i]);
  out.push_back(std::move(gap).finish());
  return out;
}

std::vector<CheckResult> criterion10(std::uint64_t master, const Sizes& s) {
  std::vector<CheckResult> out;
  Tally bell("bell-endpoints", 10, "|Phi+>: p_min = p_max = 1, D = 1/2", kEndpointTol);
  const auto phi = from_pure(max_entangled(2), {2, 2});
  const auto ext = p_extrema(phi);
  const double err = std::max({std::abs(ext.p_min - 1.0), std::abs(ext.p_max - 1.0),
                               std::abs(geometric_discord(phi).value - 0.5)});
  bell.record(0, 0, kEndpointTol - err);
  out.push_back(std::move(bell).finish());
  out.push_back(run_cases(
      Tally("product-endpoints", 10, "product pure states: p_min = 0, p_max = 1", kEndpointTol),
      s.product_states, check_seed(master, 10, 1), [&](std::size_t i, std::uint64_t seed) {
        Rng rng(seed);
        const std::size_t db = 2 + i % 3;
        const auto va = random_unit_vector(2, rng);
        const auto vb = random_unit_vector(db, rng);
        ComplexVector v(2 * db);
        for (std::size_t a = 0; a < 2; ++a) {
          for (std::size_t b = 0; b < db; ++b) v[a * db + b] = va[a] * vb[b];
        }
        const auto e = p_extrema(from_pure(v, {2, db}));
        return kEndpointTol - std::max(e.p_min, std::abs(e.p_max - 1.0));
      }));
  return out;
}

CheckResult state_validation(const Hooks& hooks) {
  Tally tally("state-validation", 0, "injected state passes density-matrix validation", 0.0);
  try {
    DensityMatrix::from_matrix(hooks.injected_dims, *hooks.injected_state);
    tally.record(0, 0, 0.0);
    return std::move(tally).finish();
  } catch (const Error& e) {
    tally.record(0, 0, -1.0);
    auto result = std::move(tally).finish();
    result.detail = e.what();
    return result;
  }
}

std::vector<int> criteria_of(std::string_view suite) {
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  if (suite == "theorem1") return {2, 8, 10};
  if (suite == "theorem2") return {3, 4, 5};
  if (suite == "theorem3") return {1, 7};
  if (suite == "general-dim") return {6};
  if (suite == "trace-norm") return {9};
  throw Error(ErrorKind::out_of_range, "unknown suite \"" + std::string(suite) + "\"");
}

}  // namespace

bool SuiteSummary::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all",      "theorem1",    "theorem2",
                                                 "theorem3", "general-dim", "trace-norm"};
  return names;
}

std::string_view to_string(Budget budget) { return budget == Budget::full ? "full" : "quick"; }

std::vector<CheckResult> run_criterion(int criterion, std::uint64_t seed, Budget budget) {
  const Sizes s = sizes_for(budget);
  switch (criterion) {
    case 1: return criterion1();
    case 2: return criterion2(seed, s);
    case 3: return criterion3(seed, s);
    case 4: return criterion4(seed, s);
    case 5: return criterion5(seed, s);
    case 6: return criterion6(seed, s);
    case 7: return criterion7(seed, s);
    case 8: return criterion8(seed, s);
    case 9: return criterion9(seed, s);
    case 10: return criterion10(seed, s);
    default: throw Error(ErrorKind::out_of_range, "criteria are numbered 1-10");
  }
}

SuiteSummary run_suite(std::string_view suite, std::uint64_t seed, Budget budget, const Hooks& hooks) {
  SuiteSummary summary;
  summary.suite = std::string(suite);
  summary.seed = seed;
  summary.budget = budget;
  for (int c : criteria_of(suite)) {
    auto checks = run_criterion(c, seed, budget);
    for (auto& check : checks) summary.checks.push_back(std::move(check));
  }
  if (hooks.injected_state) summary.checks.push_back(state_validation(hooks));
  return summary;
}

nlohmann::json to_json(const SuiteSummary& summary) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : summary.checks) {
    nlohmann::json entry = {
        {"name", c.name},
        {"criterion", c.criterion},
        {"description", c.description},
        {"passed", c.passed()},
        {"cases", c.cases},
        {"failures", c.failures},
        {"tolerance", c.tolerance},
        {"worst_margin", c.worst_margin},
        {"worst_case", {{"index", c.worst_index}, {"seed", c.worst_seed}}},
    };
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return {{"suite", summary.suite},
          {"seed", summary.seed},
          {"budget", std::string(to_string(summary.budget))},
          {"passed", summary.passed()},
          {"checks", std::move(checks)}};
}

}  // namespace impactpower::verify
