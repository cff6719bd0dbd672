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

#include "impactpower/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "impactpower/error.hpp"

namespace impactpower::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const json& require_field(const json& obj, const char* key) {
  if (!obj.is_object()) throw Error(ErrorKind::parse_error, "expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorKind::parse_error, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t as_count(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw Error(ErrorKind::parse_error, std::string(what) + " must be a positive integer");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

double as_number(const json& v, const char* what) {
  if (!v.is_number()) throw Error(ErrorKind::parse_error, std::string(what) + " must be a number");
  return v.get<double>();
}

ComplexMatrix parse_matrix(const json& entries, std::size_t n, const char* what) {
  if (!entries.is_array() || entries.size() != n * n) {
    throw Error(ErrorKind::parse_error, std::string(what) + " must list " + std::to_string(n * n) +
                                            " [re, im] entries");
  }
  ComplexMatrix m(n, n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const json& z = entries[k];
    if (!z.is_array() || z.size() != 2) {
      throw Error(ErrorKind::parse_error,
                  std::string(what) + " entry " + std::to_string(k) + " is not [re, im]");
    }
    m.entries()[k] = {as_number(z[0], "real part"), as_number(z[1], "imaginary part")};
  }
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const auto& z : m.entries()) {
    entries.push_back({round_to_output(z.real()), round_to_output(z.imag())});
  }
  return entries;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double round_to_output(double value) {
  const double r = std::strtod(format_number(value).c_str(), nullptr);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

DensityMatrix parse_state(std::string_view text) {
  const json doc = parse_json(text);
  const json& dims = require_field(doc, "dims");
  if (!dims.is_array() || dims.size() != 2) {
    throw Error(ErrorKind::parse_error, "\"dims\" must be [dA, dB]");
  }
  const Dims d{as_count(dims[0], "dA"), as_count(dims[1], "dB")};
  ComplexMatrix m = parse_matrix(require_field(doc, "matrix"), d.total(), "\"matrix\"");
  return DensityMatrix::from_matrix(d, std::move(m));
}

DensityMatrix load_state(const std::filesystem::path& path) { return parse_state(read_file(path)); }

nlohmann::json state_to_json(const DensityMatrix& rho) {
  return {{"dims", {rho.dims().a, rho.dims().b}}, {"matrix", matrix_to_json(rho.matrix())}};
}

LocalHamiltonian parse_hamiltonian(std::string_view text) {
  const json doc = parse_json(text);
  const std::size_t da = as_count(require_field(doc, "dA"), "dA");
  if (doc.contains("bloch_axis")) {
    if (da != 2) throw Error(ErrorKind::parse_error, "\"bloch_axis\" shorthand needs dA = 2");
    const json& axis = doc["bloch_axis"];
    if (!axis.is_array() || axis.size() != 3) {
      throw Error(ErrorKind::parse_error, "\"bloch_axis\" must be [rx, ry, rz]");
    }
    const Vec3 r{as_number(axis[0], "rx"), as_number(axis[1], "ry"), as_number(axis[2], "rz")};
    const double gap = as_number(require_field(doc, "gap"), "\"gap\"");
    return LocalHamiltonian::qubit(r, gap);
  }
  const json& energies = require_field(doc, "energies");
  const json& projectors = require_field(doc, "projectors");
  if (!energies.is_array() || !projectors.is_array() || energies.size() != projectors.size() ||
      energies.empty()) {
    throw Error(ErrorKind::parse_error, "\"energies\" and \"projectors\" must be equally long arrays");
  }
  std::vector<double> e;
  std::vector<ComplexMatrix> p;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    e.push_back(as_number(energies[i], "energy"));
    p.push_back(parse_matrix(projectors[i], da, "projector"));
  }
  return LocalHamiltonian(std::move(e), std::move(p));
}

LocalHamiltonian load_hamiltonian(const std::filesystem::path& path) {
  return parse_hamiltonian(read_file(path));
}

nlohmann::json report_to_json(const CorrelationReport& report) {
  auto optional_number = [](const std::optional<double>& v) -> json {
    return v ? json(round_to_output(*v)) : json(nullptr);
  };
  json out;
  out["dims"] = {report.dims.a, report.dims.b};
  out["purity"] = round_to_output(report.purity);
  out["p_min"] = optional_number(report.p_min);
  out["p_max"] = optional_number(report.p_max);
  out["discord"] = round_to_output(report.discord);
  out["discord_method"] = std::string(to_string(report.method));
  out["bound_rhs"] = optional_number(report.bound_rhs);
  out["saturates_bound"] = report.saturates_bound ? json(*report.saturates_bound) : json(nullptr);
  out["tolerances"] = {{"state", kStateTol}, {"saturation", kSaturationTol}};
  return out;
}

}  // namespace impactpower::io
