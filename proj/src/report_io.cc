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

#include "qet/report_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qet {

namespace {

nlohmann::json vertex_json(const Vertex &v) { return nlohmann::json::array({v.row, v.col}); }

const char *dir_name(EdgeDir dir) { return dir == EdgeDir::kEast ? "east" : "south"; }

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow &r : rows) {
    out << format_double(r.params.theta) << ',' << format_double(r.params.axis[0]) << ','
        << format_double(r.params.axis[1]) << ',' << format_double(r.params.axis[2]) << ','
        << format_double(r.p_plus) << ',' << format_double(r.energy_injected) << ','
        << format_double(r.energy_after) << ',' << format_double(r.delta) << ',' << format_double(r.closed_form)
        << ',' << r.backend << '\n';
  }
}

nlohmann::json to_json(const LoccParams &params) {
  return {{"theta", params.theta}, {"axis", params.axis}};
}

nlohmann::json to_json(const EnergyReport &report) {
  nlohmann::json profile = nlohmann::json::object();
  for (const StabilizerValue &s : report.profile) profile[s.label] = s.value;
  return {
      {"scheme", report.scheme},
      {"locc", {{"plus", to_json(report.locc.per_outcome[0])}, {"minus", to_json(report.locc.per_outcome[1])}}},
      {"p_plus", report.p_plus},
      {"p_minus", report.p_minus},
      {"E_A", report.energy_injected},
      {"E_B", report.energy_after},
      {"delta", report.delta},
      {"closed_form", report.closed_form},
      {"ground_energy", report.ground_energy},
      {"E_A_absolute", report.energy_injected + report.ground_energy},
      {"E_B_absolute", report.energy_after + report.ground_energy},
      {"profile", profile},
      {"backend", report.backend},
  };
}

nlohmann::json to_json(const CheckResult &check) {
  return {{"name", check.name}, {"pass", check.pass}, {"max_error", check.max_error}, {"detail", check.detail}, {"skipped", check.skipped}};
}

nlohmann::json to_json(const OptimizationResult &result) {
  bool theta_zero = false;
  for (const LoccParams &p : result.grid_argmin) theta_zero = theta_zero || p.theta == 0.0;
  nlohmann::json max_dev = nullptr;
  for (const SweepRow &row : result.table) {
    if (std::isnan(row.closed_form)) continue;
    double dev = std::abs(row.delta - row.closed_form);
    max_dev = max_dev.is_null() ? dev : std::max(max_dev.get<double>(), dev);
  }
  return {
      {"min_delta", result.min_delta},
      {"argmin", {{"plus", to_json(result.argmin.per_outcome[0])}, {"minus", to_json(result.argmin.per_outcome[1])}}},
      {"grid_min_delta", result.grid_min_delta},
      {"grid_argmin_count", result.grid_argmin.size()},
      {"grid_argmin_includes_theta_zero", theta_zero},
      {"per_outcome", result.per_outcome},
      {"grid_points", result.table.size()},
      {"max_closed_form_deviation", max_dev},
  };
}

nlohmann::json describe_lattice(const ToricLattice &lattice) {
  nlohmann::json edges = nlohmann::json::array();
  for (size_t q = 0; q < lattice.num_qubits(); ++q) {
    EdgeLocation loc = lattice.edge_location(q);
    edges.push_back({{"index", q}, {"vertex", vertex_json(loc.vertex)}, {"dir", dir_name(loc.dir)}});
  }
  EdgeLocation bob = lattice.edge_location(lattice.bob_qubit());
  return {
      {"L", lattice.L()},
      {"n_qubits", lattice.num_qubits()},
      {"edges", edges},
      {"stars", lattice.stars()},
      {"plaquettes", lattice.plaquettes()},
      {"wilson_z_loops", lattice.wilson_z_loops()},
      {"bob",
       {{"qubit", lattice.bob_qubit()},
        {"vertex", vertex_json(bob.vertex)},
        {"dir", dir_name(bob.dir)},
        {"stars", lattice.bob_stars()},
        {"plaquettes", lattice.bob_plaquettes()}}},
      {"region_A", lattice.region_a()},
  };
}

}  // namespace qet
