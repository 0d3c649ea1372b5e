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

#include "qet/optimizer.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qet/parallel.h"

namespace qet {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr size_t kMaxDescentMoves = 1'000'000;

std::array<PauliPolynomial, 4> tau_ops(size_t qubit, size_t n) {
  const Complex i{0.0, 1.0};
  return {PauliPolynomial::identity(n),
          PauliPolynomial(PauliString::single(n, qubit, Pauli::kX), i),
          PauliPolynomial(PauliString::single(n, qubit, Pauli::kY), i),
          PauliPolynomial(PauliString::single(n, qubit, Pauli::kZ), i)};
}

// (theta, polar, azimuth) <-> LoccParams.
struct Coordinates {
  std::array<double, 3> x;
};

Coordinates to_coordinates(const LoccParams &p) {
  double z = std::clamp(p.axis[2], -1.0, 1.0);
  return {{p.theta, std::acos(z), std::atan2(p.axis[1], p.axis[0])}};
}

LoccParams from_coordinates(const Coordinates &c) {
  double sp = std::sin(c.x[1]);
  LoccParams p{c.x[0], {sp * std::cos(c.x[2]), sp * std::sin(c.x[2]), std::cos(c.x[1])}};
  // Renormalize away rounding so validate() never trips.
  double norm = std::sqrt(p.axis[0] * p.axis[0] + p.axis[1] * p.axis[1] + p.axis[2] * p.axis[2]);
  for (double &a : p.axis) a /= norm;
  return p;
}

// Compass search: try +-step on each coordinate, accept the first strict
// improvement, halve all steps when none helps.
template <typename Objective>
std::pair<LoccParams, double> coordinate_descent(Objective objective, const LoccParams &start, const GridSpec &spec) {
  Coordinates at = to_coordinates(start);
  double best = objective(start);
  double theta_span = spec.theta_max - spec.theta_min;
  double angle_step = std::sqrt(4.0 * std::numbers::pi / static_cast<double>(std::max<size_t>(spec.axis_count, 1)));
  std::array<double, 3> step{
      spec.theta_steps > 0 ? theta_span / static_cast<double>(spec.theta_steps) : 0.0, angle_step,
      angle_step};
  size_t moves = 0;
  while (std::max({step[0], step[1], step[2]}) > spec.tolerance && moves < kMaxDescentMoves) {
    bool improved = false;
    for (size_t c = 0; c < 3 && !improved; ++c) {
      if (step[c] <= 0.0) continue;
      for (double dir : {1.0, -1.0}) {
        Coordinates trial = at;
        trial.x[c] += dir * step[c];
        if (c == 0) trial.x[0] = std::clamp(trial.x[0], spec.theta_min, spec.theta_max);
        if (c == 1) trial.x[1] = std::clamp(trial.x[1], 0.0, std::numbers::pi);
        double value = objective(from_coordinates(trial));
        ++moves;
        if (value < best) {
          best = value;
          at = trial;
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      for (double &s : step) s *= 0.5;
    }
  }
  return {from_coordinates(at), best};
}

}  // namespace

Quaternion unitary_quaternion(const LoccParams &params, int k) {
  double s = static_cast<double>(k) * std::sin(params.theta);
  return {std::cos(params.theta), s * params.axis[0], s * params.axis[1], s * params.axis[2]};
}

double BranchForm::energy(const Quaternion &q) const {
  double total = 0.0;
  for (size_t a = 0; a < 4; ++a) {
    for (size_t b = 0; b < 4; ++b) total += q[a] * g[a][b] * q[b];
  }
  return total;
}

double LoccEnergyModel::branch_energy(size_t outcome, const LoccParams &params) const {
  return branches[outcome].energy(unitary_quaternion(params, kOutcomes[outcome]));
}

double LoccEnergyModel::energy_after(const LoccStrategy &strategy) const {
  return branch_energy(0, strategy.per_outcome[0]) + branch_energy(1, strategy.per_outcome[1]) - ground_energy;
}

double LoccEnergyModel::delta(const LoccStrategy &strategy) const {
  return energy_after(strategy) - energy_injected();
}

LoccEnergyModel toric_energy_model(const ToricGround &ground, const MeasurementScheme &scheme, Backend backend) {
  const ToricLattice &lat = ground.lattice();
  const PauliPolynomial &h = ground.hamiltonian();
  size_t n = lat.num_qubits();
  auto ms = measurement_ops(scheme, lat);
  auto tau = tau_ops(lat.bob_qubit(), n);

  LoccEnergyModel model;
  model.backend = backend_name(backend);
  MeasurementBasis basis = scheme.basis;
  if (closed_form_applies(lat, scheme)) {
    model.closed_form = [basis](const LoccParams &p) { return delta_closed_form(p, basis); };
  }
  model.ground_energy = ground.expectation(h, backend).real();
  model.p_plus = ground.expectation(ms[0], backend).real();

  for (size_t i = 0; i < 2; ++i) {
    BranchForm &form = model.branches[i];
    if (backend == Backend::kStabilizer) {
      for (size_t a = 0; a < 4; ++a) {
        PauliPolynomial left = ms[i] * poly_adjoint(tau[a]) * h;
        for (size_t b = 0; b < 4; ++b) {
          form.g[a][b] = ground.expectation(left * tau[b] * ms[i], backend).real();
        }
      }
    } else {
      StateVector psi = apply_poly(ms[i], ground.state());
      std::array<StateVector, 4> phi{psi, psi, psi, psi};
      std::array<StateVector, 4> h_phi{psi, psi, psi, psi};
      for (size_t b = 0; b < 4; ++b) {
        phi[b] = apply_poly(tau[b], psi);
        h_phi[b] = apply_poly(h, phi[b]);
      }
      for (size_t a = 0; a < 4; ++a) {
        for (size_t b = 0; b < 4; ++b) form.g[a][b] = phi[a].inner(h_phi[b]).real();
      }
    }
    model.injected_absolute += form.g[0][0];
  }
  return model;
}

std::vector<double> theta_samples(const GridSpec &spec) {
  if (spec.theta_steps == 0) return {spec.theta_min};
  std::vector<double> out;
  double span = spec.theta_max - spec.theta_min;
  for (size_t i = 0; i <= spec.theta_steps; ++i) {
    out.push_back(spec.theta_min + span * static_cast<double>(i) / static_cast<double>(spec.theta_steps));
  }
  return out;
}

std::vector<std::array<double, 3>> fibonacci_sphere(size_t count) {
  std::vector<std::array<double, 3>> out;
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (size_t i = 0; i < count; ++i) {
    double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double phi = golden_angle * static_cast<double>(i);
    std::array<double, 3> v{r * std::cos(phi), r * std::sin(phi), z};
    double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (double &c : v) c /= norm;
    out.push_back(v);
  }
  return out;
}

OptimizationResult optimize(const LoccEnergyModel &model, const GridSpec &spec, bool per_outcome) {
  std::vector<double> thetas = theta_samples(spec);
  std::vector<std::array<double, 3>> axes = fibonacci_sphere(spec.axis_count);
  size_t rows = thetas.size() * axes.size();

  OptimizationResult result;
  result.per_outcome = per_outcome;
  result.table.resize(rows);
  double injected = model.energy_injected();
  parallel_for(rows, [&](size_t idx) {
    SweepRow &row = result.table[idx];
    row.params = LoccParams{thetas[idx / axes.size()], axes[idx % axes.size()]};
    row.p_plus = model.p_plus;
    row.energy_injected = injected;
    row.energy_after = model.energy_after(LoccStrategy::uniform(row.params));
    row.delta = row.energy_after - injected;
    row.closed_form = model.closed_form ? model.closed_form(row.params) : std::numeric_limits<double>::quiet_NaN();
    row.backend = model.backend;
  });
  if (rows == 0) return result;

  auto best_row = std::min_element(result.table.begin(), result.table.end(),
                                   [](const SweepRow &a, const SweepRow &b) { return a.delta < b.delta; });
  result.grid_min_delta = best_row->delta;
  for (const SweepRow &row : result.table) {
    if (row.delta <= result.grid_min_delta + kTieTolerance) result.grid_argmin.push_back(row.params);
  }

  if (!per_outcome) {
    result.argmin = LoccStrategy::uniform(best_row->params);
    result.min_delta = best_row->delta;
    if (spec.refine) {
      auto objective = [&](const LoccParams &p) { return model.delta(LoccStrategy::uniform(p)); };
      auto [params, value] = coordinate_descent(objective, best_row->params, spec);
      if (value < result.min_delta) {
        result.argmin = LoccStrategy::uniform(params);
        result.min_delta = value;
      }
    }
    return result;
  }

  for (size_t i = 0; i < 2; ++i) {
    auto objective = [&model, i](const LoccParams &p) { return model.branch_energy(i, p); };
    const LoccParams *best = nullptr;
    double best_value = std::numeric_limits<double>::infinity();
    for (const SweepRow &row : result.table) {
      double value = objective(row.params);
      if (value < best_value) {
        best_value = value;
        best = &row.params;
      }
    }
    result.argmin.per_outcome[i] = *best;
    if (spec.refine) {
      auto [params, value] = coordinate_descent(objective, *best, spec);
      if (value < best_value) result.argmin.per_outcome[i] = params;
    }
  }
  result.min_delta = model.delta(result.argmin);
  return result;
}

OptimizationResult optimize_locc(const ToricGround &ground, const MeasurementScheme &scheme, const GridSpec &spec,
                                 Backend backend, bool per_outcome) {
  return optimize(toric_energy_model(ground, scheme, backend), spec, per_outcome);
}

}  // namespace qet
