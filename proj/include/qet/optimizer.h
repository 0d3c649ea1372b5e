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

#ifndef QET_OPTIMIZER_H_
#define QET_OPTIMIZER_H_

#include <array>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qet/qet_protocol.h"

namespace qet {

/// U = q0 I + i (q1 X + q2 Y + q3 Z) on Bob's qubit; a unit 4-vector.
using Quaternion = std::array<double, 4>;

/// (cos theta, k sin theta n).
Quaternion unitary_quaternion(const LoccParams &params, int k);

/// Energy of one measurement branch after Bob's unitary. Since
/// U^dag H U is quadratic in q, E(q) = q^T G q with
/// G[a][b] = Re <psi_k| tau_a^dag H tau_b |psi_k>, tau = (I, iX, iY, iZ),
/// and psi_k the unnormalized post-measurement branch.
struct BranchForm {
  std::array<std::array<double, 4>, 4> g{};

  double energy(const Quaternion &q) const;
};

/// Everything a sweep needs, precomputed from one backend.
struct LoccEnergyModel {
  double ground_energy = 0.0;
  double injected_absolute = 0.0;
  double p_plus = 0.0;
  std::array<BranchForm, 2> branches;
  /// Empty when the model has no closed form.
  std::function<double(const LoccParams &)> closed_form;
  std::string backend;

  double energy_injected() const { return injected_absolute - ground_energy; }
  double branch_energy(size_t outcome, const LoccParams &params) const;
  /// E_B relative to ground.
  double energy_after(const LoccStrategy &strategy) const;
  double delta(const LoccStrategy &strategy) const;
};

LoccEnergyModel toric_energy_model(const ToricGround &ground, const MeasurementScheme &scheme, Backend backend);

struct GridSpec {
  /// theta takes theta_steps + 1 evenly spaced values in [theta_min, theta_max];
  /// theta_steps = 0 pins theta to theta_min, refinement included.
  size_t theta_steps = 128;
  double theta_min = 0.0;
  double theta_max = 2.0 * std::numbers::pi;
  size_t axis_count = 512;
  /// Coordinate-descent refinement from the best grid point, with theta
  /// kept inside [theta_min, theta_max].
  bool refine = true;
  double tolerance = 1e-9;
};

std::vector<double> theta_samples(const GridSpec &spec);

/// Golden-angle spiral of `count` unit vectors, z descending from ~1 to ~-1.
std::vector<std::array<double, 3>> fibonacci_sphere(size_t count);

struct SweepRow {
  LoccParams params;
  double p_plus = 0.0;
  double energy_injected = 0.0;
  double energy_after = 0.0;
  double delta = 0.0;
  double closed_form = 0.0;
  std::string backend;
};

struct OptimizationResult {
  /// Minimum after refinement (equal to grid_min_delta when refine is off).
  double min_delta = 0.0;
  LoccStrategy argmin;
  /// Minimum over the uniform-strategy grid and every grid point within
  /// 1e-12 of it.
  double grid_min_delta = 0.0;
  std::vector<LoccParams> grid_argmin;
  bool per_outcome = false;
  /// Uniform-strategy rows, theta-major then axis order.
  std::vector<SweepRow> table;
};

/// Grid sweep and optional refinement. With per_outcome, each branch is
/// minimized separately (E_B is a sum of independent branch energies).
OptimizationResult optimize(const LoccEnergyModel &model, const GridSpec &spec, bool per_outcome);

OptimizationResult optimize_locc(const ToricGround &ground, const MeasurementScheme &scheme, const GridSpec &spec,
                                 Backend backend, bool per_outcome = false);

}  // namespace qet

#endif  // QET_OPTIMIZER_H_
