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

#ifndef QET_QET_PROTOCOL_H_
#define QET_QET_PROTOCOL_H_

#include <array>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qet/pauli_polynomial.h"
#include "qet/stabilizer_group.h"
#include "qet/state_vector.h"
#include "qet/toric_lattice.h"

namespace qet {

enum class Backend { kStabilizer, kStatevector };

const char *backend_name(Backend backend);

/// Measurement outcomes k, in the order used by every per-outcome array.
inline constexpr std::array<int, 2> kOutcomes{+1, -1};

/// Bob's rotation U = cos(theta) + i k sin(theta) n.sigma.
struct LoccParams {
  double theta = 0.0;
  std::array<double, 3> axis{0.0, 0.0, 1.0};

  /// Throws std::invalid_argument unless |axis| = 1 within 1e-12.
  void validate() const;
};

/// theta uniform in [0, 2 pi), axis uniform on the sphere.
LoccParams random_locc_params(std::mt19937_64 &rng);

/// Parameters Bob uses for each outcome (index 0 is k = +1). The uniform
/// strategy uses the same (theta, n) for both, with the sign k entering the
/// unitary as written above.
struct LoccStrategy {
  std::array<LoccParams, 2> per_outcome;

  static LoccStrategy uniform(const LoccParams &params) { return {{params, params}}; }
  bool is_uniform() const;
};

struct StabilizerValue {
  std::string label;
  double value;
};

struct EnergyReport {
  std::string scheme;
  LoccStrategy locc;
  double p_plus = 0.0;
  double p_minus = 0.0;
  // Energies are relative to ground_energy.
  double energy_injected = 0.0;
  double energy_after = 0.0;
  double delta = 0.0;
  // NaN where no closed form applies.
  double closed_form = 0.0;
  double ground_energy = 0.0;
  // Post-measurement sum_k <M_k T M_k> for each Hamiltonian stabilizer T.
  std::vector<StabilizerValue> profile;
  std::string backend;
};

/// The toric-code ground state of one sector, held by both backends. The
/// dense state is only built on request.
class ToricGround {
 public:
  /// Throws CapacityError if with_statevector and the lattice is too big.
  explicit ToricGround(const ToricLattice &lattice, int sector = 0, bool with_statevector = false);

  const ToricLattice &lattice() const { return lattice_; }
  int sector() const { return sector_; }
  const StabilizerGroup &group() const { return group_; }
  const PauliPolynomial &hamiltonian() const { return hamiltonian_; }
  bool has_statevector() const { return state_.has_value(); }
  /// Throws CapacityError when the dense state was not built.
  const StateVector &state() const;

  Complex expectation(const PauliPolynomial &a, Backend backend) const;

 private:
  ToricLattice lattice_;
  int sector_;
  StabilizerGroup group_;
  PauliPolynomial hamiltonian_;
  std::optional<StateVector> state_;
};

/// {M(+1), M(-1)} with M(k) = (I + k S) / 2.
std::array<PauliPolynomial, 2> measurement_ops(const MeasurementScheme &scheme, const ToricLattice &lattice);

/// n.sigma on one qubit.
PauliPolynomial axis_operator(const std::array<double, 3> &axis, size_t qubit, size_t num_qubits);

PauliPolynomial locc_unitary(const LoccParams &params, int k, size_t qubit, size_t num_qubits);

struct Injection {
  double energy;  // relative to ground_energy
  double p_plus;
  double p_minus;
  double ground_energy;
};

/// sum_k <M_k H M_k>, relative to <H>.
Injection energy_injected(const ToricGround &ground, const MeasurementScheme &scheme, Backend backend);

std::vector<StabilizerValue> excitation_profile(const ToricGround &ground, const MeasurementScheme &scheme,
                                                Backend backend);

/// Full protocol. The stabilizer backend evaluates operator sandwiches
/// M U^dag H U M; the statevector backend evolves the post-measurement
/// states and takes <psi'_k|H|psi'_k>.
EnergyReport energy_after_locc(const ToricGround &ground, const MeasurementScheme &scheme,
                               const LoccStrategy &strategy, Backend backend);

/// 4 sin^2(theta) (n_y^2 + n_z^2).
/// True when the measured string anticommutes with both of Bob's plaquettes
/// (X basis) or both of Bob's stars (Z basis), the setting in which the
/// closed form below holds.
bool closed_form_applies(const ToricLattice &lattice, const MeasurementScheme &scheme);

double delta_closed_form(const LoccParams &params);
/// Same formula with the axis roles of X and Z exchanged for Z-strings.
double delta_closed_form(const LoccParams &params, MeasurementBasis basis);

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_error = 0.0;
  std::string detail;
  /// Set when the check does not apply to the inputs; pass stays true.
  bool skipped = false;
};

using CheckReport = std::vector<CheckResult>;

bool all_pass(const CheckReport &report);

/// M B M is either M B (even overlap of B with the measured string) or 0
/// (odd overlap), for every opposite-type stabilizer B and both outcomes.
/// Checked as polynomial identities and as ground expectations.
CheckResult verify_lemma1(const ToricGround &ground, const MeasurementScheme &scheme,
                          std::span<const Backend> backends);

/// <sigma^i_j> = 0 for every qubit j and i in {x, y, z}.
CheckResult verify_lemma2(const ToricGround &ground, std::span<const Backend> backends);

/// <M sigma^i sigma^j (A1 + A2) M> = 0 for (i, j) in {(z, x), (x, y)} on
/// Bob's qubit, both outcomes. Z-strings use the dual roles.
CheckResult verify_lemma3(const ToricGround &ground, const MeasurementScheme &scheme,
                          std::span<const Backend> backends);

/// Each step from the sandwiched energy to the closed form, as separate
/// checks: commutator_expansion, sandwich_expansion, correction_term,
/// first_order_term, second_order_term, closed_form.
CheckReport verify_derivation_chain(const ToricGround &ground, const MeasurementScheme &scheme,
                                    const LoccParams &params, std::span<const Backend> backends);

}  // namespace qet

#endif  // QET_QET_PROTOCOL_H_
