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

#ifndef QET_CONTROL_MODEL_H_
#define QET_CONTROL_MODEL_H_

#include <cstddef>

#include "qet/optimizer.h"
#include "qet/pauli_polynomial.h"
#include "qet/qet_protocol.h"
#include "qet/state_vector.h"

namespace qet {

/// Open transverse-field Ising chain
///   H = -J sum_i Z_i Z_{i+1} - h sum_i X_i + offset,
/// used to show the protocol machinery detects energy extraction when the
/// ground state allows it.
struct ChainConfig {
  size_t num_sites = 2;
  double coupling = 1.0;  // J
  double field = 1.0;     // h
  size_t site_a = 0;
  size_t site_b = 1;
  double offset = 0.0;
};

inline constexpr size_t kMinChainSites = 2;
inline constexpr size_t kMaxChainSites = 6;

class ChainModel {
 public:
  /// Throws std::invalid_argument for N outside [2, 6], sites out of range,
  /// or site_a == site_b.
  explicit ChainModel(const ChainConfig &config);

  const ChainConfig &config() const { return config_; }
  const PauliPolynomial &hamiltonian() const { return hamiltonian_; }
  const StateVector &ground_state() const { return ground_; }
  double ground_energy() const { return ground_energy_; }
  /// ||(H - E0) psi0||.
  double residual() const;

 private:
  ChainConfig config_;
  PauliPolynomial hamiltonian_;
  StateVector ground_;
  double ground_energy_;
};

/// Projective measurement of sigma^basis on site A with projectors
/// (I + k sigma) / 2, then Bob's per-outcome unitary on site B. Energies are
/// relative to the chain's ground energy.
EnergyReport qet_run(const ChainModel &model, Pauli basis, const LoccStrategy &strategy);

LoccEnergyModel control_energy_model(const ChainModel &model, Pauli basis);

OptimizationResult optimize_control(const ChainModel &model, Pauli basis, const GridSpec &spec,
                                    bool per_outcome = true);

}  // namespace qet

#endif  // QET_CONTROL_MODEL_H_
