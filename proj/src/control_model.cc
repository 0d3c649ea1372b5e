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

#include "qet/control_model.h"

#include <limits>
#include <stdexcept>
#include <string>

namespace qet {

namespace {

PauliPolynomial chain_hamiltonian(const ChainConfig &c) {
  size_t n = c.num_sites;
  PauliPolynomial h = PauliPolynomial::identity(n, c.offset);
  for (size_t i = 0; i + 1 < n; ++i) {
    std::array<size_t, 2> pair{i, i + 1};
    h.add_term(PauliString::product(n, pair, Pauli::kZ), -c.coupling);
  }
  for (size_t i = 0; i < n; ++i) h.add_term(PauliString::single(n, i, Pauli::kX), -c.field);
  return h;
}

const ChainConfig &validated(const ChainConfig &c) {
  if (c.num_sites < kMinChainSites || c.num_sites > kMaxChainSites) {
    throw std::invalid_argument("chain length must be in [2, 6], got " + std::to_string(c.num_sites));
  }
  if (c.site_a >= c.num_sites || c.site_b >= c.num_sites) throw std::invalid_argument("chain site out of range");
  if (c.site_a == c.site_b) throw std::invalid_argument("site_a and site_b must differ");
  return c;
}

std::array<PauliPolynomial, 2> projectors(size_t n, size_t site, Pauli basis) {
  std::array<PauliPolynomial, 2> out;
  for (size_t i = 0; i < 2; ++i) {
    out[i] = PauliPolynomial::identity(n, 0.5);
    out[i].add_term(PauliString::single(n, site, basis), 0.5 * kOutcomes[i]);
  }
  return out;
}

}  // namespace

ChainModel::ChainModel(const ChainConfig &config)
    : config_(validated(config)), hamiltonian_(chain_hamiltonian(config)), ground_(config.num_sites) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_matrix(hamiltonian_));
  ground_energy_ = solver.eigenvalues()(0);
  Eigen::VectorXcd v = solver.eigenvectors().col(0);
  std::vector<Complex> amps(v.data(), v.data() + v.size());
  ground_ = StateVector(config.num_sites, std::move(amps));
  ground_.normalize();
}

double ChainModel::residual() const {
  StateVector r = apply_poly(hamiltonian_, ground_);
  StateVector shifted = ground_;
  shifted *= -ground_energy_;
  r += shifted;
  return r.norm();
}

EnergyReport qet_run(const ChainModel &model, Pauli basis, const LoccStrategy &strategy) {
  const ChainConfig &c = model.config();
  size_t n = c.num_sites;
  const PauliPolynomial &h = model.hamiltonian();
  auto ps = projectors(n, c.site_a, basis);

  EnergyReport report;
  report.scheme = std::string("sigma-") + pauli_char(basis) + " on site " + std::to_string(c.site_a) +
                  ", LOCC on site " + std::to_string(c.site_b);
  report.locc = strategy;
  report.backend = "dense";
  report.ground_energy = model.ground_energy();
  report.closed_form = std::numeric_limits<double>::quiet_NaN();

  double injected = 0.0;
  double after = 0.0;
  for (size_t i = 0; i < 2; ++i) {
    StateVector psi = apply_poly(ps[i], model.ground_state());
    StateVector moved = apply_poly(locc_unitary(strategy.per_outcome[i], kOutcomes[i], c.site_b, n), psi);
    double p = psi.inner(psi).real();
    (i == 0 ? report.p_plus : report.p_minus) = p;
    injected += expectation_sv(h, psi).real();
    after += expectation_sv(h, moved).real();
  }
  report.energy_injected = injected - report.ground_energy;
  report.energy_after = after - report.ground_energy;
  report.delta = after - injected;
  return report;
}

LoccEnergyModel control_energy_model(const ChainModel &model, Pauli basis) {
  const ChainConfig &c = model.config();
  size_t n = c.num_sites;
  const PauliPolynomial &h = model.hamiltonian();
  auto ps = projectors(n, c.site_a, basis);
  const Complex i_unit{0.0, 1.0};
  std::array<PauliPolynomial, 4> tau{PauliPolynomial::identity(n),
                                     PauliPolynomial(PauliString::single(n, c.site_b, Pauli::kX), i_unit),
                                     PauliPolynomial(PauliString::single(n, c.site_b, Pauli::kY), i_unit),
                                     PauliPolynomial(PauliString::single(n, c.site_b, Pauli::kZ), i_unit)};

  LoccEnergyModel out;
  out.backend = "dense";
  out.ground_energy = model.ground_energy();
  for (size_t k = 0; k < 2; ++k) {
    StateVector psi = apply_poly(ps[k], model.ground_state());
    if (k == 0) out.p_plus = psi.inner(psi).real();
    std::vector<StateVector> phi;
    std::vector<StateVector> h_phi;
    for (size_t b = 0; b < 4; ++b) {
      phi.push_back(apply_poly(tau[b], psi));
      h_phi.push_back(apply_poly(h, phi.back()));
    }
    for (size_t a = 0; a < 4; ++a) {
      for (size_t b = 0; b < 4; ++b) out.branches[k].g[a][b] = phi[a].inner(h_phi[b]).real();
    }
    out.injected_absolute += out.branches[k].g[0][0];
  }
  return out;
}

OptimizationResult optimize_control(const ChainModel &model, Pauli basis, const GridSpec &spec, bool per_outcome) {
  return optimize(control_energy_model(model, basis), spec, per_outcome);
}

}  // namespace qet
