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

#include "qet/qet_protocol.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace qet {

namespace {

constexpr double kExpectationTolerance = 1e-10;
constexpr double kIdentityTolerance = 1e-12;

const Complex kI{0.0, 1.0};

PauliPolynomial single(size_t n, size_t qubit, Pauli p) {
  return PauliPolynomial(PauliString::single(n, qubit, p));
}

PauliPolynomial sum_of(const ToricLattice &lat, std::span<const size_t> indices, bool stars) {
  PauliPolynomial out(lat.num_qubits());
  for (size_t i : indices) out.add_term(stars ? lat.star_operator(i) : lat.plaquette_operator(i));
  return out;
}

std::string fmt_error(double e) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", e);
  return buf;
}

// Tracks the worst deviation across sub-checks of one named check.
struct Tally {
  double worst = 0.0;
  size_t checked = 0;
  bool pass = true;

  void record(double error, double tolerance) {
    worst = std::max(worst, error);
    ++checked;
    if (!(error <= tolerance)) pass = false;
  }
};

double expectation_error(Complex value, Backend backend) {
  // The stabilizer engine produces exact dyadic sums; zeros must be exact.
  if (backend == Backend::kStabilizer && value != Complex{0.0, 0.0}) {
    return std::max(std::abs(value), std::numeric_limits<double>::min());
  }
  return std::abs(value);
}

double zero_tolerance(Backend backend) { return backend == Backend::kStabilizer ? 0.0 : kExpectationTolerance; }

}  // namespace

const char *backend_name(Backend backend) {
  return backend == Backend::kStabilizer ? "stabilizer" : "statevector";
}

void LoccParams::validate() const {
  double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!(std::abs(norm - 1.0) <= 1e-12) || !std::isfinite(theta)) {
    throw std::invalid_argument("LOCC axis must be a unit vector (norm " + std::to_string(norm) + ")");
  }
}

LoccParams random_locc_params(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  std::normal_distribution<double> gauss;
  LoccParams p;
  p.theta = angle(rng);
  double norm = 0.0;
  do {
    for (double &a : p.axis) a = gauss(rng);
    norm = std::sqrt(p.axis[0] * p.axis[0] + p.axis[1] * p.axis[1] + p.axis[2] * p.axis[2]);
  } while (norm < 1e-6);
  for (double &a : p.axis) a /= norm;
  return p;
}

bool LoccStrategy::is_uniform() const {
  return per_outcome[0].theta == per_outcome[1].theta && per_outcome[0].axis == per_outcome[1].axis;
}

ToricGround::ToricGround(const ToricLattice &lattice, int sector, bool with_statevector)
    : lattice_(lattice), sector_(sector), group_(lattice.ground_group(sector)), hamiltonian_(lattice.hamiltonian()) {
  if (with_statevector) {
    if (lattice.num_qubits() > StateVector::kMaxQubits) {
      throw CapacityError("statevector backend supports at most " + std::to_string(StateVector::kMaxQubits) +
                          " qubits; L=" + std::to_string(lattice.L()) + " needs " +
                          std::to_string(lattice.num_qubits()));
    }
    state_ = ground_state(lattice, sector);
  }
}

const StateVector &ToricGround::state() const {
  if (!state_) throw CapacityError("statevector backend was not built for this ground state");
  return *state_;
}

Complex ToricGround::expectation(const PauliPolynomial &a, Backend backend) const {
  if (backend == Backend::kStabilizer) return group_.expectation(a);
  return expectation_sv(a, state());
}

std::array<PauliPolynomial, 2> measurement_ops(const MeasurementScheme &scheme, const ToricLattice &lattice) {
  if (scheme.support.size() != lattice.num_qubits()) throw std::invalid_argument("scheme does not fit lattice");
  if (!scheme.support.any()) throw std::invalid_argument("measurement support is empty");
  if (scheme.support.get(lattice.bob_qubit())) throw std::invalid_argument("measurement touches Bob's qubit");
  std::array<PauliPolynomial, 2> out;
  PauliString s = scheme.string();
  for (size_t i = 0; i < 2; ++i) {
    out[i] = PauliPolynomial::identity(lattice.num_qubits(), 0.5);
    out[i].add_term(s, 0.5 * kOutcomes[i]);
  }
  return out;
}

PauliPolynomial axis_operator(const std::array<double, 3> &axis, size_t qubit, size_t num_qubits) {
  PauliPolynomial out(num_qubits);
  out.add_term(PauliString::single(num_qubits, qubit, Pauli::kX), axis[0]);
  out.add_term(PauliString::single(num_qubits, qubit, Pauli::kY), axis[1]);
  out.add_term(PauliString::single(num_qubits, qubit, Pauli::kZ), axis[2]);
  return out;
}

PauliPolynomial locc_unitary(const LoccParams &params, int k, size_t qubit, size_t num_qubits) {
  params.validate();
  if (k != 1 && k != -1) throw std::invalid_argument("outcome k must be +1 or -1");
  PauliPolynomial out = PauliPolynomial::identity(num_qubits, std::cos(params.theta));
  out += axis_operator(params.axis, qubit, num_qubits) * (kI * static_cast<double>(k) * std::sin(params.theta));
  return out;
}

Injection energy_injected(const ToricGround &ground, const MeasurementScheme &scheme, Backend backend) {
  const PauliPolynomial &h = ground.hamiltonian();
  auto ms = measurement_ops(scheme, ground.lattice());
  Injection out{};
  out.ground_energy = ground.expectation(h, backend).real();
  double total = 0.0;
  for (size_t i = 0; i < 2; ++i) {
    total += ground.expectation(ms[i] * h * ms[i], backend).real();
    double p = ground.expectation(ms[i], backend).real();
    (i == 0 ? out.p_plus : out.p_minus) = p;
  }
  out.energy = total - out.ground_energy;
  return out;
}

std::vector<StabilizerValue> excitation_profile(const ToricGround &ground, const MeasurementScheme &scheme,
                                                Backend backend) {
  const ToricLattice &lat = ground.lattice();
  auto ms = measurement_ops(scheme, lat);
  std::vector<PauliString> terms = lat.stabilizer_terms();
  std::vector<std::string> labels = lat.stabilizer_labels();
  std::vector<StabilizerValue> out;
  for (size_t t = 0; t < terms.size(); ++t) {
    PauliPolynomial term(terms[t]);
    double value = 0.0;
    for (size_t i = 0; i < 2; ++i) value += ground.expectation(ms[i] * term * ms[i], backend).real();
    out.push_back({labels[t], value});
  }
  return out;
}

EnergyReport energy_after_locc(const ToricGround &ground, const MeasurementScheme &scheme,
                               const LoccStrategy &strategy, Backend backend) {
  const ToricLattice &lat = ground.lattice();
  const PauliPolynomial &h = ground.hamiltonian();
  size_t n = lat.num_qubits();
  auto ms = measurement_ops(scheme, lat);

  EnergyReport report;
  report.scheme = scheme.describe();
  report.locc = strategy;
  report.backend = backend_name(backend);

  double injected = 0.0;
  double after = 0.0;
  std::array<double, 2> probs{};
  if (backend == Backend::kStabilizer) {
    report.ground_energy = ground.expectation(h, backend).real();
    for (size_t i = 0; i < 2; ++i) {
      PauliPolynomial u = locc_unitary(strategy.per_outcome[i], kOutcomes[i], lat.bob_qubit(), n);
      PauliPolynomial u_dag = poly_adjoint(u);
      probs[i] = ground.expectation(ms[i], backend).real();
      injected += ground.expectation(ms[i] * h * ms[i], backend).real();
      after += ground.expectation(ms[i] * u_dag * h * u * ms[i], backend).real();
    }
  } else {
    const StateVector &xi = ground.state();
    report.ground_energy = expectation_sv(h, xi).real();
    for (size_t i = 0; i < 2; ++i) {
      PauliPolynomial u = locc_unitary(strategy.per_outcome[i], kOutcomes[i], lat.bob_qubit(), n);
      StateVector psi = apply_poly(ms[i], xi);
      StateVector moved = apply_poly(u, psi);
      probs[i] = psi.inner(psi).real();
      injected += expectation_sv(h, psi).real();
      after += expectation_sv(h, moved).real();
    }
  }
  report.p_plus = probs[0];
  report.p_minus = probs[1];
  report.energy_injected = injected - report.ground_energy;
  report.energy_after = after - report.ground_energy;
  report.delta = after - injected;
  report.closed_form = strategy.is_uniform() && closed_form_applies(lat, scheme)
                           ? delta_closed_form(strategy.per_outcome[0], scheme.basis)
                           : std::numeric_limits<double>::quiet_NaN();
  report.profile = excitation_profile(ground, scheme, backend);
  return report;
}

bool closed_form_applies(const ToricLattice &lattice, const MeasurementScheme &scheme) {
  PauliString s = scheme.string();
  bool x_basis = scheme.basis == MeasurementBasis::kX;
  const auto &cells = x_basis ? lattice.bob_plaquettes() : lattice.bob_stars();
  return std::none_of(cells.begin(), cells.end(), [&](size_t c) {
    return commutes(s, x_basis ? lattice.plaquette_operator(c) : lattice.star_operator(c));
  });
}

double delta_closed_form(const LoccParams &params) {
  double s = std::sin(params.theta);
  return 4.0 * s * s * (params.axis[1] * params.axis[1] + params.axis[2] * params.axis[2]);
}

double delta_closed_form(const LoccParams &params, MeasurementBasis basis) {
  if (basis == MeasurementBasis::kX) return delta_closed_form(params);
  LoccParams dual = params;
  std::swap(dual.axis[0], dual.axis[2]);
  return delta_closed_form(dual);
}

bool all_pass(const CheckReport &report) {
  return std::all_of(report.begin(), report.end(), [](const CheckResult &c) { return c.pass; });
}

CheckResult verify_lemma1(const ToricGround &ground, const MeasurementScheme &scheme,
                          std::span<const Backend> backends) {
  const ToricLattice &lat = ground.lattice();
  auto ms = measurement_ops(scheme, lat);
  // X strings are tested against plaquettes, Z strings against stars.
  bool x_basis = scheme.basis == MeasurementBasis::kX;
  const auto &cells = x_basis ? lat.plaquettes() : lat.stars();

  Tally identity;
  Tally expectation;
  size_t odd = 0;
  for (size_t c = 0; c < cells.size(); ++c) {
    size_t overlap = 0;
    for (size_t e : cells[c]) overlap += scheme.support.get(e) ? 1 : 0;
    PauliPolynomial b(x_basis ? lat.plaquette_operator(c) : lat.star_operator(c));
    if (overlap % 2) ++odd;
    for (size_t i = 0; i < 2; ++i) {
      PauliPolynomial sandwich = ms[i] * b * ms[i];
      PauliPolynomial expected = overlap % 2 ? PauliPolynomial(lat.num_qubits()) : ms[i] * b;
      identity.record(sandwich.distance(expected), kIdentityTolerance);
      for (Backend backend : backends) {
        Complex diff = ground.expectation(sandwich, backend) - ground.expectation(expected, backend);
        expectation.record(std::abs(diff), kExpectationTolerance);
      }
    }
  }
  CheckResult out{"LEMMA1", identity.pass && expectation.pass, std::max(identity.worst, expectation.worst), ""};
  out.detail = std::to_string(cells.size()) + " cells (" + std::to_string(odd) + " odd overlap) x 2 outcomes, " +
               std::to_string(expectation.checked) + " expectations, max error " +
               fmt_error(out.max_error);
  return out;
}

CheckResult verify_lemma2(const ToricGround &ground, std::span<const Backend> backends) {
  const ToricLattice &lat = ground.lattice();
  Tally tally;
  for (size_t q = 0; q < lat.num_qubits(); ++q) {
    for (Pauli p : {Pauli::kX, Pauli::kY, Pauli::kZ}) {
      PauliPolynomial op = single(lat.num_qubits(), q, p);
      for (Backend backend : backends) {
        tally.record(expectation_error(ground.expectation(op, backend), backend), zero_tolerance(backend));
      }
    }
  }
  CheckResult out{"LEMMA2", tally.pass, tally.worst, ""};
  out.detail = std::to_string(3 * lat.num_qubits()) + " single-qubit Paulis, " + std::to_string(tally.checked) +
               " expectations, max |<sigma>| " + fmt_error(tally.worst);
  return out;
}

CheckResult verify_lemma3(const ToricGround &ground, const MeasurementScheme &scheme,
                          std::span<const Backend> backends) {
  const ToricLattice &lat = ground.lattice();
  size_t n = lat.num_qubits();
  size_t r1 = lat.bob_qubit();
  auto ms = measurement_ops(scheme, lat);
  bool x_basis = scheme.basis == MeasurementBasis::kX;
  PauliPolynomial cells = x_basis ? sum_of(lat, lat.bob_stars(), true) : sum_of(lat, lat.bob_plaquettes(), false);
  std::array<std::pair<Pauli, Pauli>, 2> pairs =
      x_basis ? std::array<std::pair<Pauli, Pauli>, 2>{{{Pauli::kZ, Pauli::kX}, {Pauli::kX, Pauli::kY}}}
              : std::array<std::pair<Pauli, Pauli>, 2>{{{Pauli::kX, Pauli::kZ}, {Pauli::kZ, Pauli::kY}}};

  Tally tally;
  for (auto [pi, pj] : pairs) {
    PauliPolynomial op = single(n, r1, pi) * single(n, r1, pj) * cells;
    for (size_t i = 0; i < 2; ++i) {
      PauliPolynomial sandwich = ms[i] * op * ms[i];
      for (Backend backend : backends) {
        tally.record(expectation_error(ground.expectation(sandwich, backend), backend), zero_tolerance(backend));
      }
    }
  }
  CheckResult out{"LEMMA3", tally.pass, tally.worst, ""};
  out.detail = std::to_string(tally.checked) + " expectations, max |value| " + fmt_error(tally.worst);
  return out;
}

CheckReport verify_derivation_chain(const ToricGround &ground, const MeasurementScheme &scheme,
                                    const LoccParams &params, std::span<const Backend> backends) {
  params.validate();
  const ToricLattice &lat = ground.lattice();
  const PauliPolynomial &h = ground.hamiltonian();
  size_t n = lat.num_qubits();
  size_t r1 = lat.bob_qubit();
  auto ms = measurement_ops(scheme, lat);
  const auto &axis = params.axis;
  double s = std::sin(params.theta);
  double c = std::cos(params.theta);

  PauliPolynomial nsig = axis_operator(axis, r1, n);
  PauliPolynomial comm = poly_commutator(h, nsig);

  CheckReport report;

  // [H, n.sigma] = -2 n_x B sx - 2 n_y (A + B) sy - 2 n_z A sz.
  PauliPolynomial a_sum = sum_of(lat, lat.bob_stars(), true);
  PauliPolynomial b_sum = sum_of(lat, lat.bob_plaquettes(), false);
  PauliPolynomial expected = b_sum * single(n, r1, Pauli::kX) * (-2.0 * axis[0]) +
                             (a_sum + b_sum) * single(n, r1, Pauli::kY) * (-2.0 * axis[1]) +
                             a_sum * single(n, r1, Pauli::kZ) * (-2.0 * axis[2]);
  double comm_err = comm.distance(expected);
  report.push_back({"commutator_expansion", comm_err <= kIdentityTolerance, comm_err,
                    "polynomial identity, " + std::to_string(comm.num_terms()) + " terms"});

  // M U^dag H U M = M H M + i k sin(theta) M U^dag [H, n.sigma] M.
  std::array<PauliPolynomial, 2> sandwiches;
  std::array<PauliPolynomial, 2> corrections;
  double sandwich_err = 0.0;
  for (size_t i = 0; i < 2; ++i) {
    int k = kOutcomes[i];
    PauliPolynomial u = locc_unitary(params, k, r1, n);
    PauliPolynomial u_dag = poly_adjoint(u);
    sandwiches[i] = ms[i] * u_dag * h * u * ms[i];
    corrections[i] = ms[i] * u_dag * comm * ms[i] * (kI * static_cast<double>(k) * s);
    PauliPolynomial rhs = ms[i] * h * ms[i] + corrections[i];
    sandwich_err = std::max(sandwich_err, sandwiches[i].distance(rhs));
  }
  report.push_back({"sandwich_expansion", sandwich_err <= kIdentityTolerance, sandwich_err,
                    "polynomial identity for both outcomes"});

  double closed = delta_closed_form(params, scheme.basis);
  Tally correction, first, second, closed_tally;
  for (Backend backend : backends) {
    EnergyReport full = energy_after_locc(ground, scheme, LoccStrategy::uniform(params), backend);
    Complex corr = 0.0;
    Complex first_term = 0.0;
    Complex second_term = 0.0;
    for (size_t i = 0; i < 2; ++i) {
      int k = kOutcomes[i];
      corr += ground.expectation(corrections[i], backend);
      first_term += kI * static_cast<double>(k) * (s * c) * ground.expectation(ms[i] * comm * ms[i], backend);
      second_term += s * s * ground.expectation(ms[i] * nsig * comm * ms[i], backend);
    }
    correction.record(std::abs(corr - full.delta), kExpectationTolerance);
    first.record(std::abs(first_term), kExpectationTolerance);
    second.record(std::abs(second_term - full.delta), kExpectationTolerance);
    closed_tally.record(std::abs(second_term - closed), kExpectationTolerance);
  }
  std::string over = std::to_string(backends.size()) + " backend(s)";
  report.push_back({"correction_term", correction.pass, correction.worst, "E_B - E_A vs correction, " + over});
  report.push_back({"first_order_term", first.pass, first.worst, "sin(2 theta)/2 term vanishes, " + over});
  report.push_back({"second_order_term", second.pass, second.worst, "sin^2 theta term equals delta, " + over});
  if (closed_form_applies(lat, scheme)) {
    report.push_back({"closed_form", closed_tally.pass, closed_tally.worst,
                      "sin^2 theta term equals 4 sin^2 theta (n_y^2 + n_z^2), " + over});
  } else {
    report.push_back({"closed_form", true, 0.0, "not applicable: string does not excite both of Bob's cells", true});
  }
  return report;
}

}  // namespace qet
