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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qet/control_model.h"
#include "qet/optimizer.h"
#include "qet/qet_protocol.h"
#include "qet/state_vector.h"
#include "qet/toric_lattice.h"
#include "test_util.h"

namespace qet {
namespace {

constexpr double kGoldenControlDelta = -0.10557280900008412;

const std::array<Backend, 2> kBoth{Backend::kStabilizer, Backend::kStatevector};
const std::array<Backend, 1> kStabOnly{Backend::kStabilizer};

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(const char *format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

double delta(const ToricGround &g, const LoccParams &p, Backend b) {
  return energy_after_locc(g, full_region_scheme(g.lattice()), LoccStrategy::uniform(p), b).delta;
}

Verdict nogo_reproduction() {
  Verdict v;
  ToricGround g(ToricLattice(2), 0, true);
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int draw = 0; draw < 1000; ++draw) {
    LoccParams p = random_locc_params(rng);
    double s = std::sin(p.theta);
    double expected = 4.0 * s * s * (p.axis[1] * p.axis[1] + p.axis[2] * p.axis[2]);
    for (Backend b : kBoth) worst = std::max(worst, std::abs(delta(g, p, b) - expected));
  }
  v.require(worst <= 1e-9, "closed-form deviation too large");
  v.detail = fmt("1000 draws x 2 backends, max |dE - 4 sin^2(n_y^2+n_z^2)| = %.3g", worst) +
             (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict nonnegativity() {
  Verdict v;
  std::string summary;
  for (size_t L : {2, 3, 4}) {
    auto start = std::chrono::steady_clock::now();
    ToricGround g{ToricLattice(L)};
    OptimizationResult r = optimize_locc(g, full_region_scheme(g.lattice()), GridSpec{}, Backend::kStabilizer);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool has_zero = false;
    for (const LoccParams &p : r.grid_argmin) has_zero = has_zero || p.theta == 0.0;
    double grid_min = r.grid_min_delta;
    for (const SweepRow &row : r.table) grid_min = std::min(grid_min, row.delta);
    v.require(r.min_delta >= -1e-10 && grid_min >= -1e-10, "L=" + std::to_string(L) + " negative delta");
    v.require(has_zero, "L=" + std::to_string(L) + " argmin misses theta=0");
    v.require(seconds < 60.0, "L=" + std::to_string(L) + " too slow");
    summary += fmt("L=%.0f min %.3g (%.2fs) ", static_cast<double>(L), r.min_delta, seconds);
  }
  v.detail = summary + "argmin includes theta=0" + (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict lemma_suite() {
  Verdict v;
  size_t runs = 0;
  for (size_t L : {2, 3, 4}) {
    ToricGround g(ToricLattice(L), 0, L == 2);
    MeasurementScheme s = full_region_scheme(g.lattice());
    std::vector<std::span<const Backend>> sets{kStabOnly};
    if (L == 2) sets.push_back(kBoth);
    for (std::span<const Backend> backends : sets) {
      for (const CheckResult &c : {verify_lemma1(g, s, backends), verify_lemma2(g, backends),
                                   verify_lemma3(g, s, backends)}) {
        ++runs;
        std::string tag = c.name + " L=" + std::to_string(L);
        v.require(c.pass, tag + " failed: " + c.detail);
        if (backends.size() == 1) v.require(c.max_error == 0.0, tag + " not exactly zero in stabilizer engine");
        if (backends.size() == 2) v.require(c.max_error < 1e-10, tag + " oracle error too large");
      }
    }
  }
  if (v.pass) v.detail = std::to_string(runs) + " lemma runs; stabilizer errors exactly 0, oracle < 1e-10";
  return v;
}

Verdict derivation_chain() {
  Verdict v;
  ToricGround g(ToricLattice(2), 0, true);
  MeasurementScheme s = full_region_scheme(g.lattice());
  std::mt19937_64 rng(404);
  std::map<std::string, double> worst;
  for (int draw = 0; draw < 100; ++draw) {
    for (const CheckResult &c : verify_derivation_chain(g, s, random_locc_params(rng), kBoth)) {
      v.require(c.pass && !c.skipped, c.name + " failed");
      worst[c.name] = std::max(worst[c.name], c.max_error);
    }
  }
  v.require(worst["sandwich_expansion"] <= 1e-12, "operator identity not exact");
  v.require(worst["first_order_term"] <= 1e-10, "first-order term nonzero");
  v.require(worst["second_order_term"] <= 1e-10, "second-order term differs from full delta");
  std::string summary = "100 draws:";
  for (const auto &[name, err] : worst) summary += " " + name + "=" + fmt("%.2g", err);
  v.detail = summary + (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict ground_facts() {
  Verdict v;
  ToricLattice l2(2);
  std::vector<double> spectrum = hamiltonian_spectrum(l2);
  size_t degeneracy = 0;
  for (double e : spectrum) degeneracy += std::abs(e - spectrum.front()) < 1e-9;
  v.require(std::abs(spectrum.front() + 8.0) < 1e-9, "lowest eigenvalue is not -8");
  v.require(degeneracy == 4, "degeneracy is " + std::to_string(degeneracy));
  size_t checked = 0;
  for (size_t L : {2, 3, 4}) {
    ToricGround g(ToricLattice(L), 0, L <= 3);
    for (const PauliString &t : g.lattice().stabilizer_terms()) {
      v.require(g.group().expectation(t) == 1.0, "stabilizer engine <T> != 1");
      if (g.has_statevector()) {
        v.require(std::abs(expectation_sv(PauliPolynomial(t), g.state()) - Complex(1.0)) < 1e-10,
                  "statevector <T> != 1");
      }
      ++checked;
    }
  }
  if (v.pass) {
    v.detail = fmt("L=2 lowest eigenvalue %.12g with multiplicity 4; %.0f stabilizer terms at +1 (L=2,3,4)",
                   spectrum.front(), static_cast<double>(checked));
  }
  return v;
}

Verdict excitation_profile_check() {
  Verdict v;
  ToricLattice lat(2);
  ToricGround g(lat, 0, true);
  MeasurementScheme s = full_region_scheme(lat);
  std::string excited;
  for (Backend b : kBoth) {
    for (const StabilizerValue &sv : excitation_profile(g, s, b)) {
      bool vortex = sv.label == "B" + std::to_string(lat.bob_plaquettes()[0]) ||
                    sv.label == "B" + std::to_string(lat.bob_plaquettes()[1]);
      v.require(std::abs(sv.value - (vortex ? 0.0 : 1.0)) < 1e-10, sv.label + " wrong on " + backend_name(b));
      if (b == Backend::kStabilizer && std::abs(sv.value) < 0.5) excited += sv.label + " ";
    }
  }
  // Independent dense oracle for E_A.
  Eigen::MatrixXcd h = testing::oracle_matrix(lat.hamiltonian());
  Eigen::VectorXcd xi(256);
  for (int i = 0; i < 256; ++i) xi[i] = g.state().amplitudes()[i];
  double e0 = (xi.adjoint() * h * xi)(0).real();
  double total = 0.0;
  for (const PauliPolynomial &m : measurement_ops(s, lat)) {
    Eigen::MatrixXcd md = testing::oracle_matrix(m);
    total += (xi.adjoint() * md * h * md * xi)(0).real();
  }
  double oracle_ea = total - e0;
  double engine_ea = energy_injected(g, s, Backend::kStabilizer).energy;
  v.require(std::abs(oracle_ea - 2.0) < 1e-10, "oracle E_A != 2");
  v.require(std::abs(engine_ea - 2.0) < 1e-10, "engine E_A != 2");
  if (v.pass) v.detail = "excited: " + excited + fmt("others +1; E_A engine %.12g, dense oracle %.12g", engine_ea, oracle_ea);
  return v;
}

Verdict backend_equivalence() {
  Verdict v;
  ToricLattice lat(2);
  size_t n = lat.num_qubits();
  std::mt19937_64 rng(707);
  size_t comparisons = 0;
  double worst = 0.0;
  std::vector<ToricGround> grounds;
  for (int sector = 0; sector < kNumSectors; ++sector) grounds.emplace_back(lat, sector, true);
  auto compare = [&](const ToricGround &g, const PauliPolynomial &a) {
    worst = std::max(worst, std::abs(g.expectation(a, Backend::kStabilizer) - g.expectation(a, Backend::kStatevector)));
    ++comparisons;
  };
  auto ms = measurement_ops(full_region_scheme(lat), lat);
  const PauliPolynomial &h = lat.hamiltonian();
  // Protocol operators: sandwiches, unitaries, lemma operators.
  for (int draw = 0; draw < 250; ++draw) {
    const ToricGround &g = grounds[draw % kNumSectors];
    LoccParams p = random_locc_params(rng);
    for (size_t i = 0; i < 2; ++i) {
      PauliPolynomial u = locc_unitary(p, kOutcomes[i], lat.bob_qubit(), n);
      PauliPolynomial nsig = axis_operator(p.axis, lat.bob_qubit(), n);
      compare(g, ms[i] * poly_adjoint(u) * h * u * ms[i]);
      compare(g, ms[i] * h * ms[i]);
      compare(g, ms[i] * poly_commutator(h, nsig) * ms[i]);
      compare(g, ms[i] * nsig * poly_commutator(h, nsig) * ms[i]);
      compare(g, u);
      compare(g, ms[i]);
    }
  }
  // Random low-weight strings and short polynomials over every sector.
  while (comparisons < 100000) {
    const ToricGround &g = grounds[comparisons % kNumSectors];
    if (comparisons % 10 == 0) {
      compare(g, testing::random_polynomial(n, 4, rng));
    } else {
      compare(g, PauliPolynomial(testing::random_string_of_weight(n, 4, rng)));
    }
  }
  // Products of stabilizer terms with Wilson loops, which have nonzero values.
  std::vector<PauliString> terms = lat.stabilizer_terms();
  for (int draw = 0; draw < 2000; ++draw) {
    PauliString prod(n);
    for (const PauliString &t : terms) {
      if (rng() % 2) prod *= t;
    }
    if (rng() % 2) prod *= lat.wilson_z(rng() % 2);
    compare(grounds[draw % kNumSectors], PauliPolynomial(prod));
  }
  v.require(comparisons >= 100000, "too few comparisons");
  v.require(worst <= 1e-10, "backends disagree");
  v.detail = fmt("%.0f comparisons over 4 sectors, max |stabilizer - statevector| = %.3g",
                 static_cast<double>(comparisons), worst) +
             (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict positive_control() {
  Verdict v;
  ChainModel model(ChainConfig{});
  OptimizationResult r = optimize_control(model, Pauli::kX, GridSpec{});
  EnergyReport replay = qet_run(model, Pauli::kX, r.argmin);
  v.require(r.min_delta < -1e-3, "no QET detected");
  v.require(std::abs(r.min_delta - kGoldenControlDelta) <= 1e-9, "witness drifted from golden value");
  v.require(std::abs(replay.delta - r.min_delta) <= 1e-12, "replay disagrees with optimizer");
  v.detail = fmt("N=2 J=1 h=1: min dE = %.17g (golden %.17g, |diff| %.2g)", r.min_delta, kGoldenControlDelta,
                 std::abs(r.min_delta - kGoldenControlDelta)) +
             (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict robustness() {
  Verdict v;
  std::mt19937_64 rng(909);
  double worst = 0.0;
  size_t evaluations = 0;
  for (int draw = 0; draw < 5; ++draw) {
    LoccParams p = random_locc_params(rng);
    double reference = delta(ToricGround{ToricLattice(2)}, p, Backend::kStabilizer);
    auto record = [&](double value) {
      worst = std::max(worst, std::abs(value - reference));
      ++evaluations;
    };
    for (int sector = 0; sector < kNumSectors; ++sector) {
      ToricGround g(ToricLattice(2), sector, true);
      for (Backend b : kBoth) record(delta(g, p, b));
    }
    for (size_t L : {2, 3}) {
      for (size_t r1 = 0; r1 < 2 * L * L; ++r1) record(delta(ToricGround{ToricLattice(L, r1)}, p, Backend::kStabilizer));
    }
    for (size_t L : {4, 6}) {
      record(delta(ToricGround{ToricLattice(L)}, p, Backend::kStabilizer));
      record(delta(ToricGround{ToricLattice(L, 2 * L * L - 1)}, p, Backend::kStabilizer));
      for (int sector = 1; sector < kNumSectors; ++sector) {
        record(delta(ToricGround(ToricLattice(L), sector), p, Backend::kStabilizer));
      }
    }
  }
  v.require(worst <= 1e-10, "delta varies");
  v.detail = fmt("%.0f evaluations (sectors, every r1 at L=2,3, L in {2,3,4,6}), max spread %.3g",
                 static_cast<double>(evaluations), worst) +
             (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

}  // namespace
}  // namespace qet

int main() {
  using namespace qet;
  struct Criterion {
    const char *name;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> criteria{
      {"AC1 no-go reproduction", nogo_reproduction},
      {"AC2 nonnegativity", nonnegativity},
      {"AC3 lemma suite", lemma_suite},
      {"AC4 derivation chain", derivation_chain},
      {"AC5 ground-state facts", ground_facts},
      {"AC6 excitation profile", excitation_profile_check},
      {"AC7 backend equivalence", backend_equivalence},
      {"AC8 positive control", positive_control},
      {"AC9 robustness", robustness},
  };
  const double limits[] = {30.0, 180.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limits[i] > 0.0 && seconds >= limits[i]) v.require(false, "exceeded time budget");
    std::printf("%s %s  %s [%.2fs]\n", v.pass ? "PASS" : "FAIL", criteria[i].name, v.detail.c_str(), seconds);
    failures += v.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
