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

#include "qet/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>

#include "CLI11.hpp"
#include "qet/control_model.h"
#include "qet/optimizer.h"
#include "qet/qet_protocol.h"
#include "qet/report_io.h"
#include "qet/state_vector.h"
#include "qet/toric_lattice.h"

namespace qet::cli {

namespace {

// No-go threshold for grid minima, and the noise floor below which the
// control counts as having extracted energy.
constexpr double kNoGoTolerance = 1e-10;
constexpr double kDetectionThreshold = -1e-9;

std::vector<Backend> parse_backends(const std::string &name) {
  if (name == "stabilizer") return {Backend::kStabilizer};
  if (name == "statevector") return {Backend::kStatevector};
  if (name == "both") return {Backend::kStabilizer, Backend::kStatevector};
  throw UsageError("unknown backend '" + name + "' (expected stabilizer, statevector or both)");
}

MeasurementBasis parse_basis(const std::string &name) {
  if (name == "x" || name == "X") return MeasurementBasis::kX;
  if (name == "z" || name == "Z") return MeasurementBasis::kZ;
  throw UsageError("unknown measurement basis '" + name + "' (expected x or z)");
}

Pauli parse_pauli(const std::string &name) {
  if (name == "x" || name == "X") return Pauli::kX;
  if (name == "y" || name == "Y") return Pauli::kY;
  if (name == "z" || name == "Z") return Pauli::kZ;
  throw UsageError("unknown Pauli basis '" + name + "' (expected x, y or z)");
}

bool uses_statevector(const RunConfig &c) { return c.backend == "statevector" || c.backend == "both"; }

MeasurementScheme make_scheme(const RunConfig &c, const ToricLattice &lat) {
  MeasurementBasis basis = parse_basis(c.basis);
  if (c.edges.empty()) {
    std::vector<size_t> region = lat.region_a();
    return scheme_from_edges(lat, region, basis);
  }
  try {
    return scheme_from_edges(lat, c.edges, basis);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

GridSpec make_grid(const RunConfig &c) {
  GridSpec spec;
  spec.theta_steps = c.theta_steps;
  spec.axis_count = c.axes;
  spec.refine = c.refine;
  return spec;
}

std::ofstream open_output(const std::string &path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file '" + path + "' for writing");
  return f;
}

void write_json_file(const std::string &path, const nlohmann::json &j) {
  std::ofstream f = open_output(path);
  f << j.dump(2) << '\n';
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

std::string pass_word(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string axis_str(const std::array<double, 3> &a) {
  return "(" + fmt(a[0]) + ", " + fmt(a[1]) + ", " + fmt(a[2]) + ")";
}

CheckResult check_ground(const ToricGround &ground, std::span<const Backend> backends) {
  const ToricLattice &lat = ground.lattice();
  CheckResult out{"GROUND", true, 0.0, ""};
  std::vector<PauliString> terms = lat.stabilizer_terms();
  for (Backend b : backends) {
    for (const PauliString &t : terms) {
      double err = std::abs(ground.expectation(PauliPolynomial(t), b) - Complex{1.0, 0.0});
      out.max_error = std::max(out.max_error, err);
    }
    double err = std::abs(ground.expectation(ground.hamiltonian(), b).real() - lat.ground_energy());
    out.max_error = std::max(out.max_error, err);
  }
  out.pass = out.max_error <= 1e-10;
  out.detail = std::to_string(terms.size()) + " stabilizers at +1, <H> = " + fmt(lat.ground_energy());
  if (ground.has_statevector() && lat.num_qubits() <= 16) {
    size_t dim = ground_space_dimension(lat);
    out.pass = out.pass && dim == 4;
    out.detail += ", ground-space dimension " + std::to_string(dim);
  }
  return out;
}

CheckResult check_excitations(const ToricGround &ground, const MeasurementScheme &scheme,
                              std::span<const Backend> backends) {
  const ToricLattice &lat = ground.lattice();
  std::vector<PauliString> terms = lat.stabilizer_terms();
  std::vector<std::string> labels = lat.stabilizer_labels();
  PauliString s = scheme.string();
  CheckResult out{"EXCITATIONS", true, 0.0, ""};
  std::string flipped;
  size_t count = 0;
  for (size_t t = 0; t < terms.size(); ++t) {
    if (!commutes(terms[t], s)) {
      flipped += (count++ ? "," : "") + labels[t];
    }
  }
  for (Backend b : backends) {
    std::vector<StabilizerValue> profile = excitation_profile(ground, scheme, b);
    for (size_t t = 0; t < terms.size(); ++t) {
      double expected = commutes(terms[t], s) ? 1.0 : 0.0;
      out.max_error = std::max(out.max_error, std::abs(profile[t].value - expected));
    }
    Injection inj = energy_injected(ground, scheme, b);
    out.max_error = std::max(out.max_error, std::abs(inj.energy - static_cast<double>(count)));
  }
  out.pass = out.max_error <= 1e-10;
  out.detail = std::to_string(count) + " excited stabilizers {" + flipped + "}, E_A = " + std::to_string(count);
  return out;
}

}  // namespace

RunConfig config_from_json(const nlohmann::json &j) {
  RunConfig c;
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto &[key, value] : j.items()) {
    try {
      if (key == "command") c.command = value.get<std::string>();
      else if (key == "L") c.L = value.get<size_t>();
      else if (key == "sector") c.sector = value.get<int>();
      else if (key == "r1") c.r1 = value.get<size_t>();
      else if (key == "edges") c.edges = value.get<std::vector<size_t>>();
      else if (key == "basis") c.basis = value.get<std::string>();
      else if (key == "backend") c.backend = value.get<std::string>();
      else if (key == "theta_steps") c.theta_steps = value.get<size_t>();
      else if (key == "axes") c.axes = value.get<size_t>();
      else if (key == "refine") c.refine = value.get<bool>();
      else if (key == "per_outcome") c.per_outcome = value.get<bool>();
      else if (key == "csv") c.csv_path = value.get<std::string>();
      else if (key == "json") c.json_path = value.get<std::string>();
      else if (key == "out") c.out_path = value.get<std::string>();
      else if (key == "seed") c.seed = value.get<uint64_t>();
      else if (key == "draws") c.draws = value.get<size_t>();
      else if (key == "N") c.chain_sites = value.get<size_t>();
      else if (key == "J") c.coupling = value.get<double>();
      else if (key == "h") c.field = value.get<double>();
      else if (key == "site_a") c.site_a = value.get<size_t>();
      else if (key == "site_b") c.site_b = value.get<size_t>();
      else throw UsageError("unknown config key '" + key + "'");
    } catch (const nlohmann::json::exception &e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
  return c;
}

RunConfig load_config(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config file '" + path + "'");
  try {
    return config_from_json(nlohmann::json::parse(f));
  } catch (const nlohmann::json::parse_error &e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
}

void validate(const RunConfig &c) {
  if (c.command == "control") {
    if (c.chain_sites < kMinChainSites || c.chain_sites > kMaxChainSites) {
      throw UsageError("chain length N must be in [2, 6], got " + std::to_string(c.chain_sites));
    }
    if (c.site_a >= c.chain_sites || c.site_b >= c.chain_sites || c.site_a == c.site_b) {
      throw UsageError("control sites must be distinct and inside the chain");
    }
    parse_pauli(c.basis);
  } else {
    if (c.L < 2) throw UsageError("L must be >= 2");
    if (c.sector < 0 || c.sector >= kNumSectors) throw UsageError("sector must be 0..3");
    if (c.r1 && *c.r1 >= 2 * c.L * c.L) throw UsageError("r1 is not an edge of the lattice");
    parse_basis(c.basis);
    parse_backends(c.backend);
    for (size_t e : c.edges) {
      size_t bob = c.r1.value_or(0);
      if (e >= 2 * c.L * c.L) throw UsageError("edge " + std::to_string(e) + " is not in the lattice");
      if (e == bob) throw UsageError("edge " + std::to_string(e) + " is Bob's qubit, not in region A");
    }
    if (uses_statevector(c) && 2 * c.L * c.L > StateVector::kMaxQubits) {
      throw CapacityError("statevector backend needs 2L^2 <= " + std::to_string(StateVector::kMaxQubits) +
                          ", L=" + std::to_string(c.L) + " has " + std::to_string(2 * c.L * c.L) + " qubits");
    }
  }
  if (c.command == "nogo-scan" || c.command == "control") {
    if (c.axes == 0) throw UsageError("axes must be positive");
  }
}

int cmd_verify(const RunConfig &c, std::ostream &out) {
  validate(c);
  ToricLattice lat(c.L, c.r1);
  std::vector<Backend> backends = parse_backends(c.backend);
  ToricGround ground(lat, c.sector, uses_statevector(c));
  MeasurementScheme scheme = make_scheme(c, lat);

  CheckReport checks;
  checks.push_back(check_ground(ground, backends));
  checks.push_back(check_excitations(ground, scheme, backends));
  checks.push_back(verify_lemma1(ground, scheme, backends));
  checks.push_back(verify_lemma2(ground, backends));
  checks.push_back(verify_lemma3(ground, scheme, backends));

  // Derivation chain over random parameter draws, aggregated per step.
  std::mt19937_64 rng(c.seed);
  std::vector<std::string> order;
  std::map<std::string, CheckResult> chain;
  CheckResult agreement{"BACKENDS", true, 0.0, ""};
  for (size_t d = 0; d < c.draws; ++d) {
    LoccParams params = random_locc_params(rng);
    for (const CheckResult &r : verify_derivation_chain(ground, scheme, params, backends)) {
      auto [it, inserted] = chain.try_emplace(r.name, CheckResult{"CHAIN " + r.name, true, 0.0, r.detail});
      if (inserted) order.push_back(r.name);
      it->second.pass = it->second.pass && r.pass;
      it->second.skipped = r.skipped;
      it->second.max_error = std::max(it->second.max_error, r.max_error);
    }
    if (backends.size() == 2) {
      LoccStrategy s = LoccStrategy::uniform(params);
      double a = energy_after_locc(ground, scheme, s, Backend::kStabilizer).delta;
      double b = energy_after_locc(ground, scheme, s, Backend::kStatevector).delta;
      agreement.max_error = std::max(agreement.max_error, std::abs(a - b));
    }
  }
  for (const std::string &name : order) {
    CheckResult r = chain.at(name);
    if (!r.skipped) r.detail += ", " + std::to_string(c.draws) + " draws, max error " + fmt(r.max_error);
    checks.push_back(r);
  }
  if (backends.size() == 2) {
    agreement.pass = agreement.max_error <= 1e-10;
    agreement.detail = "stabilizer vs statevector delta over " + std::to_string(c.draws) + " draws, max diff " +
                       fmt(agreement.max_error);
    checks.push_back(agreement);
  }

  out << "verify L=" << c.L << " sector=" << c.sector << " r1=" << lat.bob_qubit() << " scheme=\""
      << scheme.describe() << "\" backend=" << c.backend << '\n';
  size_t failed = 0;
  for (const CheckResult &r : checks) {
    out << r.name << ' ' << (r.skipped ? "SKIP" : pass_word(r.pass)) << "  " << r.detail << '\n';
    if (!r.pass) ++failed;
  }
  out << (failed == 0 ? "VERDICT: all checks passed" : "VERDICT: " + std::to_string(failed) + " check(s) failed")
      << '\n';

  if (!c.json_path.empty()) {
    nlohmann::json j = nlohmann::json::array();
    for (const CheckResult &r : checks) j.push_back(to_json(r));
    write_json_file(c.json_path, {{"L", c.L}, {"backend", c.backend}, {"checks", j}, {"pass", failed == 0}});
  }
  return failed == 0 ? kExitOk : kExitClaimRefuted;
}

int cmd_nogo_scan(const RunConfig &c, std::ostream &out) {
  validate(c);
  ToricLattice lat(c.L, c.r1);
  std::vector<Backend> backends = parse_backends(c.backend);
  ToricGround ground(lat, c.sector, uses_statevector(c));
  MeasurementScheme scheme = make_scheme(c, lat);
  GridSpec spec = make_grid(c);

  std::vector<SweepRow> table;
  nlohmann::json summaries = nlohmann::json::array();
  bool refuted = false;
  std::vector<OptimizationResult> results;
  for (Backend b : backends) {
    OptimizationResult r = optimize_locc(ground, scheme, spec, b, c.per_outcome);
    nlohmann::json s = to_json(r);
    s["backend"] = backend_name(b);
    summaries.push_back(s);
    const LoccParams &best = r.argmin.per_outcome[0];
    out << "NOGO L=" << c.L << " backend=" << backend_name(b) << " points=" << r.table.size()
        << ": min ΔE = " << format_double(r.min_delta) << " at theta=" << fmt(best.theta)
        << " axis=" << axis_str(best.axis);
    if (r.per_outcome) {
      const LoccParams &minus = r.argmin.per_outcome[1];
      out << " / theta-=" << fmt(minus.theta) << " axis-=" << axis_str(minus.axis);
    }
    out << ", grid argmin includes theta=0: " << (s["grid_argmin_includes_theta_zero"].get<bool>() ? "yes" : "no")
        << ", max |ΔE - closed_form| = "
        << (s["max_closed_form_deviation"].is_null() ? std::string("n/a")
                                                      : fmt(s["max_closed_form_deviation"].get<double>()))
        << '\n';
    refuted = refuted || r.min_delta < -kNoGoTolerance || r.grid_min_delta < -kNoGoTolerance;
    table.insert(table.end(), r.table.begin(), r.table.end());
    results.push_back(std::move(r));
  }
  if (results.size() == 2) {
    double diff = 0.0;
    for (size_t i = 0; i < results[0].table.size(); ++i) {
      diff = std::max(diff, std::abs(results[0].table[i].delta - results[1].table[i].delta));
    }
    out << "BACKENDS max |ΔE_stabilizer - ΔE_statevector| = " << fmt(diff) << '\n';
  }
  out << (refuted ? "VERDICT: CLAIM REFUTED (ΔE < 0 found)" : "VERDICT: CLAIM CONFIRMED (ΔE >= 0 everywhere)")
      << '\n';

  if (!c.csv_path.empty()) {
    std::ofstream f = open_output(c.csv_path);
    write_sweep_csv(f, table);
    if (!f) throw std::runtime_error("failed writing '" + c.csv_path + "'");
  }
  if (!c.json_path.empty()) {
    write_json_file(c.json_path, {{"L", c.L},
                                  {"scheme", scheme.describe()},
                                  {"results", summaries},
                                  {"claim_refuted", refuted}});
  }
  return refuted ? kExitClaimRefuted : kExitOk;
}

int cmd_control(const RunConfig &c, std::ostream &out) {
  validate(c);
  ChainModel model(ChainConfig{c.chain_sites, c.coupling, c.field, c.site_a, c.site_b, 0.0});
  Pauli basis = parse_pauli(c.basis);
  OptimizationResult r = optimize_control(model, basis, make_grid(c), true);
  EnergyReport best = qet_run(model, basis, r.argmin);

  bool detected = r.min_delta < kDetectionThreshold;
  if (detected) {
    out << "CONTROL: QET DETECTED, min ΔE = " << format_double(r.min_delta) << '\n';
  } else {
    out << "CONTROL: NO QET, min ΔE = " << format_double(r.min_delta) << '\n';
  }
  out << "  chain N=" << c.chain_sites << " J=" << fmt(c.coupling) << " h=" << fmt(c.field)
      << " E0=" << format_double(model.ground_energy()) << " E_A=" << format_double(best.energy_injected)
      << " E_B=" << format_double(best.energy_after) << '\n';

  if (!c.csv_path.empty()) {
    std::ofstream f = open_output(c.csv_path);
    write_sweep_csv(f, r.table);
    if (!f) throw std::runtime_error("failed writing '" + c.csv_path + "'");
  }
  if (!c.json_path.empty()) {
    write_json_file(c.json_path, {{"summary", to_json(r)}, {"report", to_json(best)}, {"detected", detected}});
  }
  return detected ? kExitOk : kExitClaimRefuted;
}

int cmd_describe(const RunConfig &c, std::ostream &out) {
  validate(c);
  nlohmann::json j = describe_lattice(ToricLattice(c.L, c.r1));
  if (c.out_path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(c.out_path, j);
  }
  return kExitOk;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  RunConfig c;
  // The config file supplies defaults that explicit flags then override.
  for (size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--config") {
      try {
        c = load_config(args[i + 1]);
      } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
      }
    }
  }

  CLI::App app{"Energy-teleportation checks on the toric code"};
  app.set_version_flag("--version", "qet 1.0");
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with RunConfig defaults");
  app.require_subcommand(0, 1);
  app.fallthrough();

  auto add_lattice = [&c](CLI::App *sub) {
    sub->add_option("--L", c.L, "lattice size");
    sub->add_option("--sector", c.sector, "ground sector 0..3 (bit i flips Z loop i)");
    sub->add_option("--r1", c.r1, "Bob's edge index (default: east edge of vertex (0,0))");
    sub->add_option("--edges", c.edges, "explicit measured edges (default: all of region A)")->delimiter(',');
    sub->add_option("--basis", c.basis, "measurement string basis: x or z");
    sub->add_option("--backend", c.backend, "stabilizer, statevector or both");
    sub->add_option("--json", c.json_path, "write a JSON report");
  };
  auto add_grid = [&c](CLI::App *sub) {
    sub->add_option("--theta-steps", c.theta_steps, "theta intervals over [0, 2 pi]");
    sub->add_option("--axes", c.axes, "Fibonacci-sphere axis count");
    sub->add_flag("!--no-refine", c.refine, "skip coordinate-descent refinement");
    sub->add_option("--csv", c.csv_path, "write the sweep table as CSV");
  };

  CLI::App *verify = app.add_subcommand("verify", "run the lemma, derivation and ground-state checks");
  add_lattice(verify);
  verify->add_option("--seed", c.seed, "seed for random parameter draws");
  verify->add_option("--draws", c.draws, "random (theta, axis) draws for the derivation chain");

  CLI::App *scan = app.add_subcommand("nogo-scan", "sweep Bob's unitary over a grid and minimize delta E");
  add_lattice(scan);
  add_grid(scan);
  scan->add_flag("--per-outcome", c.per_outcome, "independent (theta, axis) per measurement outcome");

  CLI::App *control = app.add_subcommand("control", "positive control on a transverse-field Ising chain");
  control->set_help_flag("--help", "print this help message and exit");
  control->add_option("--N", c.chain_sites, "chain length (2..6)");
  control->add_option("--J", c.coupling, "ZZ coupling");
  control->add_option("--h", c.field, "transverse field");
  control->add_option("--site-a", c.site_a, "measured site");
  control->add_option("--site-b", c.site_b, "LOCC site");
  control->add_option("--basis", c.basis, "measured Pauli on site A: x, y or z");
  control->add_option("--json", c.json_path, "write a JSON report");
  add_grid(control);

  CLI::App *describe = app.add_subcommand("describe", "print the lattice geometry as JSON");
  describe->add_option("--L", c.L, "lattice size");
  describe->add_option("--r1", c.r1, "Bob's edge index");
  describe->add_option("--out", c.out_path, "write to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion &) {
    out << "qet 1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (CLI::App *sub : app.get_subcommands()) c.command = sub->get_name();
  if (c.command.empty()) {
    err << "error: no command given\n" << app.help();
    return kExitUsage;
  }

  try {
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "nogo-scan") return cmd_nogo_scan(c, out);
    if (c.command == "control") return cmd_control(c, out);
    if (c.command == "describe") return cmd_describe(c, out);
    throw UsageError("unknown command '" + c.command + "'");
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError &e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qet::cli
