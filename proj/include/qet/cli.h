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

#ifndef QET_CLI_H_
#define QET_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace qet::cli {

inline constexpr int kExitOk = 0;
/// A no-go claim was violated, a verification failed, or (for `control`)
/// no extraction was found.
inline constexpr int kExitClaimRefuted = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  size_t L = 2;
  int sector = 0;
  std::optional<size_t> r1;
  /// Empty means the full-region scheme.
  std::vector<size_t> edges;
  std::string basis = "x";
  std::string backend = "stabilizer";
  size_t theta_steps = 128;
  size_t axes = 512;
  bool refine = true;
  bool per_outcome = false;
  std::string csv_path;
  std::string json_path;
  std::string out_path;
  uint64_t seed = 1;
  size_t draws = 100;
  // Control chain.
  size_t chain_sites = 2;
  double coupling = 1.0;
  double field = 1.0;
  size_t site_a = 0;
  size_t site_b = 1;
};

/// Keys mirror RunConfig field names; unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json &j);
RunConfig load_config(const std::string &path);

/// Throws UsageError for bad values and CapacityError for a statevector
/// backend on a lattice that is too big.
void validate(const RunConfig &config);

int cmd_verify(const RunConfig &config, std::ostream &out);
int cmd_nogo_scan(const RunConfig &config, std::ostream &out);
int cmd_control(const RunConfig &config, std::ostream &out);
int cmd_describe(const RunConfig &config, std::ostream &out);

/// Full front end: parses args (without the program name), dispatches, and
/// maps errors to exit codes.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qet::cli

#endif  // QET_CLI_H_
