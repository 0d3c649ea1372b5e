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

#ifndef QET_REPORT_IO_H_
#define QET_REPORT_IO_H_

#include <ostream>
#include <span>
#include <string>

#include "json.hpp"
#include "qet/optimizer.h"
#include "qet/qet_protocol.h"
#include "qet/toric_lattice.h"

namespace qet {

/// Fixed CSV column order for sweep tables.
inline constexpr const char *kSweepCsvHeader = "theta,nx,ny,nz,p_plus,E_A,E_B,delta,closed_form,backend";

/// %.17g, so values round-trip exactly.
std::string format_double(double value);

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows);

nlohmann::json to_json(const LoccParams &params);
nlohmann::json to_json(const EnergyReport &report);
nlohmann::json to_json(const CheckResult &check);
/// Summary only; the sweep table goes to CSV.
nlohmann::json to_json(const OptimizationResult &result);

/// L, edge map, star/plaquette incidence, Wilson loops, Bob's qubit with its
/// neighbouring stars and plaquettes, and region A.
nlohmann::json describe_lattice(const ToricLattice &lattice);

}  // namespace qet

#endif  // QET_REPORT_IO_H_
