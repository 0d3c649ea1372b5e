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

#include "qet/toric_lattice.h"

#include <algorithm>
#include <stdexcept>

namespace qet {

ToricLattice::ToricLattice(size_t L, std::optional<size_t> bob_qubit) : size_(L) {
  if (L < 2) throw std::invalid_argument("lattice size L must be >= 2, got " + std::to_string(L));
  long n = static_cast<long>(L);
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      stars_.push_back({edge(r, c, EdgeDir::kEast), edge(r, c, EdgeDir::kSouth),
                        edge(r, c - 1, EdgeDir::kEast), edge(r - 1, c, EdgeDir::kSouth)});
      plaquettes_.push_back({edge(r, c, EdgeDir::kEast), edge(r, c, EdgeDir::kSouth),
                             edge(r + 1, c, EdgeDir::kEast), edge(r, c + 1, EdgeDir::kSouth)});
    }
  }
  for (long i = 0; i < n; ++i) {
    wilson_z_[0].push_back(edge(0, i, EdgeDir::kEast));
    wilson_z_[1].push_back(edge(i, 0, EdgeDir::kSouth));
    wilson_x_[0].push_back(edge(i, 0, EdgeDir::kEast));
    wilson_x_[1].push_back(edge(0, i, EdgeDir::kSouth));
  }

  bob_ = bob_qubit.value_or(edge(0, 0, EdgeDir::kEast));
  if (bob_ >= num_qubits()) {
    throw std::invalid_argument("Bob qubit " + std::to_string(bob_) + " out of range for L=" +
                                std::to_string(L));
  }
  auto holders = [this](const std::vector<std::array<size_t, 4>> &ops) {
    std::array<size_t, 2> out{};
    size_t found = 0;
    for (size_t i = 0; i < ops.size(); ++i) {
      if (std::find(ops[i].begin(), ops[i].end(), bob_) != ops[i].end()) out[found++] = i;
    }
    return out;
  };
  bob_stars_ = holders(stars_);
  bob_plaquettes_ = holders(plaquettes_);
}

size_t ToricLattice::edge(long row, long col, EdgeDir dir) const {
  long n = static_cast<long>(size_);
  long r = ((row % n) + n) % n;
  long c = ((col % n) + n) % n;
  return 2 * static_cast<size_t>(r * n + c) + static_cast<size_t>(dir);
}

EdgeLocation ToricLattice::edge_location(size_t qubit) const {
  if (qubit >= num_qubits()) throw std::out_of_range("edge index out of range");
  size_t v = qubit / 2;
  return {{v / size_, v % size_}, qubit % 2 == 0 ? EdgeDir::kEast : EdgeDir::kSouth};
}

std::vector<size_t> ToricLattice::region_a() const {
  std::vector<size_t> out;
  for (size_t q = 0; q < num_qubits(); ++q) {
    if (q != bob_) out.push_back(q);
  }
  return out;
}

PauliString ToricLattice::star_operator(size_t v) const {
  return PauliString::product(num_qubits(), stars_.at(v), Pauli::kX);
}

PauliString ToricLattice::plaquette_operator(size_t p) const {
  return PauliString::product(num_qubits(), plaquettes_.at(p), Pauli::kZ);
}

PauliString ToricLattice::wilson_z(size_t which) const {
  return PauliString::product(num_qubits(), wilson_z_.at(which), Pauli::kZ);
}

PauliString ToricLattice::wilson_x(size_t which) const {
  return PauliString::product(num_qubits(), wilson_x_.at(which), Pauli::kX);
}

std::vector<PauliString> ToricLattice::stabilizer_terms() const {
  std::vector<PauliString> out;
  for (size_t v = 0; v < stars_.size(); ++v) out.push_back(star_operator(v));
  for (size_t p = 0; p < plaquettes_.size(); ++p) out.push_back(plaquette_operator(p));
  return out;
}

std::vector<std::string> ToricLattice::stabilizer_labels() const {
  std::vector<std::string> out;
  for (size_t v = 0; v < stars_.size(); ++v) out.push_back("A" + std::to_string(v));
  for (size_t p = 0; p < plaquettes_.size(); ++p) out.push_back("B" + std::to_string(p));
  return out;
}

PauliPolynomial ToricLattice::hamiltonian() const {
  PauliPolynomial h(num_qubits());
  for (const PauliString &term : stabilizer_terms()) h.add_term(term, -1.0);
  return h;
}

StabilizerGroup ToricLattice::ground_group(int sector) const {
  if (sector < 0 || sector >= kNumSectors) {
    throw std::invalid_argument("sector must be in [0, 4), got " + std::to_string(sector));
  }
  std::vector<PauliString> gens;
  for (size_t v = 0; v + 1 < stars_.size(); ++v) gens.push_back(star_operator(v));
  for (size_t p = 0; p + 1 < plaquettes_.size(); ++p) gens.push_back(plaquette_operator(p));
  for (size_t i = 0; i < 2; ++i) {
    bool flipped = (sector >> i) & 1;
    gens.push_back(wilson_z(i).scaled(flipped ? 2 : 0));
  }
  return StabilizerGroup(std::move(gens));
}

const char *basis_name(MeasurementBasis basis) {
  return basis == MeasurementBasis::kX ? "x" : "z";
}

PauliString MeasurementScheme::string() const {
  std::vector<size_t> qubits = support.ones();
  return PauliString::product(support.size(), qubits,
                              basis == MeasurementBasis::kX ? Pauli::kX : Pauli::kZ);
}

std::string MeasurementScheme::describe() const {
  std::string out = basis == MeasurementBasis::kX ? "X-string" : "Z-string";
  out += " on " + std::to_string(support.popcount()) + " edges";
  return out;
}

MeasurementScheme full_region_scheme(const ToricLattice &lattice) {
  std::vector<size_t> edges = lattice.region_a();
  return scheme_from_edges(lattice, edges, MeasurementBasis::kX);
}

MeasurementScheme scheme_from_edges(const ToricLattice &lattice, std::span<const size_t> edges,
                                    MeasurementBasis basis) {
  MeasurementScheme scheme{BitVec(lattice.num_qubits()), basis};
  for (size_t e : edges) {
    if (e >= lattice.num_qubits()) {
      throw std::invalid_argument("measured edge " + std::to_string(e) + " out of range");
    }
    if (e == lattice.bob_qubit()) {
      throw std::invalid_argument("measured edge " + std::to_string(e) + " is Bob's qubit");
    }
    scheme.support.flip(e);
  }
  if (!scheme.support.any()) throw std::invalid_argument("measurement support is empty");
  return scheme;
}

}  // namespace qet
