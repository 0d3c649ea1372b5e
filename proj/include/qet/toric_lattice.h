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

#ifndef QET_TORIC_LATTICE_H_
#define QET_TORIC_LATTICE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qet/bitvec.h"
#include "qet/pauli_polynomial.h"
#include "qet/pauli_string.h"
#include "qet/stabilizer_group.h"

namespace qet {

enum class EdgeDir : int { kEast = 0, kSouth = 1 };

struct Vertex {
  size_t row;
  size_t col;
  friend bool operator==(const Vertex &, const Vertex &) = default;
};

struct EdgeLocation {
  Vertex vertex;
  EdgeDir dir;
};

/// Number of ground-state sectors on the torus.
inline constexpr int kNumSectors = 4;

/// L x L periodic square lattice with one qubit per edge.
///
/// Edge (row, col, dir) has qubit index 2 * (row * L + col) + dir, where
/// dir 0 is the edge leaving the vertex eastward and dir 1 southward.
/// Star v = (r, c) holds edges east(r,c), south(r,c), east(r,c-1),
/// south(r-1,c). Plaquette p = (r, c) has (r, c) as its top-left corner and
/// holds edges east(r,c), south(r,c), east(r+1,c), south(r,c+1). Stars and
/// plaquettes are both indexed r * L + c.
///
/// The two Z-type Wilson loops are Z on east(0, c) for all c, and Z on
/// south(r, 0) for all r. Their conjugate X-type loops (used to move
/// between sectors) are X on east(r, 0) for all r, and X on south(0, c)
/// for all c.
class ToricLattice {
 public:
  /// Throws std::invalid_argument for L < 2 or an out-of-range Bob qubit.
  explicit ToricLattice(size_t L, std::optional<size_t> bob_qubit = std::nullopt);

  size_t L() const { return size_; }
  size_t num_qubits() const { return 2 * size_ * size_; }
  size_t num_vertices() const { return size_ * size_; }

  /// Coordinates are reduced mod L, so negative offsets are fine.
  size_t edge(long row, long col, EdgeDir dir) const;
  EdgeLocation edge_location(size_t qubit) const;

  const std::vector<std::array<size_t, 4>> &stars() const { return stars_; }
  const std::vector<std::array<size_t, 4>> &plaquettes() const { return plaquettes_; }
  const std::array<std::vector<size_t>, 2> &wilson_z_loops() const { return wilson_z_; }
  const std::array<std::vector<size_t>, 2> &wilson_x_loops() const { return wilson_x_; }

  size_t bob_qubit() const { return bob_; }
  /// The two stars (A1, A2) and two plaquettes (B1, B2) holding Bob's qubit.
  const std::array<size_t, 2> &bob_stars() const { return bob_stars_; }
  const std::array<size_t, 2> &bob_plaquettes() const { return bob_plaquettes_; }
  /// Every edge except Bob's, ascending.
  std::vector<size_t> region_a() const;

  PauliString star_operator(size_t v) const;
  PauliString plaquette_operator(size_t p) const;
  PauliString wilson_z(size_t which) const;
  PauliString wilson_x(size_t which) const;

  /// Star terms (all vertices) followed by plaquette terms.
  std::vector<PauliString> stabilizer_terms() const;
  std::vector<std::string> stabilizer_labels() const;

  /// H = -sum_v A_v - sum_p B_p.
  PauliPolynomial hamiltonian() const;
  double ground_energy() const { return -2.0 * static_cast<double>(num_vertices()); }

  /// Ground state of one of the four sectors. Generators are all stars but
  /// the last, all plaquettes but the last, and the two Z loops; bit i of
  /// `sector` set means Z loop i carries eigenvalue -1.
  StabilizerGroup ground_group(int sector = 0) const;

 private:
  size_t size_;
  size_t bob_;
  std::vector<std::array<size_t, 4>> stars_;
  std::vector<std::array<size_t, 4>> plaquettes_;
  std::array<std::vector<size_t>, 2> wilson_z_;
  std::array<std::vector<size_t>, 2> wilson_x_;
  std::array<size_t, 2> bob_stars_{};
  std::array<size_t, 2> bob_plaquettes_{};
};

enum class MeasurementBasis { kX, kZ };

const char *basis_name(MeasurementBasis basis);

/// Alice's joint measurement: the projectors (I +- S) / 2 for the string S
/// of `basis` Paulis over `support`.
struct MeasurementScheme {
  BitVec support;
  MeasurementBasis basis = MeasurementBasis::kX;

  PauliString string() const;
  std::string describe() const;
};

/// X string over every edge of region A.
MeasurementScheme full_region_scheme(const ToricLattice &lattice);

/// Builds a scheme from a multiset of measured edges. Each edge appearing an
/// even number of times drops out (sigma^2 = I). Throws if any edge is Bob's
/// or out of range, or the reduced support is empty.
MeasurementScheme scheme_from_edges(const ToricLattice &lattice, std::span<const size_t> edges,
                                    MeasurementBasis basis = MeasurementBasis::kX);

}  // namespace qet

#endif  // QET_TORIC_LATTICE_H_
