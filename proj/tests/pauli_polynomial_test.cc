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

#include "qet/pauli_polynomial.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qet/qet_protocol.h"
#include "qet/toric_lattice.h"
#include "test_util.h"

namespace qet {
namespace {

using testing::oracle_matrix;
using testing::random_polynomial;

PauliPolynomial projector(const PauliString &s, int k) {
  PauliPolynomial m = PauliPolynomial::identity(s.num_qubits(), 0.5);
  m.add_term(s, 0.5 * k);
  return m;
}

TEST(pauli_polynomial, completeness_of_projectors) {
  PauliString s = PauliString::from_str("XXX");
  PauliPolynomial sum = poly_add(projector(s, +1), projector(s, -1));
  EXPECT_TRUE(sum.approx_equal(PauliPolynomial::identity(3)));
  EXPECT_EQ(sum.num_terms(), 1u);
}

TEST(pauli_polynomial, additive_identity) {
  std::mt19937_64 rng(1);
  PauliPolynomial a = random_polynomial(4, 6, rng);
  EXPECT_TRUE(poly_add(a, PauliPolynomial(4)).approx_equal(a, 0.0));
}

TEST(pauli_polynomial, hamiltonian_is_hermitian) {
  PauliPolynomial h = ToricLattice(2).hamiltonian();
  EXPECT_TRUE(poly_add(h, poly_adjoint(h)).approx_equal(h * 2.0));
  EXPECT_TRUE(h.is_hermitian());
}

TEST(pauli_polynomial, cancelling_terms_are_pruned) {
  PauliPolynomial a(PauliString::from_str("XZ"), 1.0);
  a.add_term(PauliString::from_str("XZ"), -1.0 + 1e-14);
  EXPECT_TRUE(a.is_zero());
}

TEST(pauli_polynomial, phase_is_folded_into_coefficient) {
  PauliPolynomial a(PauliString::from_str("-iY"), 2.0);
  EXPECT_NEAR(std::abs(a.coefficient(PauliString::from_str("Y")) - Complex(0, -2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(a.coefficient(PauliString::from_str("-Y")) - Complex(0, 2)), 0.0, 1e-15);
}

TEST(pauli_polynomial, projector_is_idempotent) {
  ToricLattice lat(2);
  auto ms = measurement_ops(full_region_scheme(lat), lat);
  for (const PauliPolynomial &m : ms) EXPECT_TRUE(poly_mul(m, m).approx_equal(m));
}

TEST(pauli_polynomial, identity_is_multiplicative_unit) {
  std::mt19937_64 rng(2);
  PauliPolynomial a = random_polynomial(3, 5, rng);
  EXPECT_TRUE(poly_mul(PauliPolynomial::identity(3), a).approx_equal(a, 0.0));
}

TEST(pauli_polynomial, opposite_projectors_are_orthogonal) {
  PauliString s = PauliString::from_str("XYZ");
  PauliPolynomial prod = poly_mul(projector(s, +1), projector(s, -1));
  EXPECT_TRUE(prod.is_zero());
  Eigen::MatrixXcd dense = oracle_matrix(projector(s, +1)) * oracle_matrix(projector(s, -1));
  EXPECT_LT(dense.norm(), 1e-15);
}

TEST(pauli_polynomial, hamiltonian_commutes_with_stars) {
  ToricLattice lat(2);
  PauliPolynomial h = lat.hamiltonian();
  for (size_t v = 0; v < lat.num_vertices(); ++v) {
    EXPECT_TRUE(poly_commutator(h, PauliPolynomial(lat.star_operator(v))).is_zero());
  }
  EXPECT_TRUE(poly_commutator(h, h).is_zero());
}

TEST(pauli_polynomial, commutator_with_bob_x) {
  ToricLattice lat(2);
  size_t n = lat.num_qubits();
  PauliPolynomial sx(PauliString::single(n, lat.bob_qubit(), Pauli::kX));
  PauliPolynomial b(n);
  for (size_t p : lat.bob_plaquettes()) b.add_term(lat.plaquette_operator(p));
  PauliPolynomial expected = b * sx * Complex(-2.0);
  EXPECT_TRUE(poly_commutator(lat.hamiltonian(), sx).approx_equal(expected));
}

TEST(pauli_polynomial, adjoint_examples) {
  ToricLattice lat(2);
  auto ms = measurement_ops(full_region_scheme(lat), lat);
  for (const PauliPolynomial &m : ms) EXPECT_TRUE(poly_adjoint(m).approx_equal(m, 0.0));
  EXPECT_TRUE(poly_adjoint(PauliPolynomial::identity(3)).approx_equal(PauliPolynomial::identity(3), 0.0));
}

TEST(pauli_polynomial, single_qubit_unitary_is_unitary) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    LoccParams params = random_locc_params(rng);
    int k = trial % 2 ? 1 : -1;
    PauliPolynomial u = locc_unitary(params, k, 0, 1);
    EXPECT_TRUE(poly_mul(poly_adjoint(u), u).approx_equal(PauliPolynomial::identity(1)));
    Eigen::MatrixXcd dense = oracle_matrix(u);
    EXPECT_TRUE((dense.adjoint() * dense).isApprox(Eigen::MatrixXcd::Identity(2, 2), 1e-13));
  }
}

TEST(pauli_polynomial, size_mismatch_rejected) {
  EXPECT_THROW(poly_add(PauliPolynomial(2), PauliPolynomial(3)), std::invalid_argument);
  EXPECT_THROW(poly_mul(PauliPolynomial(2), PauliPolynomial(3)), std::invalid_argument);
  EXPECT_THROW(poly_commutator(PauliPolynomial(2), PauliPolynomial(3)), std::invalid_argument);
}

TEST(pauli_polynomial, product_matches_dense) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    PauliPolynomial a = random_polynomial(3, 4, rng);
    PauliPolynomial b = random_polynomial(3, 4, rng);
    Eigen::MatrixXcd expected = oracle_matrix(a) * oracle_matrix(b);
    ASSERT_LT((oracle_matrix(poly_mul(a, b)) - expected).norm(), 1e-12);
    Eigen::MatrixXcd adj = oracle_matrix(a).adjoint();
    ASSERT_LT((oracle_matrix(poly_adjoint(a)) - adj).norm(), 1e-12);
  }
}

TEST(pauli_polynomial, ring_laws_on_random_polynomials) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    PauliPolynomial a = random_polynomial(4, 5, rng);
    PauliPolynomial b = random_polynomial(4, 5, rng);
    PauliPolynomial c = random_polynomial(4, 5, rng);
    ASSERT_TRUE(poly_mul(poly_mul(a, b), c).approx_equal(poly_mul(a, poly_mul(b, c)), 1e-12));
    ASSERT_TRUE(poly_mul(a, poly_add(b, c)).approx_equal(poly_add(poly_mul(a, b), poly_mul(a, c)), 1e-12));
    ASSERT_TRUE(poly_adjoint(poly_mul(a, b)).approx_equal(poly_mul(poly_adjoint(b), poly_adjoint(a)), 1e-12));
    ASSERT_TRUE(poly_adjoint(poly_adjoint(a)).approx_equal(a, 0.0));
  }
}

}  // namespace
}  // namespace qet
