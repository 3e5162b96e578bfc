// Copyright 2026 The stoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/SparseCore>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "stoq/pauli.hpp"

namespace stoq {

enum class OracleMode { kZMatrix, kRealness };

inline constexpr std::size_t kZMatrixSearchCap = 6;
inline constexpr std::size_t kRealnessSearchCap = 12;
inline constexpr std::size_t kDenseCap = 12;

/// Exhaustive search over per-qubit Clifford rotations (24 per qubit in
/// z-matrix mode, the 6 axis permutations in realness mode). Returns the
/// first witness in lexicographic order of the canonical Clifford list, qubit
/// 0 most significant, or nullopt. Realness witnesses carry signs
/// {1, 1, parity} so that every element has determinant +1. Throws
/// CapacityError when n exceeds `cap` (0 selects the mode default).
std::optional<std::vector<SignedPermutation>> brute_force_clifford(const Hamiltonian& h,
                                                                   OracleMode mode,
                                                                   std::size_t cap = 0);

/// Whole-Hamiltonian Z-matrix test on Pauli coefficients: no Y-odd terms,
/// a_XX <= -|a_YY| on every pair and a_X + sum_w |a_{X Z_w}| <= 0 per qubit.
bool is_z_matrix_coefficients(const Hamiltonian& h, double tol = kTolerance);

/// Rotates every coefficient by the per-qubit rotations.
Hamiltonian rotate_hamiltonian(const Hamiltonian& h, const std::vector<Rotation3>& rotations);

/// 2x2 unitary U with U (v . sigma) U^dagger = (R v) . sigma.
Eigen::Matrix2cd unitary_from_rotation(const Rotation3& r);

using SparseMatrixC = Eigen::SparseMatrix<std::complex<double>>;

/// Full 2^n x 2^n matrix of (prod U_q) H (prod U_q)^dagger, assembled term by
/// term from Kronecker products of 2x2 blocks. Qubit 0 is the most
/// significant bit of the row index. Throws CapacityError above kDenseCap.
SparseMatrixC assemble_matrix(const Hamiltonian& h, const std::vector<Rotation3>& rotations);

/// Definition check on the assembled matrix: every entry real, the matrix
/// symmetric and every off-diagonal entry <= 0, within 1e-12 (scaled by the
/// coefficient mass).
bool dense_z_check(const Hamiltonian& h, const std::vector<Rotation3>& rotations);
bool dense_z_check(const Hamiltonian& h, const std::vector<SignedPermutation>& assignment);

/// Signed permutation supported on the first nonzero monomial of det(O) in
/// the order aei < afh < bdi < bfg < cdh < ceg, entries replaced by signs.
SignedPermutation pi_reduction(const Rotation3& o, double tol = kTolerance);

/// Seeded random XYZ Hamiltonian: every pair u < v is kept with probability
/// `density`, weights drawn from coeff_set^3 minus the zero vector, and at
/// least one edge is always present.
Hamiltonian random_xyz(std::size_t n, double density, const std::vector<double>& coeff_set,
                       std::uint64_t seed);

}  // namespace stoq
