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

#include <Eigen/Dense>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace stoq {

/// Absolute tolerance used for every zero test and rank decision. Inputs are
/// treated as exact; this only absorbs decimal parsing and rounding noise.
inline constexpr double kTolerance = 1e-9;

/// Pauli axis. The numeric value is the 0-based axis index (X=0, Y=1, Z=2),
/// so "slot 1/2/3" in the usual 1-based notation is index 0/1/2 here.
enum class Pauli : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Pauli, 3> kPaulis = {Pauli::X, Pauli::Y, Pauli::Z};

inline int axis(Pauli p) { return static_cast<int>(p); }
char to_char(Pauli p);
std::optional<Pauli> pauli_from_char(char c);

using Vertex = std::uint32_t;

struct OneLocalKey {
  Vertex v;
  Pauli p;
  auto operator<=>(const OneLocalKey&) const = default;
};

/// Key of a two-local coefficient; always normalized so that u < v.
struct TwoLocalKey {
  Vertex u;
  Vertex v;
  Pauli pu;
  Pauli pv;
  auto operator<=>(const TwoLocalKey&) const = default;
};

/// Sparse real Pauli expansion of a 2-local qubit Hamiltonian. The identity
/// coefficient is never stored. Adding a term with u > v stores it under the
/// transposed key, repeated keys are summed, and keys whose sum is
/// exactly zero are dropped.
class Hamiltonian {
 public:
  explicit Hamiltonian(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_; }

  Hamiltonian& add(Vertex v, Pauli p, double coeff);
  Hamiltonian& add(Vertex u, Pauli pu, Vertex v, Pauli pv, double coeff);

  double coefficient(Vertex v, Pauli p) const;
  double coefficient(Vertex u, Pauli pu, Vertex v, Pauli pv) const;

  const std::map<OneLocalKey, double>& one_local() const { return one_; }
  const std::map<TwoLocalKey, double>& two_local() const { return two_; }

  /// Pairs (u < v) carrying at least one stored two-local coefficient, in
  /// lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Hamiltonian&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_;
  std::map<OneLocalKey, double> one_;
  std::map<TwoLocalKey, double> two_;
};

/// Two-qubit view of a pair (u, v): the 3x3 coupling matrix (rows = Pauli on
/// u, columns = Pauli on v) and the 1-local vectors of u and v.
struct EdgeData {
  Eigen::Matrix3d beta = Eigen::Matrix3d::Zero();
  Eigen::Vector3d s_vec = Eigen::Vector3d::Zero();
  Eigen::Vector3d p_vec = Eigen::Vector3d::Zero();
};

/// A proper rotation (orthogonal, det +1) acting on Pauli axes.
class Rotation3 {
 public:
  Rotation3() : m_(Eigen::Matrix3d::Identity()) {}

  /// Throws PreconditionError unless m is orthogonal with det +1 (1e-12).
  static Rotation3 from_matrix(const Eigen::Matrix3d& m);
  /// Right-handed rotation by `angle` about Pauli axis `a`.
  static Rotation3 about_axis(Pauli a, double angle);

  const Eigen::Matrix3d& matrix() const { return m_; }
  Rotation3 operator*(const Rotation3& other) const;

 private:
  explicit Rotation3(const Eigen::Matrix3d& m) : m_(m) {}
  Eigen::Matrix3d m_;
};

/// Permutation of the three axes; perm[m] is the image of axis m.
using Permutation = std::array<std::uint8_t, 3>;

/// The six axis permutations in lexicographic order of their image tuples.
const std::array<Permutation, 6>& all_permutations();
int permutation_parity(const Permutation& p);  // +1 even, -1 odd
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);

/// Signed permutation R * Pi: axis m is sent to axis perm[m] and the result
/// is multiplied by signs[perm[m]].
struct SignedPermutation {
  Permutation perm = {0, 1, 2};
  std::array<int, 3> signs = {1, 1, 1};

  Eigen::Matrix3d matrix() const;
  int determinant() const;
  /// Only valid when determinant() == +1.
  Rotation3 rotation() const;

  bool operator==(const SignedPermutation&) const = default;
};

/// All 48 signed permutations: permutations in lexicographic order, then
/// sign patterns with +1 ordered before -1 (first axis most significant).
const std::vector<SignedPermutation>& all_signed_permutations();

/// The 24 determinant +1 signed permutations (the single-qubit Clifford
/// group acting on Pauli axes), in the same canonical order.
const std::vector<SignedPermutation>& clifford_rotations();

EdgeData extract_edge_data(const Hamiltonian& h, Vertex u, Vertex v);

/// (O1 beta O2^T, O1 S, O2 P).
EdgeData apply_rotations(const EdgeData& e, const Rotation3& o1,
                         const Rotation3& o2);

/// Pu beta Pv^T for a diagonal coupling matrix.
Eigen::Matrix3d apply_signed_permutations(const Eigen::Matrix3d& beta,
                                          const SignedPermutation& pu,
                                          const SignedPermutation& pv);

/// Numerical rank of a coupling matrix (singular values above kTolerance).
int coupling_rank(const Eigen::Matrix3d& beta);

/// True iff the 4x4 matrix of e is a symmetric Z-matrix: the six Y-odd
/// coefficients vanish, a_XX <= -|a_YY|, a_IX <= -|a_ZX| and
/// a_XI <= -|a_XZ|, all up to `tol`.
bool is_z_matrix_2q(const EdgeData& e, double tol = kTolerance);

/// True iff every stored coefficient with an odd number of Y factors is zero.
bool is_real_fixed_basis(const Hamiltonian& h, double tol = kTolerance);

}  // namespace stoq
