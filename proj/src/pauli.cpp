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

#include "stoq/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stoq/errors.hpp"

namespace stoq {

char to_char(Pauli p) {
  switch (p) {
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  return '?';
}

std::optional<Pauli> pauli_from_char(char c) {
  switch (c) {
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      return std::nullopt;
  }
}

Hamiltonian::Hamiltonian(std::size_t n_qubits) : n_(n_qubits) {
  if (n_qubits == 0) throw InputError("a Hamiltonian needs at least one qubit");
}

void Hamiltonian::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for " +
                     std::to_string(n_) + " qubits");
  }
}

Hamiltonian& Hamiltonian::add(Vertex v, Pauli p, double coeff) {
  check_vertex(v);
  if (!std::isfinite(coeff)) throw InputError("coefficient is not finite");
  if (const double c = (one_[{v, p}] += coeff); c == 0.0) one_.erase({v, p});
  return *this;
}

Hamiltonian& Hamiltonian::add(Vertex u, Pauli pu, Vertex v, Pauli pv,
                              double coeff) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("two-local term acts twice on qubit " + std::to_string(u));
  if (!std::isfinite(coeff)) throw InputError("coefficient is not finite");
  if (u > v) {
    std::swap(u, v);
    std::swap(pu, pv);
  }
  if (const double c = (two_[{u, v, pu, pv}] += coeff); c == 0.0) two_.erase({u, v, pu, pv});
  return *this;
}

double Hamiltonian::coefficient(Vertex v, Pauli p) const {
  check_vertex(v);
  auto it = one_.find({v, p});
  return it == one_.end() ? 0.0 : it->second;
}

double Hamiltonian::coefficient(Vertex u, Pauli pu, Vertex v, Pauli pv) const {
  check_vertex(u);
  check_vertex(v);
  if (u > v) {
    std::swap(u, v);
    std::swap(pu, pv);
  }
  auto it = two_.find({u, v, pu, pv});
  return it == two_.end() ? 0.0 : it->second;
}

std::vector<std::pair<Vertex, Vertex>> Hamiltonian::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& [key, coeff] : two_) {
    std::pair<Vertex, Vertex> e{key.u, key.v};
    if (out.empty() || out.back() != e) out.push_back(e);
  }
  return out;
}

Rotation3 Rotation3::from_matrix(const Eigen::Matrix3d& m) {
  if (!m.allFinite() ||
      (m.transpose() * m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-12 ||
      std::abs(m.determinant() - 1.0) > 1e-12) {
    throw PreconditionError("matrix is not a proper rotation");
  }
  return Rotation3(m);
}

Rotation3 Rotation3::about_axis(Pauli a, double angle) {
  Eigen::Vector3d ax = Eigen::Vector3d::Zero();
  ax[axis(a)] = 1.0;
  return Rotation3(Eigen::AngleAxisd(angle, ax).toRotationMatrix());
}

Rotation3 Rotation3::operator*(const Rotation3& other) const {
  return Rotation3(m_ * other.m_);
}

const std::array<Permutation, 6>& all_permutations() {
  static const std::array<Permutation, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return perms;
}

int permutation_parity(const Permutation& p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  return {outer[inner[0]], outer[inner[1]], outer[inner[2]]};
}

Permutation inverse(const Permutation& p) {
  Permutation inv{};
  for (std::uint8_t m = 0; m < 3; ++m) inv[p[m]] = m;
  return inv;
}

Eigen::Matrix3d SignedPermutation::matrix() const {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  for (int col = 0; col < 3; ++col) m(perm[col], col) = signs[perm[col]];
  return m;
}

int SignedPermutation::determinant() const {
  return permutation_parity(perm) * signs[0] * signs[1] * signs[2];
}

Rotation3 SignedPermutation::rotation() const {
  if (determinant() != 1) throw PreconditionError("signed permutation has determinant -1");
  return Rotation3::from_matrix(matrix());
}

const std::vector<SignedPermutation>& all_signed_permutations() {
  static const std::vector<SignedPermutation> all = [] {
    std::vector<SignedPermutation> out;
    for (const auto& p : all_permutations()) {
      for (int bits = 0; bits < 8; ++bits) {
        out.push_back({p,
                       {(bits & 4) ? -1 : 1, (bits & 2) ? -1 : 1, (bits & 1) ? -1 : 1}});
      }
    }
    return out;
  }();
  return all;
}

const std::vector<SignedPermutation>& clifford_rotations() {
  static const std::vector<SignedPermutation> cliffords = [] {
    std::vector<SignedPermutation> out;
    for (const auto& sp : all_signed_permutations())
      if (sp.determinant() == 1) out.push_back(sp);
    return out;
  }();
  return cliffords;
}

EdgeData extract_edge_data(const Hamiltonian& h, Vertex u, Vertex v) {
  if (u >= h.n_qubits() || v >= h.n_qubits()) {
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") out of range");
  }
  if (u == v) throw InputError("edge endpoints must differ");
  EdgeData e;
  for (Pauli pu : kPaulis) {
    e.s_vec[axis(pu)] = h.coefficient(u, pu);
    e.p_vec[axis(pu)] = h.coefficient(v, pu);
    for (Pauli pv : kPaulis) e.beta(axis(pu), axis(pv)) = h.coefficient(u, pu, v, pv);
  }
  return e;
}

EdgeData apply_rotations(const EdgeData& e, const Rotation3& o1, const Rotation3& o2) {
  EdgeData out;
  out.beta = o1.matrix() * e.beta * o2.matrix().transpose();
  out.s_vec = o1.matrix() * e.s_vec;
  out.p_vec = o2.matrix() * e.p_vec;
  return out;
}

Eigen::Matrix3d apply_signed_permutations(const Eigen::Matrix3d& beta,
                                          const SignedPermutation& pu,
                                          const SignedPermutation& pv) {
  return pu.matrix() * beta * pv.matrix().transpose();
}

int coupling_rank(const Eigen::Matrix3d& beta) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(beta);
  const auto& sv = svd.singularValues();
  return static_cast<int>((sv.array() > kTolerance).count());
}

bool is_z_matrix_2q(const EdgeData& e, double tol) {
  constexpr int X = 0, Y = 1, Z = 2;
  const auto& b = e.beta;
  // Realness: every coefficient with exactly one Y factor vanishes.
  if (std::abs(e.s_vec[Y]) > tol || std::abs(e.p_vec[Y]) > tol) return false;
  if (std::abs(b(X, Y)) > tol || std::abs(b(Y, X)) > tol) return false;
  if (std::abs(b(Z, Y)) > tol || std::abs(b(Y, Z)) > tol) return false;
  // Non-positive off-diagonal entries.
  if (b(X, X) > -std::abs(b(Y, Y)) + tol) {
    if (b(X, X) + std::abs(b(Y, Y)) > tol) return false;
  }
  if (e.p_vec[X] + std::abs(b(Z, X)) > tol) return false;
  if (e.s_vec[X] + std::abs(b(X, Z)) > tol) return false;
  return true;
}

bool is_real_fixed_basis(const Hamiltonian& h, double tol) {
  for (const auto& [key, c] : h.one_local())
    if (key.p == Pauli::Y && std::abs(c) > tol) return false;
  for (const auto& [key, c] : h.two_local()) {
    const int ys = (key.pu == Pauli::Y) + (key.pv == Pauli::Y);
    if (ys == 1 && std::abs(c) > tol) return false;
  }
  return true;
}

}  // namespace stoq
