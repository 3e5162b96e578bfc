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

#include "stoq/oracle.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <unsupported/Eigen/KroneckerProduct>

#include "stoq/errors.hpp"

namespace stoq {

namespace {

using Eigen::Matrix3d;
using Eigen::Vector3d;
using cd = std::complex<double>;

// Coefficient view of a Hamiltonian: one-local vectors and oriented
// coupling matrices (rows on the smaller vertex).
struct CoeffView {
  std::vector<Vector3d> s;
  std::map<std::pair<Vertex, Vertex>, Matrix3d> beta;
  std::vector<std::vector<Vertex>> adj;
};

CoeffView view_of(const Hamiltonian& h) {
  CoeffView v;
  const std::size_t n = h.n_qubits();
  v.s.assign(n, Vector3d::Zero());
  v.adj.assign(n, {});
  for (const auto& [key, c] : h.one_local()) v.s[key.v][axis(key.p)] += c;
  for (const auto& [key, c] : h.two_local()) {
    auto [it, inserted] = v.beta.try_emplace({key.u, key.v}, Matrix3d::Zero());
    if (inserted) {
      v.adj[key.u].push_back(key.v);
      v.adj[key.v].push_back(key.u);
    }
    it->second(axis(key.pu), axis(key.pv)) += c;
  }
  return v;
}

class CliffordSearch {
 public:
  CliffordSearch(const CoeffView& view, const std::vector<SignedPermutation>& options,
                 bool realness_only)
      : view_(view), options_(options), realness_only_(realness_only) {
    for (const auto& o : options_) mats_.push_back(o.matrix());
    const std::size_t n = view_.s.size();
    choice_.assign(n, -1);
    x_field_.assign(n, 0.0);
    x_sum_.assign(n, 0.0);
  }

  // Searches one connected component given in vertex order.
  bool solve(const std::vector<Vertex>& order) {
    order_ = order;
    return descend(0);
  }

  int choice(Vertex v) const { return choice_[v]; }

 private:
  bool descend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex k = order_[depth];
    for (int c = 0; c < static_cast<int>(options_.size()); ++c) {
      std::vector<std::pair<Vertex, double>> deltas;
      if (place(k, c, &deltas) && descend(depth + 1)) return true;
      for (const auto& [v, d] : deltas) x_sum_[v] -= d;
      choice_[k] = -1;
    }
    return false;
  }

  bool place(Vertex k, int c, std::vector<std::pair<Vertex, double>>* deltas) {
    choice_[k] = c;
    const Matrix3d& rk = mats_[c];
    const Vector3d sk = rk * view_.s[k];
    if (std::abs(sk[1]) > kTolerance) return false;
    x_field_[k] = sk[0];
    std::vector<Vertex> touched{k};
    for (Vertex u : view_.adj[k]) {
      if (choice_[u] < 0) continue;
      const bool u_row = u < k;
      const Vertex r = u_row ? u : k, col = u_row ? k : u;
      const Matrix3d b =
          mats_[choice_[r]] * view_.beta.at({r, col}) * mats_[choice_[col]].transpose();
      if (std::abs(b(0, 1)) > kTolerance || std::abs(b(1, 0)) > kTolerance) return false;
      if (std::abs(b(1, 2)) > kTolerance || std::abs(b(2, 1)) > kTolerance) return false;
      if (realness_only_) continue;
      if (b(0, 0) + std::abs(b(1, 1)) > kTolerance) return false;
      const double dr = std::abs(b(0, 2)), dc = std::abs(b(2, 0));
      x_sum_[r] += dr;
      x_sum_[col] += dc;
      deltas->push_back({r, dr});
      deltas->push_back({col, dc});
      touched.push_back(u);
    }
    if (realness_only_) return true;
    for (Vertex v : touched)
      if (x_field_[v] + x_sum_[v] > kTolerance) return false;
    return true;
  }

  const CoeffView& view_;
  const std::vector<SignedPermutation>& options_;
  bool realness_only_;
  std::vector<Matrix3d> mats_;
  std::vector<Vertex> order_;
  std::vector<int> choice_;
  std::vector<double> x_field_;
  std::vector<double> x_sum_;
};

const std::vector<SignedPermutation>& realness_options() {
  static const std::vector<SignedPermutation> opts = [] {
    std::vector<SignedPermutation> out;
    for (const auto& p : all_permutations()) out.push_back({p, {1, 1, permutation_parity(p)}});
    return out;
  }();
  return opts;
}

Eigen::Matrix2cd pauli_matrix(int a) {
  Eigen::Matrix2cd m;
  switch (a) {
    case 0:
      m << 0, 1, 1, 0;
      break;
    case 1:
      m << 0, cd(0, -1), cd(0, 1), 0;
      break;
    default:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

SparseMatrixC sparse_identity(std::size_t dim) {
  SparseMatrixC id(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  id.setIdentity();
  return id;
}

SparseMatrixC kron(const SparseMatrixC& a, const SparseMatrixC& b) {
  SparseMatrixC out = Eigen::kroneckerProduct(a, b);
  return out;
}

// Embeds 2x2 blocks at the given qubits (sorted ascending).
SparseMatrixC embed(std::size_t n, const std::vector<std::pair<Vertex, Eigen::Matrix2cd>>& blocks) {
  SparseMatrixC out = sparse_identity(1);
  std::size_t next = 0;
  for (const auto& [q, m] : blocks) {
    if (q > next) out = kron(out, sparse_identity(std::size_t{1} << (q - next)));
    out = kron(out, SparseMatrixC(m.sparseView()));
    next = q + 1;
  }
  if (next < n) out = kron(out, sparse_identity(std::size_t{1} << (n - next)));
  return out;
}

std::uint64_t next_u64(std::mt19937_64& rng) { return rng(); }
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(next_u64(rng) >> 11) * 0x1.0p-53;
}

}  // namespace

std::optional<std::vector<SignedPermutation>> brute_force_clifford(const Hamiltonian& h,
                                                                   OracleMode mode,
                                                                   std::size_t cap) {
  const bool realness = mode == OracleMode::kRealness;
  if (cap == 0) cap = realness ? kRealnessSearchCap : kZMatrixSearchCap;
  if (h.n_qubits() > cap) {
    throw CapacityError("brute-force search refused: " + std::to_string(h.n_qubits()) +
                        " qubits exceeds the cap of " + std::to_string(cap));
  }
  const CoeffView view = view_of(h);
  const auto& options = realness ? realness_options() : clifford_rotations();
  CliffordSearch search(view, options, realness);

  const std::size_t n = h.n_qubits();
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : view.adj[comp[i]]) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    if (!search.solve(comp)) return std::nullopt;
  }
  std::vector<SignedPermutation> out;
  out.reserve(n);
  for (Vertex v = 0; v < n; ++v) out.push_back(options[search.choice(v)]);
  return out;
}

bool is_z_matrix_coefficients(const Hamiltonian& h, double tol) {
  const CoeffView view = view_of(h);
  const std::size_t n = h.n_qubits();
  std::vector<double> x_sum(n, 0.0);
  for (const auto& [e, b] : view.beta) {
    if (std::abs(b(0, 1)) > tol || std::abs(b(1, 0)) > tol) return false;
    if (std::abs(b(1, 2)) > tol || std::abs(b(2, 1)) > tol) return false;
    if (b(0, 0) + std::abs(b(1, 1)) > tol) return false;
    x_sum[e.first] += std::abs(b(0, 2));
    x_sum[e.second] += std::abs(b(2, 0));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (std::abs(view.s[v][1]) > tol) return false;
    if (view.s[v][0] + x_sum[v] > tol) return false;
  }
  return true;
}

Hamiltonian rotate_hamiltonian(const Hamiltonian& h, const std::vector<Rotation3>& rotations) {
  if (rotations.size() != h.n_qubits()) throw InputError("need one rotation per qubit");
  const CoeffView view = view_of(h);
  Hamiltonian out(h.n_qubits());
  for (Vertex v = 0; v < h.n_qubits(); ++v) {
    const Vector3d s = rotations[v].matrix() * view.s[v];
    for (Pauli p : kPaulis)
      if (s[axis(p)] != 0.0) out.add(v, p, s[axis(p)]);
  }
  for (const auto& [e, b] : view.beta) {
    const Matrix3d r = rotations[e.first].matrix() * b * rotations[e.second].matrix().transpose();
    for (Pauli a : kPaulis)
      for (Pauli c : kPaulis)
        if (r(axis(a), axis(c)) != 0.0) out.add(e.first, a, e.second, c, r(axis(a), axis(c)));
  }
  return out;
}

Eigen::Matrix2cd unitary_from_rotation(const Rotation3& r) {
  const Eigen::Quaterniond q(r.matrix());
  const cd minus_i(0, -1);
  return q.w() * Eigen::Matrix2cd::Identity() +
         minus_i * (q.x() * pauli_matrix(0) + q.y() * pauli_matrix(1) + q.z() * pauli_matrix(2));
}

SparseMatrixC assemble_matrix(const Hamiltonian& h, const std::vector<Rotation3>& rotations) {
  const std::size_t n = h.n_qubits();
  if (n > kDenseCap) {
    throw CapacityError("dense assembly refused: " + std::to_string(n) + " qubits exceeds " +
                        std::to_string(kDenseCap));
  }
  if (rotations.size() != n) throw InputError("need one rotation per qubit");
  std::vector<Eigen::Matrix2cd> u;
  for (const auto& r : rotations) u.push_back(unitary_from_rotation(r));
  auto local = [&u](Vertex q, Pauli p) -> Eigen::Matrix2cd {
    return u[q] * pauli_matrix(axis(p)) * u[q].adjoint();
  };
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  SparseMatrixC out(dim, dim);
  for (const auto& [key, c] : h.one_local()) {
    out += embed(n, {{key.v, c * local(key.v, key.p)}});
  }
  for (const auto& [key, c] : h.two_local()) {
    out += embed(n, {{key.u, c * local(key.u, key.pu)}, {key.v, local(key.v, key.pv)}});
  }
  out.prune(cd(0.0, 0.0), 0.0);
  return out;
}

bool dense_z_check(const Hamiltonian& h, const std::vector<Rotation3>& rotations) {
  const SparseMatrixC m = assemble_matrix(h, rotations);
  double mass = 1.0;
  for (const auto& [k, c] : h.one_local()) mass += std::abs(c);
  for (const auto& [k, c] : h.two_local()) mass += std::abs(c);
  const double tol = 1e-12 * mass;
  for (Eigen::Index col = 0; col < m.outerSize(); ++col) {
    for (SparseMatrixC::InnerIterator it(m, col); it; ++it) {
      if (std::abs(it.value().imag()) > tol) return false;
      if (it.row() != it.col() && it.value().real() > tol) return false;
    }
  }
  const SparseMatrixC asym = m - SparseMatrixC(m.transpose());
  for (Eigen::Index col = 0; col < asym.outerSize(); ++col)
    for (SparseMatrixC::InnerIterator it(asym, col); it; ++it)
      if (std::abs(it.value()) > tol) return false;
  return true;
}

bool dense_z_check(const Hamiltonian& h, const std::vector<SignedPermutation>& assignment) {
  std::vector<Rotation3> rotations;
  rotations.reserve(assignment.size());
  for (const auto& sp : assignment) rotations.push_back(sp.rotation());
  return dense_z_check(h, rotations);
}

SignedPermutation pi_reduction(const Rotation3& o, double tol) {
  // Column index of each row's factor, monomials in increasing order.
  static constexpr std::array<std::array<int, 3>, 6> kMonomials = {{
      {0, 1, 2},  // aei
      {0, 2, 1},  // afh
      {1, 0, 2},  // bdi
      {1, 2, 0},  // bfg
      {2, 0, 1},  // cdh
      {2, 1, 0},  // ceg
  }};
  const Matrix3d& m = o.matrix();
  for (const auto& cols : kMonomials) {
    bool nonzero = true;
    for (int r = 0; r < 3; ++r)
      if (std::abs(m(r, cols[r])) <= tol) nonzero = false;
    if (!nonzero) continue;
    SignedPermutation sp;
    for (int r = 0; r < 3; ++r) {
      sp.perm[cols[r]] = static_cast<std::uint8_t>(r);
      sp.signs[r] = m(r, cols[r]) > 0 ? 1 : -1;
    }
    return sp;
  }
  throw PreconditionError("matrix has no nonzero determinant monomial");
}

Hamiltonian random_xyz(std::size_t n, double density, const std::vector<double>& coeff_set,
                       std::uint64_t seed) {
  if (n < 2) throw InputError("random_xyz needs at least two qubits");
  if (coeff_set.empty()) throw InputError("empty coefficient set");
  if (std::all_of(coeff_set.begin(), coeff_set.end(), [](double c) { return c == 0.0; })) {
    throw InputError("coefficient set has no nonzero value");
  }
  std::mt19937_64 rng(seed);
  auto draw_weight = [&]() {
    for (;;) {
      Vector3d w;
      for (int i = 0; i < 3; ++i) w[i] = coeff_set[next_u64(rng) % coeff_set.size()];
      if (!w.isZero(0.0)) return w;
    }
  };
  Hamiltonian h(n);
  bool any = false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (next_unit(rng) >= density) continue;
      const Vector3d w = draw_weight();
      for (Pauli p : kPaulis)
        if (w[axis(p)] != 0.0) h.add(u, p, v, p, w[axis(p)]);
      any = true;
    }
  }
  if (!any) {
    const Vector3d w = draw_weight();
    for (Pauli p : kPaulis)
      if (w[axis(p)] != 0.0) h.add(0, p, 1, p, w[axis(p)]);
  }
  return h;
}

}  // namespace stoq
