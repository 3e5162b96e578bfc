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

#include "stoq/decomposer.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "stoq/errors.hpp"

namespace stoq {

namespace {

std::string edge_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

ConeResult reject_edge(Vertex u, Vertex v, std::string why) {
  ConeResult r;
  r.reason = "edge " + edge_name(u, v) + ": " + why;
  r.offending_edge = std::make_pair(u, v);
  return r;
}

ConeResult reject_vertex(Vertex v, std::string why) {
  ConeResult r;
  r.reason = "vertex " + std::to_string(v) + ": " + why;
  r.offending_vertex = v;
  return r;
}

}  // namespace

Hamiltonian Decomposition::resum(std::size_t n_qubits) const {
  Hamiltonian h(n_qubits);
  for (const auto& t : terms) {
    for (Pauli a : kPaulis) {
      if (t.term.s_vec[axis(a)] != 0) h.add(t.u, a, t.term.s_vec[axis(a)]);
      if (t.term.p_vec[axis(a)] != 0) h.add(t.v, a, t.term.p_vec[axis(a)]);
      for (Pauli b : kPaulis) {
        const double c = t.term.beta(axis(a), axis(b));
        if (c != 0) h.add(t.u, a, t.v, b, c);
      }
    }
  }
  for (const auto& [v, c] : leftovers) h.add(v, Pauli::X, c);
  for (const auto& [v, c] : diagonal_leftovers) h.add(v, Pauli::Z, c);
  return h;
}

ConeResult cone_membership(const Hamiltonian& h) { return cone_membership(h, h.edges()); }

ConeResult cone_membership(const Hamiltonian& h,
                           const std::vector<std::pair<Vertex, Vertex>>& order) {
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != h.edges()) throw InputError("edge order is not a permutation of the edges");
  }
  if (!is_real_fixed_basis(h)) {
    ConeResult r;
    r.reason = "not real in the computational basis";
    for (const auto& [key, c] : h.one_local())
      if (key.p == Pauli::Y && std::abs(c) > kTolerance) return reject_vertex(key.v, r.reason);
    for (const auto& [key, c] : h.two_local())
      if (((key.pu == Pauli::Y) != (key.pv == Pauli::Y)) && std::abs(c) > kTolerance)
        return reject_edge(key.u, key.v, r.reason);
    return r;
  }

  const std::size_t n = h.n_qubits();
  std::vector<double> x_left(n, 0.0), z_left(n, 0.0);
  for (Vertex v = 0; v < n; ++v) {
    x_left[v] = h.coefficient(v, Pauli::X);
    z_left[v] = h.coefficient(v, Pauli::Z);
    if (x_left[v] > kTolerance) return reject_vertex(v, "positive X field");
  }

  Decomposition dec;
  for (const auto& [u, v] : order) {
    EdgeData d = extract_edge_data(h, u, v);
    const auto& b = d.beta;
    if (b(0, 0) + std::abs(b(1, 1)) > kTolerance) {
      return reject_edge(u, v, "a_XX > -|a_YY|");
    }
    const double alpha = std::abs(b(0, 2));
    const double beta = std::abs(b(2, 0));
    if (alpha > -x_left[u] + kTolerance) {
      return reject_vertex(u, "X budget exhausted on edge " + edge_name(u, v));
    }
    if (beta > -x_left[v] + kTolerance) {
      return reject_vertex(v, "X budget exhausted on edge " + edge_name(u, v));
    }
    const double take_u = std::min(alpha, -x_left[u]);
    const double take_v = std::min(beta, -x_left[v]);
    d.s_vec = Eigen::Vector3d(take_u == 0 ? 0.0 : -take_u, 0.0, z_left[u]);
    d.p_vec = Eigen::Vector3d(take_v == 0 ? 0.0 : -take_v, 0.0, z_left[v]);
    x_left[u] += take_u;
    x_left[v] += take_v;
    z_left[u] = 0.0;
    z_left[v] = 0.0;
    dec.terms.push_back({u, v, d});
  }
  for (Vertex v = 0; v < n; ++v) {
    if (x_left[v] != 0.0) dec.leftovers[v] = x_left[v];
    if (z_left[v] != 0.0) dec.diagonal_leftovers[v] = z_left[v];
  }
  ConeResult r;
  r.accepted = true;
  r.decomposition = std::move(dec);
  return r;
}

BipartiteResult uniform_bipartite_stoquastic(
    const EdgeData& h, std::size_t n_qubits,
    const std::vector<std::pair<Vertex, Vertex>>& edges) {
  BipartiteResult out;
  out.coloring.assign(n_qubits, -1);
  std::vector<std::vector<Vertex>> adj(n_qubits);
  for (const auto& [u, v] : edges) {
    if (u >= n_qubits || v >= n_qubits || u == v) {
      throw InputError("bad edge " + edge_name(u, v));
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (Vertex root = 0; root < n_qubits; ++root) {
    if (out.coloring[root] != -1 || adj[root].empty()) continue;
    out.coloring[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : adj[x]) {
        if (out.coloring[y] == -1) {
          out.coloring[y] = 1 - out.coloring[x];
          queue.push_back(y);
        } else if (out.coloring[y] == out.coloring[x]) {
          out.caveat = "interaction graph has an odd cycle";
          return out;
        }
      }
    }
  }
  out.applicable = true;
  out.decision = decide_stoquastic_2q(h);
  out.stoquastic = out.decision->stoquastic;
  if (!out.stoquastic) {
    out.caveat =
        "h is not stoquastic, so no basis change acting identically on each side of the "
        "bipartition makes H stoquastic; other basis changes are not excluded";
  }
  return out;
}

BipartiteResult uniform_bipartite_stoquastic(
    const std::vector<EdgeData>& per_edge, std::size_t n_qubits,
    const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (per_edge.size() != edges.size() || per_edge.empty()) {
    throw InputError("need one two-qubit term per edge");
  }
  for (const auto& e : per_edge) {
    if (e.beta != per_edge[0].beta || e.s_vec != per_edge[0].s_vec ||
        e.p_vec != per_edge[0].p_vec) {
      throw InputError("edge terms are not uniform");
    }
  }
  return uniform_bipartite_stoquastic(per_edge[0], n_qubits, edges);
}

}  // namespace stoq
