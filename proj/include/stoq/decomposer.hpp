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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stoq/pauli.hpp"
#include "stoq/two_qubit.hpp"

namespace stoq {

struct DecompositionTerm {
  Vertex u;
  Vertex v;
  EdgeData term;  // s_vec acts on u, p_vec on v
};

struct Decomposition {
  std::vector<DecompositionTerm> terms;
  /// Residual X coefficient per vertex (all <= 0, zeros omitted).
  std::map<Vertex, double> leftovers;
  /// Z coefficients of vertices that no edge touches; these are diagonal and
  /// need no budget.
  std::map<Vertex, double> diagonal_leftovers;

  /// Sum of all pieces as a Hamiltonian on n qubits.
  Hamiltonian resum(std::size_t n_qubits) const;
};

struct ConeResult {
  bool accepted = false;
  std::optional<Decomposition> decomposition;
  std::string reason;  // empty on acceptance
  std::optional<std::pair<Vertex, Vertex>> offending_edge;
  std::optional<Vertex> offending_vertex;
};

/// Fixed-basis membership in the cone of 2-local symmetric Z-matrices,
/// consuming the -X budget of each vertex as sparingly as possible. Edges are
/// visited in lexicographic order.
ConeResult cone_membership(const Hamiltonian& h);

/// Same, visiting edges in the given order (a permutation of h.edges()).
ConeResult cone_membership(const Hamiltonian& h,
                           const std::vector<std::pair<Vertex, Vertex>>& order);

struct BipartiteResult {
  bool applicable = false;  // false: the graph has an odd cycle
  bool stoquastic = false;
  /// Color per vertex (0 or 1, -1 for vertices on no edge). The first qubit of
  /// h sits on color 0; each component's smallest vertex gets color 0.
  std::vector<int> coloring;
  std::optional<TwoQubitDecision> decision;
  std::string caveat;
};

/// H = sum over edges of the same two-qubit h. A negative answer only rules
/// out basis changes that act identically on every qubit of a partition.
BipartiteResult uniform_bipartite_stoquastic(
    const EdgeData& h, std::size_t n_qubits,
    const std::vector<std::pair<Vertex, Vertex>>& edges);

/// Variant taking one EdgeData per edge; throws InputError unless all are
/// identical.
BipartiteResult uniform_bipartite_stoquastic(
    const std::vector<EdgeData>& per_edge, std::size_t n_qubits,
    const std::vector<std::pair<Vertex, Vertex>>& edges);

}  // namespace stoq
