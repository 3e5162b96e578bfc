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

namespace stoq {

/// Couplings of an XYZ Heisenberg Hamiltonian: edge (u < v) -> diagonal
/// weight (a_XX, a_YY, a_ZZ).
struct WeightedInteractionGraph {
  std::size_t n = 0;
  std::map<std::pair<Vertex, Vertex>, Eigen::Vector3d> edges;
};

/// Throws ModelError on one-local terms or off-diagonal couplings.
WeightedInteractionGraph build_graph(const Hamiltonian& h);

/// Number of entries with magnitude above kTolerance.
int weight_rank(const Eigen::Vector3d& w);

/// Whether applying permutation p on both ends keeps w[p^-1(X)]^2 >= w[p^-1(Y)]^2.
bool permutation_admissible(const Permutation& p, const Eigen::Vector3d& w);

struct RankComponent {
  int id = 0;
  std::vector<Vertex> vertices;          // sorted
  std::vector<Permutation> admissible;   // lexicographic
};

struct RankComponents {
  std::vector<RankComponent> components;  // ordered by smallest vertex
  std::vector<int> component_of;          // vertex -> component id
};

/// Components joined by rank>1 edges. Every vertex belongs to one component.
RankComponents rank_components(const WeightedInteractionGraph& g);

/// Labels are 0-based axes: 0 = X, 1 = Y, 2 = Z.
struct QuotientEdge {
  int a = 0;
  int b = 0;  // a <= b; a == b for a rank-1 edge inside one component
  int label = 0;
  std::pair<Vertex, Vertex> origin;
};

struct QuotientGraph {
  int n_vertices = 0;
  std::vector<QuotientEdge> edges;
};

QuotientGraph build_quotient(const WeightedInteractionGraph& g, const RankComponents& comps);

/// Quotient vertex incident to three distinct labels, if any (smallest id).
std::optional<int> step4_label_check(const QuotientGraph& q);

/// Labels incident to each quotient vertex, as a bit mask (bit i = label i).
std::vector<unsigned> incident_labels(const QuotientGraph& q);

struct SingleLabelComponent {
  int label = 0;
  std::vector<int> vertices;  // quotient vertices, sorted
  std::vector<int> boundary;  // adjacent non-single-label vertices, sorted
};

struct HetEdge {
  int a = 0;
  int b = 0;
  int label = 0;
};

struct HeterogeneousQuotientGraph {
  /// True when every vertex of the cluster is single-label; the graph is
  /// then empty and `whole_label` holds the common label.
  bool whole_single_label = false;
  int whole_label = -1;
  std::vector<int> vertices;                // non-single-label vertices, sorted
  std::map<int, std::pair<int, int>> kind;  // vertex -> its two labels (i < j)
  std::vector<HetEdge> edges;
  std::vector<SingleLabelComponent> single_label_components;
};

/// Built over a connected set of quotient vertices (a cluster). Requires
/// step4_label_check to have passed.
HeterogeneousQuotientGraph build_heterogeneous(const QuotientGraph& q,
                                               const std::vector<int>& cluster);
/// Whole-graph form; the quotient graph is expected to be connected.
HeterogeneousQuotientGraph build_heterogeneous(const QuotientGraph& q);

struct IsingEdge {
  int u = 0;
  int v = 0;  // u == v for a self-loop
  int sign = 1;
};

struct IsingInstance {
  int n_vertices = 0;
  std::vector<IsingEdge> edges;
};

/// Edge sign -1 exactly for label-Y edges between an XY-vertex and a
/// YZ-vertex. Vertices are indexed by position in hq.vertices.
IsingInstance step6_ising(const HeterogeneousQuotientGraph& hq);

/// Spins with sigma_u * sigma_v == sign on every edge, or nullopt. The
/// smallest vertex of each connected component gets +1; negating any
/// component gives the other solutions.
std::optional<std::vector<int>> ising_exact_sat(const IsingInstance& inst);

/// Translation of an Ising spin to a permutation for a vertex whose two
/// labels are `kind` (0-based, i < j).
Permutation table_permutation(std::pair<int, int> kind, int spin);

/// Permutation per heterogeneous vertex for one Ising solution.
std::map<int, Permutation> step8_translate(const std::vector<int>& spins,
                                           const HeterogeneousQuotientGraph& hq);

/// Candidate set Sigma_u per quotient vertex of a cluster.
using Assignment = std::map<int, std::vector<Permutation>>;

/// Extends a heterogeneous assignment over the single-label components.
/// Returns nullopt when some Sigma_v comes out empty.
std::optional<Assignment> step9_extend(const std::map<int, Permutation>& het_assignment,
                                       const HeterogeneousQuotientGraph& hq,
                                       const RankComponents& comps);

/// Edge-case candidates {Pi : Pi(label) = target} intersected with the
/// admissible sets; nullopt when some set is empty.
std::optional<Assignment> step9_edge_case(const HeterogeneousQuotientGraph& hq,
                                          const std::vector<int>& cluster,
                                          const RankComponents& comps, int target);

/// Interaction edges kept in the partitioned graph for assignment `a` over
/// `cluster`: every rank>1 edge, and rank-1 edges whose label is sent to X.
std::vector<std::pair<Vertex, Vertex>> partition_graph(const WeightedInteractionGraph& g,
                                                       const QuotientGraph& q,
                                                       const RankComponents& comps,
                                                       const std::vector<int>& cluster,
                                                       const Assignment& a);

/// Signed permutation per vertex of the cluster, or nullopt.
std::optional<std::map<Vertex, SignedPermutation>> steps12_13_signs(
    const WeightedInteractionGraph& g, const QuotientGraph& q, const RankComponents& comps,
    const std::vector<int>& cluster, const Assignment& a);

struct TraceRecord {
  std::string step_id;
  std::string action;
  std::string detail;
};

struct XyzDecision {
  bool stoquastic = false;
  /// One signed permutation per qubit when stoquastic.
  std::vector<SignedPermutation> solution;
  std::vector<TraceRecord> trace;
  std::string rejecting_step;  // empty when stoquastic
};

XyzDecision decide_xyz(const Hamiltonian& h);

/// True iff every transformed weight is diagonal with
/// b11 <= -|b22| and every element has determinant +1.
bool verify_xyz_solution(const WeightedInteractionGraph& g,
                         const std::vector<SignedPermutation>& solution);

}  // namespace stoq
