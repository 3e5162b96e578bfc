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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "stoq/errors.hpp"
#include "stoq/oracle.hpp"
#include "stoq/xyz.hpp"

namespace stoq {
namespace {

Hamiltonian xyz(std::size_t n, const std::vector<std::tuple<Vertex, Vertex, Eigen::Vector3d>>& es) {
  Hamiltonian h(n);
  for (const auto& [u, v, w] : es)
    for (Pauli p : kPaulis)
      if (w[axis(p)] != 0) h.add(u, p, v, p, w[axis(p)]);
  return h;
}

const Eigen::Vector3d kOnes(1, 1, 1);

Hamiltonian triangle() { return xyz(3, {{0, 1, kOnes}, {1, 2, kOnes}, {0, 2, kOnes}}); }
Hamiltonian square() {
  return xyz(4, {{0, 1, kOnes}, {1, 2, kOnes}, {2, 3, kOnes}, {0, 3, kOnes}});
}
Hamiltonian star() {
  return xyz(4, {{0, 1, {1, 0, 0}}, {0, 2, {0, 1, 0}}, {0, 3, {0, 0, 1}}});
}

TEST(BuildGraph, Examples) {
  const auto g = build_graph(xyz(2, {{0, 1, kOnes}}));
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges.at({0, 1}), kOnes);
  Hamiltonian bad(2);
  bad.add(0, Pauli::X, 1, Pauli::Z, 1);
  EXPECT_THROW(build_graph(bad), ModelError);
  Hamiltonian field(2);
  field.add(0, Pauli::X, 1, Pauli::X, 1).add(0, Pauli::Z, 1);
  EXPECT_THROW(build_graph(field), ModelError);
  const auto s = build_graph(star());
  for (const auto& [e, w] : s.edges) EXPECT_EQ(weight_rank(w), 1);
}

TEST(RankComponents, Examples) {
  const auto all_rank1 = rank_components(build_graph(star()));
  ASSERT_EQ(all_rank1.components.size(), 4u);
  for (const auto& c : all_rank1.components) EXPECT_EQ(c.admissible.size(), 6u);

  const Eigen::Vector3d w(1, 2, 3);
  const auto one = rank_components(build_graph(xyz(2, {{0, 1, w}})));
  ASSERT_EQ(one.components.size(), 1u);
  // Direct enumeration of the defining inequality.
  std::vector<Permutation> want;
  for (const auto& p : all_permutations()) {
    const auto inv = inverse(p);
    if (w[inv[0]] * w[inv[0]] >= w[inv[1]] * w[inv[1]]) want.push_back(p);
  }
  EXPECT_EQ(want.size(), 3u);
  EXPECT_EQ(one.components[0].admissible, want);

  const auto tri = rank_components(build_graph(triangle()));
  ASSERT_EQ(tri.components.size(), 1u);
  EXPECT_EQ(tri.components[0].vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(tri.components[0].admissible.size(), 6u);
}

TEST(Quotient, StarAndLabelCheck) {
  const auto g = build_graph(star());
  const auto comps = rank_components(g);
  const auto q = build_quotient(g, comps);
  EXPECT_EQ(q.n_vertices, 4);
  ASSERT_EQ(q.edges.size(), 3u);
  std::set<int> labels;
  for (const auto& e : q.edges) labels.insert(e.label);
  EXPECT_EQ(labels, (std::set<int>{0, 1, 2}));
  EXPECT_EQ(step4_label_check(q), 0);

  const auto g2 = build_graph(xyz(3, {{0, 1, {0, 1, 0}}, {1, 2, {0, 2, 0}}}));
  EXPECT_FALSE(step4_label_check(build_quotient(g2, rank_components(g2))).has_value());

  const auto g3 = build_graph(triangle());
  EXPECT_TRUE(build_quotient(g3, rank_components(g3)).edges.empty());
}

TEST(Quotient, ParallelEdges) {
  // Two rank>1 components {0,1} and {2,3} joined by X and Y rank-1 edges.
  const auto g = build_graph(
      xyz(4, {{0, 1, kOnes}, {2, 3, kOnes}, {0, 2, {1, 0, 0}}, {1, 3, {0, 1, 0}}}));
  const auto comps = rank_components(g);
  ASSERT_EQ(comps.components.size(), 2u);
  const auto q = build_quotient(g, comps);
  ASSERT_EQ(q.edges.size(), 2u);
  EXPECT_EQ(q.edges[0].a, q.edges[1].a);
  EXPECT_EQ(q.edges[0].b, q.edges[1].b);
  EXPECT_NE(q.edges[0].label, q.edges[1].label);
}

TEST(Heterogeneous, ChainCollapse) {
  // Labels X, X, Y along the path 0-1-2-3.
  const auto g = build_graph(xyz(4, {{0, 1, {1, 0, 0}}, {1, 2, {1, 0, 0}}, {2, 3, {0, 1, 0}}}));
  const auto q = build_quotient(g, rank_components(g));
  const auto hq = build_heterogeneous(q);
  EXPECT_FALSE(hq.whole_single_label);
  EXPECT_EQ(hq.vertices, (std::vector<int>{2}));
  EXPECT_EQ(hq.kind.at(2), std::make_pair(0, 1));
  ASSERT_EQ(hq.single_label_components.size(), 2u);
  std::multiset<int> self_labels;
  for (const auto& e : hq.edges) {
    EXPECT_EQ(e.a, 2);
    EXPECT_EQ(e.b, 2);
    self_labels.insert(e.label);
  }
  EXPECT_EQ(self_labels, (std::multiset<int>{0, 1}));
}

TEST(Heterogeneous, WholeSingleLabel) {
  const auto g = build_graph(xyz(3, {{0, 1, {0, 0, 1}}, {1, 2, {0, 0, 2}}}));
  const auto hq = build_heterogeneous(build_quotient(g, rank_components(g)));
  EXPECT_TRUE(hq.whole_single_label);
  EXPECT_EQ(hq.whole_label, 2);
}

TEST(Heterogeneous, AlreadyHeterogeneousIsUnchanged) {
  // 4-cycle with alternating X and Z labels: every vertex sees both.
  const auto g = build_graph(
      xyz(4, {{0, 1, {1, 0, 0}}, {1, 2, {0, 0, 1}}, {2, 3, {1, 0, 0}}, {0, 3, {0, 0, 1}}}));
  const auto q = build_quotient(g, rank_components(g));
  const auto hq = build_heterogeneous(q);
  EXPECT_EQ(hq.vertices.size(), 4u);
  EXPECT_TRUE(hq.single_label_components.empty());
  ASSERT_EQ(hq.edges.size(), q.edges.size());
  for (std::size_t i = 0; i < q.edges.size(); ++i) EXPECT_EQ(hq.edges[i].label, q.edges[i].label);
}

TEST(Step6, Signs) {
  HeterogeneousQuotientGraph hq;
  hq.vertices = {0, 1, 2};
  hq.kind = {{0, {0, 1}}, {1, {1, 2}}, {2, {0, 1}}};
  hq.edges = {{0, 1, 1}, {0, 2, 1}, {0, 1, 0}, {1, 2, 2}};
  const auto inst = step6_ising(hq);
  ASSERT_EQ(inst.edges.size(), 4u);
  EXPECT_EQ(inst.edges[0].sign, -1);  // label Y between XY and YZ
  EXPECT_EQ(inst.edges[1].sign, 1);   // label Y between two XY vertices
  EXPECT_EQ(inst.edges[2].sign, 1);
  EXPECT_EQ(inst.edges[3].sign, 1);
}

TEST(Ising, Examples) {
  auto s = ising_exact_sat({2, {{0, 1, 1}}});
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, (std::vector<int>{1, 1}));
  EXPECT_FALSE(ising_exact_sat({3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}}}));
  EXPECT_FALSE(ising_exact_sat({1, {{0, 0, -1}}}));
  EXPECT_TRUE(ising_exact_sat({1, {{0, 0, 1}}}));
  // Trees are always satisfiable.
  std::mt19937_64 rng(30);
  for (int t = 0; t < 50; ++t) {
    IsingInstance tree{10, {}};
    for (int v = 1; v < 10; ++v)
      tree.edges.push_back({static_cast<int>(rng() % v), v, rng() % 2 ? 1 : -1});
    EXPECT_TRUE(ising_exact_sat(tree));
  }
}

TEST(Ising, AgreesWithEnumeration) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 10);
    IsingInstance inst{n, {}};
    const int m = static_cast<int>(rng() % (2 * n + 1));
    for (int k = 0; k < m; ++k) {
      inst.edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n),
                            rng() % 3 == 0 ? -1 : 1});
    }
    bool any = false;
    for (unsigned mask = 0; mask < (1u << n) && !any; ++mask) {
      bool ok = true;
      for (const auto& e : inst.edges) {
        const int su = (mask >> e.u) & 1 ? -1 : 1, sv = (mask >> e.v) & 1 ? -1 : 1;
        ok = ok && su * sv == e.sign;
      }
      any = ok;
    }
    const auto s = ising_exact_sat(inst);
    EXPECT_EQ(s.has_value(), any);
    if (s) {
      for (const auto& e : inst.edges) EXPECT_EQ((*s)[e.u] * (*s)[e.v], e.sign);
    }
  }
}

TEST(PermutationTable, Translations) {
  EXPECT_EQ(table_permutation({0, 2}, 1), (Permutation{0, 1, 2}));
  EXPECT_EQ(table_permutation({0, 2}, -1), (Permutation{2, 1, 0}));
  EXPECT_EQ(table_permutation({0, 1}, 1), (Permutation{0, 2, 1}));
  EXPECT_EQ(table_permutation({0, 1}, -1), (Permutation{2, 0, 1}));
  EXPECT_EQ(table_permutation({1, 2}, 1), (Permutation{1, 0, 2}));
  EXPECT_EQ(table_permutation({1, 2}, -1), (Permutation{1, 2, 0}));
  // Every entry sends one of the vertex's labels to X and the other to Z.
  for (auto kind : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
    for (int s : {1, -1}) {
      const auto p = table_permutation(kind, s);
      std::set<int> images{p[kind.first], p[kind.second]};
      EXPECT_EQ(images, (std::set<int>{0, 2}));
    }
}

TEST(Step9, EdgeCaseSets) {
  const auto g = build_graph(xyz(3, {{0, 1, {0, 1, 0}}, {1, 2, {0, 1, 0}}}));
  const auto comps = rank_components(g);
  const auto q = build_quotient(g, comps);
  const auto hq = build_heterogeneous(q);
  ASSERT_TRUE(hq.whole_single_label);
  const std::vector<int> cluster{0, 1, 2};
  const auto a1 = step9_edge_case(hq, cluster, comps, 0);
  ASSERT_TRUE(a1);
  for (const auto& [v, perms] : *a1) {
    EXPECT_EQ(perms.size(), 2u);
    for (const auto& p : perms) EXPECT_EQ(p[1], 0);
  }
}

TEST(Steps12And13, SingleEdgeSigns) {
  const auto g = build_graph(xyz(2, {{0, 1, kOnes}}));
  const auto comps = rank_components(g);
  const auto q = build_quotient(g, comps);
  const Assignment a = {{0, {Permutation{0, 1, 2}}}};
  const auto s = steps12_13_signs(g, q, comps, {0}, a);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->at(0).signs, (std::array<int, 3>{1, 1, 1}));
  EXPECT_EQ(s->at(1).signs, (std::array<int, 3>{-1, 1, -1}));
  const Eigen::Matrix3d t =
      apply_signed_permutations(Eigen::Matrix3d::Identity(), s->at(0), s->at(1));
  EXPECT_EQ(t, Eigen::Matrix3d(Eigen::Vector3d(-1, 1, -1).asDiagonal()));

  const auto gt = build_graph(triangle());
  const auto ct = rank_components(gt);
  EXPECT_FALSE(steps12_13_signs(gt, build_quotient(gt, ct), ct, {0}, a));
}

TEST(DecideXyz, CanonicalInstances) {
  const auto one = decide_xyz(xyz(2, {{0, 1, kOnes}}));
  EXPECT_TRUE(one.stoquastic);
  EXPECT_FALSE(decide_xyz(triangle()).stoquastic);
  EXPECT_TRUE(decide_xyz(square()).stoquastic);
  const auto s = decide_xyz(star());
  EXPECT_FALSE(s.stoquastic);
  EXPECT_EQ(s.rejecting_step, "4");
  EXPECT_TRUE(std::any_of(s.trace.begin(), s.trace.end(),
                          [](const TraceRecord& r) { return r.step_id == "4" && r.action == "reject"; }));
  // Same verdicts from the exhaustive oracle.
  EXPECT_TRUE(brute_force_clifford(xyz(2, {{0, 1, kOnes}}), OracleMode::kZMatrix));
  EXPECT_FALSE(brute_force_clifford(triangle(), OracleMode::kZMatrix));
  EXPECT_TRUE(brute_force_clifford(square(), OracleMode::kZMatrix));
  EXPECT_FALSE(brute_force_clifford(star(), OracleMode::kZMatrix));
}

TEST(DecideXyz, IsolatedQubitsGetIdentity) {
  const auto d = decide_xyz(xyz(4, {{0, 1, kOnes}}));
  ASSERT_TRUE(d.stoquastic);
  EXPECT_EQ(d.solution[2], SignedPermutation{});
  EXPECT_EQ(d.solution[3], SignedPermutation{});
}

TEST(DecideXyz, MatchesOracleAndIsSound) {
  const std::vector<double> coeffs = {-2, -1, 0, 1, 2};
  int yes = 0, no = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 2 + seed % 4;
    const Hamiltonian h = random_xyz(n, seed % 2 ? 1.0 : 0.4, coeffs, 1000 + seed);
    const auto d = decide_xyz(h);
    const bool oracle = brute_force_clifford(h, OracleMode::kZMatrix).has_value();
    EXPECT_EQ(d.stoquastic, oracle) << "seed " << seed;
    if (!d.stoquastic) {
      ++no;
      continue;
    }
    ++yes;
    const auto g = build_graph(h);
    EXPECT_TRUE(verify_xyz_solution(g, d.solution));
    EXPECT_TRUE(dense_z_check(h, d.solution));
    // All vertices of a rank>1 component share the permutation part.
    for (const auto& c : rank_components(g).components)
      for (Vertex v : c.vertices) EXPECT_EQ(d.solution[v].perm, d.solution[c.vertices[0]].perm);
  }
  EXPECT_GT(yes, 20);
  EXPECT_GT(no, 20);
}

TEST(DecideXyz, Deterministic) {
  const Hamiltonian h = random_xyz(6, 0.6, {-1, 0, 1}, 77);
  const auto a = decide_xyz(h), b = decide_xyz(h);
  EXPECT_EQ(a.stoquastic, b.stoquastic);
  EXPECT_EQ(a.solution, b.solution);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) EXPECT_EQ(a.trace[i].detail, b.trace[i].detail);
}

}  // namespace
}  // namespace stoq
