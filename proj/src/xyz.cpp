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

#include "stoq/xyz.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "stoq/errors.hpp"

namespace stoq {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) {
      parent_[b] = a;
    } else {
      parent_[a] = b;
    }
  }

 private:
  std::vector<std::size_t> parent_;
};

int rank1_label(const Eigen::Vector3d& w) {
  Eigen::Index i;
  w.cwiseAbs().maxCoeff(&i);
  return static_cast<int>(i);
}

std::string label_name(int label) { return std::string(1, "XYZ"[label]); }

std::string perm_name(const Permutation& p) {
  return "[" + std::to_string(p[0] + 1) + "," + std::to_string(p[1] + 1) + "," +
         std::to_string(p[2] + 1) + "]";
}

SignedPermutation with_signs(const Permutation& p, int delta) {
  return SignedPermutation{p, {delta, 1, delta * permutation_parity(p)}};
}

}  // namespace

WeightedInteractionGraph build_graph(const Hamiltonian& h) {
  WeightedInteractionGraph g;
  g.n = h.n_qubits();
  for (const auto& [key, c] : h.one_local()) {
    if (std::abs(c) > kTolerance) {
      throw ModelError(std::string("not an XYZ model: one-local term ") + to_char(key.p) + "@" +
                       std::to_string(key.v));
    }
  }
  for (const auto& [key, c] : h.two_local()) {
    if (std::abs(c) <= kTolerance) continue;
    if (key.pu != key.pv) {
      throw ModelError(std::string("not an XYZ model: coupling ") + to_char(key.pu) + "@" +
                       std::to_string(key.u) + " " + to_char(key.pv) + "@" +
                       std::to_string(key.v));
    }
    auto [it, inserted] = g.edges.try_emplace({key.u, key.v}, Eigen::Vector3d::Zero());
    it->second[axis(key.pu)] = c;
  }
  return g;
}

int weight_rank(const Eigen::Vector3d& w) {
  return static_cast<int>((w.array().abs() > kTolerance).count());
}

bool permutation_admissible(const Permutation& p, const Eigen::Vector3d& w) {
  const Permutation inv = inverse(p);
  const double x = w[inv[0]], y = w[inv[1]];
  return x * x >= y * y - kTolerance;
}

RankComponents rank_components(const WeightedInteractionGraph& g) {
  UnionFind uf(g.n);
  for (const auto& [e, w] : g.edges)
    if (weight_rank(w) > 1) uf.unite(e.first, e.second);

  RankComponents out;
  out.component_of.assign(g.n, -1);
  std::map<std::size_t, int> root_to_id;
  for (Vertex v = 0; v < g.n; ++v) {
    const std::size_t r = uf.find(v);
    auto [it, inserted] = root_to_id.try_emplace(r, static_cast<int>(out.components.size()));
    if (inserted) {
      RankComponent c;
      c.id = it->second;
      out.components.push_back(c);
    }
    out.component_of[v] = it->second;
    out.components[it->second].vertices.push_back(v);
  }
  std::vector<std::vector<Eigen::Vector3d>> internal(out.components.size());
  for (const auto& [e, w] : g.edges)
    if (weight_rank(w) > 1) internal[out.component_of[e.first]].push_back(w);
  for (auto& c : out.components) {
    for (const auto& p : all_permutations()) {
      bool ok = true;
      for (const auto& w : internal[c.id]) {
        if (!permutation_admissible(p, w)) {
          ok = false;
          break;
        }
      }
      if (ok) c.admissible.push_back(p);
    }
  }
  return out;
}

QuotientGraph build_quotient(const WeightedInteractionGraph& g, const RankComponents& comps) {
  QuotientGraph q;
  q.n_vertices = static_cast<int>(comps.components.size());
  for (const auto& [e, w] : g.edges) {
    if (weight_rank(w) != 1) continue;
    int a = comps.component_of[e.first];
    int b = comps.component_of[e.second];
    if (a > b) std::swap(a, b);
    q.edges.push_back({a, b, rank1_label(w), e});
  }
  return q;
}

std::vector<unsigned> incident_labels(const QuotientGraph& q) {
  std::vector<unsigned> mask(q.n_vertices, 0u);
  for (const auto& e : q.edges) {
    mask[e.a] |= 1u << e.label;
    mask[e.b] |= 1u << e.label;
  }
  return mask;
}

std::optional<int> step4_label_check(const QuotientGraph& q) {
  const auto mask = incident_labels(q);
  for (int v = 0; v < q.n_vertices; ++v)
    if (std::popcount(mask[v]) >= 3) return v;
  return std::nullopt;
}

HeterogeneousQuotientGraph build_heterogeneous(const QuotientGraph& q,
                                               const std::vector<int>& cluster) {
  const auto mask = incident_labels(q);
  std::set<int> members(cluster.begin(), cluster.end());
  HeterogeneousQuotientGraph hq;

  std::vector<int> singles;
  for (int v : members) {
    const int count = std::popcount(mask[v]);
    if (count == 1) {
      singles.push_back(v);
    } else if (count == 2) {
      hq.vertices.push_back(v);
      int i = std::countr_zero(mask[v]);
      int j = std::countr_zero(mask[v] & ~(1u << i));
      hq.kind[v] = {i, j};
    } else if (count > 2) {
      throw PreconditionError("heterogeneous graph requires the label check to pass");
    }
  }
  if (hq.vertices.empty()) {
    hq.whole_single_label = true;
    if (!singles.empty()) hq.whole_label = std::countr_zero(mask[singles.front()]);
    return hq;
  }

  // Single-label components.
  std::map<int, std::size_t> single_index;
  for (std::size_t i = 0; i < singles.size(); ++i) single_index[singles[i]] = i;
  UnionFind uf(singles.size());
  std::vector<std::set<int>> boundary_of(singles.size());
  std::set<int> het(hq.vertices.begin(), hq.vertices.end());
  for (const auto& e : q.edges) {
    if (!members.count(e.a)) continue;
    const bool sa = single_index.count(e.a), sb = single_index.count(e.b);
    if (sa && sb) {
      uf.unite(single_index[e.a], single_index[e.b]);
    } else if (sa && het.count(e.b)) {
      boundary_of[single_index[e.a]].insert(e.b);
    } else if (sb && het.count(e.a)) {
      boundary_of[single_index[e.b]].insert(e.a);
    } else if (!sa && !sb) {
      hq.edges.push_back({e.a, e.b, e.label});
    }
  }
  std::map<std::size_t, std::size_t> root_to_slc;
  for (std::size_t i = 0; i < singles.size(); ++i) {
    const std::size_t r = uf.find(i);
    auto [it, inserted] = root_to_slc.try_emplace(r, hq.single_label_components.size());
    if (inserted) {
      SingleLabelComponent c;
      c.label = std::countr_zero(mask[singles[i]]);
      hq.single_label_components.push_back(c);
    }
    auto& c = hq.single_label_components[it->second];
    c.vertices.push_back(singles[i]);
    for (int b : boundary_of[i]) c.boundary.push_back(b);
  }
  for (auto& c : hq.single_label_components) {
    std::sort(c.boundary.begin(), c.boundary.end());
    c.boundary.erase(std::unique(c.boundary.begin(), c.boundary.end()), c.boundary.end());
    for (std::size_t i = 0; i < c.boundary.size(); ++i)
      for (std::size_t j = i; j < c.boundary.size(); ++j)
        hq.edges.push_back({c.boundary[i], c.boundary[j], c.label});
  }
  return hq;
}

HeterogeneousQuotientGraph build_heterogeneous(const QuotientGraph& q) {
  std::vector<int> all;
  const auto mask = incident_labels(q);
  for (int v = 0; v < q.n_vertices; ++v)
    if (mask[v] != 0) all.push_back(v);
  return build_heterogeneous(q, all);
}

IsingInstance step6_ising(const HeterogeneousQuotientGraph& hq) {
  IsingInstance inst;
  inst.n_vertices = static_cast<int>(hq.vertices.size());
  std::map<int, int> index;
  for (std::size_t i = 0; i < hq.vertices.size(); ++i) index[hq.vertices[i]] = static_cast<int>(i);
  const std::pair<int, int> xy{0, 1}, yz{1, 2};
  for (const auto& e : hq.edges) {
    const auto ka = hq.kind.at(e.a), kb = hq.kind.at(e.b);
    const bool flip = e.label == 1 && ((ka == xy && kb == yz) || (ka == yz && kb == xy));
    inst.edges.push_back({index.at(e.a), index.at(e.b), flip ? -1 : 1});
  }
  return inst;
}

std::optional<std::vector<int>> ising_exact_sat(const IsingInstance& inst) {
  const int n = inst.n_vertices;
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const auto& e : inst.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw InputError("Ising edge out of range");
    adj[e.u].push_back({e.v, e.sign});
    if (e.u != e.v) adj[e.v].push_back({e.u, e.sign});
  }
  std::vector<int> spin(n, 0);
  for (int root = 0; root < n; ++root) {
    if (spin[root] != 0) continue;
    spin[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (const auto& [y, s] : adj[x]) {
        if (spin[y] == 0) {
          spin[y] = s * spin[x];
          queue.push_back(y);
        }
      }
    }
  }
  for (const auto& e : inst.edges)
    if (spin[e.u] * spin[e.v] != e.sign) return std::nullopt;
  return spin;
}

Permutation table_permutation(std::pair<int, int> kind, int spin) {
  if (kind == std::pair<int, int>{0, 2}) return spin > 0 ? Permutation{0, 1, 2} : Permutation{2, 1, 0};
  if (kind == std::pair<int, int>{0, 1}) return spin > 0 ? Permutation{0, 2, 1} : Permutation{2, 0, 1};
  if (kind == std::pair<int, int>{1, 2}) return spin > 0 ? Permutation{1, 0, 2} : Permutation{1, 2, 0};
  throw PreconditionError("vertex kind must be two distinct labels in increasing order");
}

std::map<int, Permutation> step8_translate(const std::vector<int>& spins,
                                           const HeterogeneousQuotientGraph& hq) {
  if (spins.size() != hq.vertices.size()) throw PreconditionError("spin count mismatch");
  std::map<int, Permutation> out;
  for (std::size_t i = 0; i < hq.vertices.size(); ++i) {
    const int v = hq.vertices[i];
    out[v] = table_permutation(hq.kind.at(v), spins[i]);
  }
  return out;
}

std::optional<Assignment> step9_extend(const std::map<int, Permutation>& het_assignment,
                                       const HeterogeneousQuotientGraph& hq,
                                       const RankComponents& comps) {
  Assignment a;
  for (const auto& [v, p] : het_assignment) a[v] = {p};
  for (const auto& c : hq.single_label_components) {
    if (c.boundary.empty()) throw PreconditionError("single-label component without boundary");
    const Permutation pu = het_assignment.at(c.boundary.front());
    Permutation other = pu;
    int j = -1, k = -1;
    for (int m = 0; m < 3; ++m) {
      if (m == c.label) continue;
      (j < 0 ? j : k) = m;
    }
    std::swap(other[j], other[k]);
    std::vector<Permutation> pair = {pu, other};
    std::sort(pair.begin(), pair.end());
    for (int v : c.vertices) {
      const auto& adm = comps.components[v].admissible;
      std::vector<Permutation> sigma;
      for (const auto& p : pair)
        if (std::find(adm.begin(), adm.end(), p) != adm.end()) sigma.push_back(p);
      if (sigma.empty()) return std::nullopt;
      a[v] = sigma;
    }
  }
  return a;
}

std::optional<Assignment> step9_edge_case(const HeterogeneousQuotientGraph& hq,
                                          const std::vector<int>& cluster,
                                          const RankComponents& comps, int target) {
  Assignment a;
  for (int v : cluster) {
    std::vector<Permutation> sigma;
    for (const auto& p : comps.components[v].admissible)
      if (p[hq.whole_label] == target) sigma.push_back(p);
    if (sigma.empty()) return std::nullopt;
    a[v] = sigma;
  }
  return a;
}

std::vector<std::pair<Vertex, Vertex>> partition_graph(const WeightedInteractionGraph& g,
                                                       const QuotientGraph& q,
                                                       const RankComponents& comps,
                                                       const std::vector<int>& cluster,
                                                       const Assignment& a) {
  (void)q;
  std::set<int> members(cluster.begin(), cluster.end());
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const auto& [e, w] : g.edges) {
    const int cu = comps.component_of[e.first];
    if (!members.count(cu)) continue;
    const int r = weight_rank(w);
    if (r > 1) {
      kept.push_back(e);
    } else if (r == 1) {
      const Permutation& p = a.at(cu).front();
      if (p[rank1_label(w)] == 0) kept.push_back(e);
    }
  }
  return kept;
}

std::optional<std::map<Vertex, SignedPermutation>> steps12_13_signs(
    const WeightedInteractionGraph& g, const QuotientGraph& q, const RankComponents& comps,
    const std::vector<int>& cluster, const Assignment& a) {
  const auto kept = partition_graph(g, q, comps, cluster, a);

  std::vector<Vertex> vertices;
  for (int c : cluster)
    for (Vertex v : comps.components[c].vertices) vertices.push_back(v);
  std::sort(vertices.begin(), vertices.end());
  std::map<Vertex, std::size_t> local;
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;

  UnionFind uf(vertices.size());
  for (const auto& [u, v] : kept) uf.unite(local[u], local[v]);
  std::map<std::size_t, std::vector<Vertex>> groups;
  for (Vertex v : vertices) groups[uf.find(local[v])].push_back(v);
  std::map<std::size_t, std::vector<std::pair<Vertex, Vertex>>> group_edges;
  for (const auto& e : kept) group_edges[uf.find(local[e.first])].push_back(e);

  std::map<Vertex, SignedPermutation> out;
  for (const auto& [root, members] : groups) {
    std::set<int> quotient_vertices;
    for (Vertex v : members) quotient_vertices.insert(comps.component_of[v]);

    std::vector<std::map<int, Permutation>> options;
    if (quotient_vertices.size() == 1) {
      const int qv = *quotient_vertices.begin();
      for (const auto& p : a.at(qv)) options.push_back({{qv, p}});
    } else {
      std::map<int, Permutation> rep;
      for (int qv : quotient_vertices) rep[qv] = *std::min_element(a.at(qv).begin(), a.at(qv).end());
      options.push_back(rep);
    }

    std::map<Vertex, int> idx;
    for (std::size_t i = 0; i < members.size(); ++i) idx[members[i]] = static_cast<int>(i);
    bool solved = false;
    for (const auto& choice : options) {
      IsingInstance inst;
      inst.n_vertices = static_cast<int>(members.size());
      for (const auto& [u, v] : group_edges[root]) {
        const Permutation iu = inverse(choice.at(comps.component_of[u]));
        const Permutation iv = inverse(choice.at(comps.component_of[v]));
        if (iu[0] != iv[0]) continue;
        const double entry = g.edges.at({u, v})[iu[0]];
        if (std::abs(entry) <= kTolerance) continue;
        inst.edges.push_back({idx[u], idx[v], entry > 0 ? -1 : 1});
      }
      const auto spins = ising_exact_sat(inst);
      if (!spins) continue;
      for (Vertex v : members)
        out[v] = with_signs(choice.at(comps.component_of[v]), (*spins)[idx[v]]);
      solved = true;
      break;
    }
    if (!solved) return std::nullopt;
  }
  return out;
}

bool verify_xyz_solution(const WeightedInteractionGraph& g,
                         const std::vector<SignedPermutation>& solution) {
  if (solution.size() != g.n) return false;
  for (const auto& sp : solution)
    if (sp.determinant() != 1) return false;
  for (const auto& [e, w] : g.edges) {
    EdgeData d;
    d.beta = apply_signed_permutations(w.asDiagonal().toDenseMatrix(), solution[e.first],
                                       solution[e.second]);
    Eigen::Matrix3d off = d.beta;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() > kTolerance) return false;
    if (!is_z_matrix_2q(d)) return false;
  }
  return true;
}

XyzDecision decide_xyz(const Hamiltonian& h) {
  XyzDecision out;
  auto record = [&out](std::string step, std::string action, std::string detail) {
    out.trace.push_back({std::move(step), std::move(action), std::move(detail)});
  };
  auto reject = [&](std::string step, std::string detail) {
    record(step, "reject", std::move(detail));
    out.rejecting_step = std::move(step);
    out.stoquastic = false;
    out.solution.clear();
    return out;
  };

  const WeightedInteractionGraph g = build_graph(h);
  record("1", "build", std::to_string(g.n) + " qubits, " + std::to_string(g.edges.size()) + " edges");
  const RankComponents comps = rank_components(g);
  record("2", "components", std::to_string(comps.components.size()) + " rank>1 components");
  const QuotientGraph q = build_quotient(g, comps);
  record("3", "quotient", std::to_string(q.edges.size()) + " rank-1 edges");

  if (auto bad = step4_label_check(q)) {
    return reject("4", "component of qubit " +
                           std::to_string(comps.components[*bad].vertices.front()) +
                           " touches rank-1 edges labelled X, Y and Z");
  }
  record("4", "pass", "every quotient vertex sees at most two labels");

  // Clusters: connected components of the quotient graph.
  UnionFind quf(static_cast<std::size_t>(q.n_vertices));
  for (const auto& e : q.edges) quf.unite(e.a, e.b);
  std::map<std::size_t, std::vector<int>> cluster_map;
  for (int v = 0; v < q.n_vertices; ++v) cluster_map[quf.find(v)].push_back(v);
  const auto mask = incident_labels(q);

  std::vector<SignedPermutation> solution(g.n);
  for (const auto& [root, cluster] : cluster_map) {
    const std::string tag = "cluster of qubit " +
                            std::to_string(comps.components[cluster.front()].vertices.front());
    std::vector<std::pair<std::string, Assignment>> candidates;

    if (cluster.size() == 1 && mask[cluster.front()] == 0) {
      const auto& adm = comps.components[cluster.front()].admissible;
      if (adm.empty()) return reject("9", tag + ": no admissible permutation");
      candidates.push_back({"A", {{cluster.front(), adm}}});
    } else {
      const HeterogeneousQuotientGraph hq = build_heterogeneous(q, cluster);
      if (hq.whole_single_label) {
        record("5", "edge-case", tag + ": single-label cluster, label " + label_name(hq.whole_label));
        int x = 1;
        for (int target : {0, 2}) {
          const std::string name = "A" + std::to_string(x++);
          if (auto a = step9_edge_case(hq, cluster, comps, target)) {
            record("9", "keep", tag + ": " + name + " sends " + label_name(hq.whole_label) +
                                    " to " + label_name(target));
            candidates.push_back({name, *a});
          } else {
            record("9", "discard", tag + ": " + name + " has an empty permutation set");
          }
        }
        if (candidates.empty()) return reject("9", tag + ": both A1 and A2 discarded");
      } else {
        record("5", "heterogeneous", tag + ": " + std::to_string(hq.vertices.size()) +
                                         " vertices, " + std::to_string(hq.edges.size()) + " edges");
        const IsingInstance inst = step6_ising(hq);
        const auto spins = ising_exact_sat(inst);
        if (!spins) return reject("7", tag + ": Ising instance has no exact solution");
        record("7", "solve", tag + ": Ising instance satisfiable");
        std::vector<int> flipped = *spins;
        for (int& s : flipped) s = -s;
        int x = 1;
        for (const auto& sol : {*spins, flipped}) {
          const std::string name = "A" + std::to_string(x++);
          const auto het = step8_translate(sol, hq);
          bool admissible = true;
          for (const auto& [v, p] : het) {
            const auto& adm = comps.components[v].admissible;
            if (std::find(adm.begin(), adm.end(), p) == adm.end()) admissible = false;
          }
          if (!admissible) {
            record("8", "discard", tag + ": " + name + " uses an inadmissible permutation");
            continue;
          }
          auto ext = step9_extend(het, hq, comps);
          if (!ext) {
            record("9", "discard", tag + ": " + name + " leaves a single-label vertex without permutations");
            continue;
          }
          record("9", "keep", tag + ": " + name);
          candidates.push_back({name, *ext});
        }
        if (candidates.empty()) return reject("9", tag + ": both candidate assignments discarded");
      }
    }

    bool done = false;
    for (const auto& [name, a] : candidates) {
      const auto signs = steps12_13_signs(g, q, comps, cluster, a);
      if (!signs) {
        record("13", "discard", tag + ": " + name + " admits no sign assignment");
        continue;
      }
      std::string perms;
      for (int qv : cluster) {
        if (!perms.empty()) perms += " ";
        perms += perm_name(signs->at(comps.components[qv].vertices.front()).perm);
      }
      record("13", "accept", tag + ": " + name + " permutations " + perms);
      for (const auto& [v, sp] : *signs) solution[v] = sp;
      done = true;
      break;
    }
    if (!done) return reject("14", tag + ": every candidate assignment discarded");
  }

  if (!verify_xyz_solution(g, solution)) {
    throw std::logic_error("internal error: constructed solution fails verification");
  }
  out.stoquastic = true;
  out.solution = std::move(solution);
  record("14", "accept", "solution verified on every edge");
  return out;
}

}  // namespace stoq
