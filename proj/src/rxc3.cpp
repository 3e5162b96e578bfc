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

#include "stoq/rxc3.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "stoq/errors.hpp"
#include "stoq/oracle.hpp"

namespace stoq {

Rxc3Instance::Rxc3Instance(std::size_t n_elements,
                           std::vector<std::array<std::uint32_t, 3>> subsets)
    : n_(n_elements), subsets_(std::move(subsets)) {
  if (n_ == 0 || n_ % 3 != 0) {
    throw InputError("element count must be a positive multiple of 3, got " + std::to_string(n_));
  }
  std::vector<int> count(n_, 0);
  for (std::size_t s = 0; s < subsets_.size(); ++s) {
    const auto& t = subsets_[s];
    for (auto e : t) {
      if (e >= n_) throw InputError("subset " + std::to_string(s) + " has element out of range");
      ++count[e];
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw InputError("subset " + std::to_string(s) + " repeats an element");
    }
  }
  for (std::size_t e = 0; e < n_; ++e) {
    if (count[e] != 3) {
      throw InputError("element " + std::to_string(e) + " occurs in " + std::to_string(count[e]) +
                       " subsets, expected 3");
    }
  }
}

std::vector<Rxc3Term> rxc3_terms(const Rxc3Instance& inst) {
  std::vector<int> used(inst.n_elements(), 0);
  auto draw = [&](std::uint32_t e) {
    if (used[e] >= 3) throw std::logic_error("pool exhausted");
    return kPaulis[used[e]++];
  };
  std::vector<Rxc3Term> out;
  out.reserve(3 * inst.subsets().size());
  for (const auto& [i, j, k] : inst.subsets()) {
    const Pauli si = draw(i), sj = draw(j), sk = draw(k);
    out.push_back({i, si, j, sj});
    out.push_back({j, sj, k, sk});
    out.push_back({i, si, k, sk});
  }
  for (int u : used) {
    if (u != 3) throw std::logic_error("pool not drained");
  }
  return out;
}

Hamiltonian hamiltonian_from_rxc3(const Rxc3Instance& inst) {
  Hamiltonian h(inst.n_elements());
  for (const auto& t : rxc3_terms(inst)) h.add(t.a, t.pa, t.b, t.pb, 1.0);
  return h;
}

namespace {

// Picks the lowest uncovered element and branches over the subsets holding it.
bool cover_rec(const Rxc3Instance& inst, const std::vector<std::vector<std::size_t>>& holders,
               std::vector<bool>& covered, std::vector<std::size_t>& chosen) {
  const auto it = std::find(covered.begin(), covered.end(), false);
  if (it == covered.end()) return true;
  const auto e = static_cast<std::size_t>(it - covered.begin());
  for (std::size_t s : holders[e]) {
    const auto& t = inst.subsets()[s];
    if (covered[t[0]] || covered[t[1]] || covered[t[2]]) continue;
    for (auto x : t) covered[x] = true;
    chosen.push_back(s);
    if (cover_rec(inst, holders, covered, chosen)) return true;
    chosen.pop_back();
    for (auto x : t) covered[x] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_exact_cover(const Rxc3Instance& inst) {
  if (inst.n_elements() > kExactCoverCap) {
    throw CapacityError("exact cover search is capped at " + std::to_string(kExactCoverCap) +
                        " elements");
  }
  std::vector<std::vector<std::size_t>> holders(inst.n_elements());
  for (std::size_t s = 0; s < inst.subsets().size(); ++s) {
    for (auto e : inst.subsets()[s]) holders[e].push_back(s);
  }
  std::vector<bool> covered(inst.n_elements(), false);
  std::vector<std::size_t> chosen;
  if (!cover_rec(inst, holders, covered, chosen)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool exact_cover_exists(const Rxc3Instance& inst) { return find_exact_cover(inst).has_value(); }

bool clifford_realness(const Hamiltonian& h) {
  return brute_force_clifford(h, OracleMode::kRealness, kRealnessSearchCap).has_value();
}

Rxc3Instance random_rxc3(std::size_t n_elements, std::uint64_t seed) {
  if (n_elements == 0 || n_elements % 3 != 0) {
    throw InputError("element count must be a positive multiple of 3");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> pool;
  for (std::uint32_t e = 0; e < n_elements; ++e) pool.insert(pool.end(), 3, e);
  for (;;) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::array<std::uint32_t, 3>> subsets;
    bool ok = true;
    for (std::size_t i = 0; i < pool.size() && ok; i += 3) {
      std::array<std::uint32_t, 3> t = {pool[i], pool[i + 1], pool[i + 2]};
      ok = t[0] != t[1] && t[1] != t[2] && t[0] != t[2];
      subsets.push_back(t);
    }
    if (ok) return Rxc3Instance(n_elements, std::move(subsets));
  }
}

}  // namespace stoq
