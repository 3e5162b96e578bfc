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
#include <numeric>
#include <random>

#include "stoq/errors.hpp"
#include "stoq/io.hpp"
#include "stoq/rxc3.hpp"
#include "test_util.hpp"

namespace stoq {
namespace {

Rxc3Instance example_instance() {
  return Rxc3Instance(6, {{0, 1, 2}, {2, 3, 4}, {1, 2, 4}, {0, 3, 5}, {1, 4, 5}, {0, 3, 5}});
}

Rxc3Instance no_cover_instance() {
  return Rxc3Instance(6, {{0, 1, 4}, {3, 2, 1}, {4, 3, 2}, {1, 4, 5}, {0, 2, 5}, {3, 0, 5}});
}

TEST(Rxc3Instance, Validation) {
  EXPECT_THROW(Rxc3Instance(4, {}), InputError);
  EXPECT_THROW(Rxc3Instance(3, {{0, 1, 2}, {0, 1, 2}}), InputError);
  EXPECT_THROW(Rxc3Instance(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 1}}), InputError);
  EXPECT_THROW(Rxc3Instance(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 3}}), InputError);
  EXPECT_NO_THROW(Rxc3Instance(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}));
}

TEST(Rxc3Reduction, ExampleIsByteExact) {
  const auto inst = example_instance();
  const std::string text = serialize_rxc3_hamiltonian(6, rxc3_terms(inst));
  EXPECT_EQ(text, testing::golden_text());
  const Hamiltonian h = hamiltonian_from_rxc3(inst);
  EXPECT_EQ(h.two_local().size(), 18u);
  EXPECT_TRUE(h.one_local().empty());
  EXPECT_EQ(h, parse_hamiltonian(text).h);
}

TEST(Rxc3Reduction, PoolsDrainInOrder) {
  std::mt19937_64 rng(50);
  for (int t = 0; t < 50; ++t) {
    const auto inst = random_rxc3(9, rng());
    std::vector<std::vector<Pauli>> drawn(9);
    const auto terms = rxc3_terms(inst);
    ASSERT_EQ(terms.size(), 3 * inst.subsets().size());
    // The first and third term of each triple expose sigma_i, sigma_j, sigma_k.
    for (std::size_t s = 0; s < inst.subsets().size(); ++s) {
      const auto& a = terms[3 * s];
      const auto& c = terms[3 * s + 2];
      drawn[a.a].push_back(a.pa);
      drawn[a.b].push_back(a.pb);
      drawn[c.b].push_back(c.pb);
    }
    for (const auto& d : drawn)
      EXPECT_EQ(d, (std::vector<Pauli>{Pauli::X, Pauli::Y, Pauli::Z}));
  }
}

TEST(Rxc3Reduction, TripleDuplicate) {
  const Rxc3Instance inst(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  const Hamiltonian h = hamiltonian_from_rxc3(inst);
  for (Pauli p : kPaulis) {
    EXPECT_EQ(h.coefficient(0, p, 1, p), 1.0);
    EXPECT_EQ(h.coefficient(1, p, 2, p), 1.0);
    EXPECT_EQ(h.coefficient(0, p, 2, p), 1.0);
  }
  EXPECT_EQ(h.two_local().size(), 9u);
  EXPECT_TRUE(exact_cover_exists(inst));
  EXPECT_TRUE(clifford_realness(h));
}

TEST(Rxc3Reduction, RelabellingGivesIsomorphicHamiltonian) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 20; ++t) {
    const auto inst = random_rxc3(9, rng());
    std::vector<std::uint32_t> sigma(9);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    auto subsets = inst.subsets();
    for (auto& s : subsets)
      for (auto& e : s) e = sigma[e];
    const Hamiltonian relabelled = hamiltonian_from_rxc3(Rxc3Instance(9, subsets));
    Hamiltonian expected(9);
    const Hamiltonian original = hamiltonian_from_rxc3(inst);
    for (const auto& [k, c] : original.two_local())
      expected.add(sigma[k.u], k.pu, sigma[k.v], k.pv, c);
    EXPECT_EQ(relabelled, expected);
  }
}

TEST(ExactCover, Examples) {
  const auto cover = find_exact_cover(example_instance());
  ASSERT_TRUE(cover);
  EXPECT_EQ(*cover, (std::vector<std::size_t>{2, 3}));
  EXPECT_FALSE(exact_cover_exists(no_cover_instance()));
  std::vector<std::array<std::uint32_t, 3>> big;
  for (std::uint32_t i = 0; i < 27; i += 3)
    for (int r = 0; r < 3; ++r) big.push_back({i, i + 1, i + 2});
  EXPECT_THROW(exact_cover_exists(Rxc3Instance(27, big)), CapacityError);
}

TEST(CliffordRealness, Examples) {
  Hamiltonian yz(2);
  yz.add(0, Pauli::Y, 1, Pauli::Z, 1);
  EXPECT_TRUE(clifford_realness(yz));
  Hamiltonian dense(2);
  dense.add(0, Pauli::X, 1, Pauli::X, 1).add(0, Pauli::Y, 1, Pauli::Y, 1);
  dense.add(0, Pauli::Z, 1, Pauli::Z, 1).add(0, Pauli::X, 1, Pauli::Y, 1);
  dense.add(0, Pauli::Y, 1, Pauli::Z, 1).add(0, Pauli::Z, 1, Pauli::X, 1);
  // Direct count over the 36 axis-permutation pairs.
  int real_pairs = 0;
  for (const auto& p : all_permutations())
    for (const auto& q : all_permutations()) {
      bool ok = true;
      for (const auto& [k, c] : dense.two_local())
        ok = ok && ((p[axis(k.pu)] == 1) == (q[axis(k.pv)] == 1));
      real_pairs += ok;
    }
  EXPECT_EQ(clifford_realness(dense), real_pairs > 0);
  EXPECT_FALSE(clifford_realness(dense));
  EXPECT_TRUE(clifford_realness(hamiltonian_from_rxc3(example_instance())));
  EXPECT_FALSE(clifford_realness(hamiltonian_from_rxc3(no_cover_instance())));
}

TEST(Rxc3Reduction, CoverIffRealness) {
  int covers = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = random_rxc3(6, seed);
    const bool c = exact_cover_exists(inst);
    covers += c;
    EXPECT_EQ(c, clifford_realness(hamiltonian_from_rxc3(inst))) << "seed " << seed;
  }
  EXPECT_GT(covers, 0);
  EXPECT_LT(covers, 60);
}

TEST(RandomRxc3, Deterministic) {
  EXPECT_EQ(random_rxc3(12, 4).subsets(), random_rxc3(12, 4).subsets());
  EXPECT_THROW(random_rxc3(5, 1), InputError);
}

}  // namespace
}  // namespace stoq
