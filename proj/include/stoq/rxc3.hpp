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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "stoq/pauli.hpp"

namespace stoq {

inline constexpr std::size_t kExactCoverCap = 24;

/// Restricted exact cover by three-sets: 3N elements, each occurring in
/// exactly three of the listed subsets.
class Rxc3Instance {
 public:
  /// Throws InputError when the element count is not a positive multiple of
  /// 3, a subset repeats an element or is out of range, or some element does
  /// not occur exactly three times.
  Rxc3Instance(std::size_t n_elements, std::vector<std::array<std::uint32_t, 3>> subsets);

  std::size_t n_elements() const { return n_; }
  const std::vector<std::array<std::uint32_t, 3>>& subsets() const { return subsets_; }

 private:
  std::size_t n_;
  std::vector<std::array<std::uint32_t, 3>> subsets_;
};

/// One coupling sigma_a sigma_b in construction order.
struct Rxc3Term {
  Vertex a = 0;
  Pauli pa = Pauli::X;
  Vertex b = 0;
  Pauli pb = Pauli::X;
};

/// Terms in construction order: subsets in input order, pools drained X, Y,
/// Z, and each subset (i, j, k) contributing s_i s_j, s_j s_k, s_i s_k.
std::vector<Rxc3Term> rxc3_terms(const Rxc3Instance& inst);

/// Sum of rxc3_terms with unit coefficients on one qubit per element.
Hamiltonian hamiltonian_from_rxc3(const Rxc3Instance& inst);

/// Exhaustive backtracking. Throws CapacityError above kExactCoverCap
/// elements.
bool exact_cover_exists(const Rxc3Instance& inst);

/// Indices of the subsets in the first cover found, if any.
std::optional<std::vector<std::size_t>> find_exact_cover(const Rxc3Instance& inst);

/// Whether some per-qubit axis permutation leaves every term with an even
/// number of Y factors. Throws CapacityError above 12 qubits.
bool clifford_realness(const Hamiltonian& h);

/// Random instance with `n_elements` elements: a shuffled multiset holding
/// every element three times, cut into consecutive triples, redrawn until no
/// triple repeats an element.
Rxc3Instance random_rxc3(std::size_t n_elements, std::uint64_t seed);

}  // namespace stoq
