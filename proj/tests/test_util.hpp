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

#include <Eigen/Geometry>
#include <random>
#include <string>

#include "stoq/io.hpp"
#include "stoq/pauli.hpp"

namespace stoq::testing {

inline Rotation3 random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Quaterniond q(g(rng), g(rng), g(rng), g(rng));
  q.normalize();
  return Rotation3::from_matrix(q.toRotationMatrix());
}

inline EdgeData random_edge(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  EdgeData e;
  for (int i = 0; i < 3; ++i) {
    e.s_vec[i] = u(rng);
    e.p_vec[i] = u(rng);
    for (int j = 0; j < 3; ++j) e.beta(i, j) = u(rng);
  }
  return e;
}

// Random EdgeData with no Y-odd coefficient.
inline EdgeData random_real_edge(std::mt19937_64& rng) {
  EdgeData e = random_edge(rng);
  e.s_vec[1] = e.p_vec[1] = 0;
  e.beta(0, 1) = e.beta(1, 0) = e.beta(1, 2) = e.beta(2, 1) = 0;
  return e;
}

// Small-integer EdgeData, so exact zeros and boundary equalities occur.
inline EdgeData random_integer_edge(std::mt19937_64& rng, int k = 1) {
  std::uniform_int_distribution<int> u(-k, k);
  EdgeData e;
  for (int i = 0; i < 3; ++i) {
    e.s_vec[i] = u(rng);
    e.p_vec[i] = u(rng);
    for (int j = 0; j < 3; ++j) e.beta(i, j) = u(rng);
  }
  return e;
}

inline Hamiltonian to_hamiltonian(const EdgeData& e) {
  Hamiltonian h(2);
  for (Pauli a : kPaulis) {
    if (e.s_vec[axis(a)] != 0) h.add(0, a, e.s_vec[axis(a)]);
    if (e.p_vec[axis(a)] != 0) h.add(1, a, e.p_vec[axis(a)]);
    for (Pauli b : kPaulis)
      if (e.beta(axis(a), axis(b)) != 0) h.add(0, a, 1, b, e.beta(axis(a), axis(b)));
  }
  return h;
}

inline EdgeData xyz_edge(double x, double y, double z) {
  EdgeData e;
  e.beta = Eigen::Vector3d(x, y, z).asDiagonal();
  return e;
}

// Expected RXC3 Hamiltonian text without its leading comment block.
inline std::string golden_text() {
  std::string s = read_text_file(STOQ_TEST_DATA "/rxc3_example_expected.ham");
  while (!s.empty() && (s[0] == '#' || s[0] == '\n')) s.erase(0, s.find('\n') + 1);
  return s;
}

}  // namespace stoq::testing
