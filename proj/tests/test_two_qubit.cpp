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

#include <cmath>

#include "numeric_oracle.hpp"
#include "stoq/errors.hpp"
#include "stoq/oracle.hpp"
#include "stoq/two_qubit.hpp"
#include "test_util.hpp"

namespace stoq {
namespace {

using testing::min_violation;
using testing::random_edge;
using testing::random_real_edge;
using testing::random_rotation;
using testing::Target;
using testing::to_hamiltonian;

bool y_free(const EdgeData& e, double tol) {
  return std::abs(e.beta(0, 1)) <= tol && std::abs(e.beta(1, 0)) <= tol &&
         std::abs(e.beta(1, 2)) <= tol && std::abs(e.beta(2, 1)) <= tol &&
         std::abs(e.s_vec[1]) <= tol && std::abs(e.p_vec[1]) <= tol;
}

// The witness must turn the original input into a Z-matrix, checked both on
// coefficients and on the dense 4x4 matrix.
void expect_valid_witness(const EdgeData& e, const TwoQubitDecision& d) {
  ASSERT_TRUE(d.stoquastic);
  ASSERT_TRUE(d.witness.has_value());
  const EdgeData t = apply_rotations(e, d.witness->left, d.witness->right);
  EXPECT_TRUE(is_z_matrix_2q(t));
  EXPECT_TRUE(dense_z_check(to_hamiltonian(e), {d.witness->left, d.witness->right}));
}

TEST(TripleInvariants, HandExample) {
  EdgeData e;
  e.beta = Eigen::Vector3d(1, 2, 3).asDiagonal();
  e.s_vec = Eigen::Vector3d(1, 1, 1);
  const auto inv = triple_invariants(e);
  EXPECT_NEAR(inv.i10, 120.0, 1e-9);
  for (double v : {inv.i11, inv.i15, inv.i16, inv.i17, inv.i18}) EXPECT_EQ(v, 0.0);
  EXPECT_FALSE(is_real_locally(e));
}

TEST(TripleInvariants, VanishOnRealAndOnZeroCoupling) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    for (double v : triple_invariants(random_real_edge(rng)).values()) EXPECT_NEAR(v, 0, 1e-12);
    EdgeData e = random_edge(rng);
    e.beta.setZero();
    for (double v : triple_invariants(e).values()) EXPECT_EQ(v, 0.0);
  }
}

TEST(TripleInvariants, InvariantUnderRotations) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const EdgeData e = random_edge(rng);
    const auto a = triple_invariants(e).values();
    const auto b =
        triple_invariants(apply_rotations(e, random_rotation(rng), random_rotation(rng))).values();
    for (int k = 0; k < 6; ++k) EXPECT_NEAR(a[k], b[k], 1e-9 * (1 + std::abs(a[k])));
  }
}

TEST(TripleInvariants, DegreesMatchScaling) {
  std::mt19937_64 rng(12);
  const EdgeData e = random_edge(rng);
  EdgeData f = e;
  f.beta *= 2;
  f.s_vec *= 2;
  f.p_vec *= 2;
  const auto a = triple_invariants(e).values(), b = triple_invariants(f).values();
  for (int k = 0; k < 6; ++k) {
    EXPECT_NEAR(b[k], std::ldexp(a[k], TripleInvariants::kDegrees[k]), 1e-9 * std::abs(b[k]));
  }
}

TEST(RealLocally, Examples) {
  EdgeData e;
  e.beta(0, 0) = 1;
  e.s_vec[1] = 1;
  EXPECT_TRUE(is_real_locally(e));
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(is_real_locally(random_real_edge(rng)));
  // Scale does not change the verdict.
  EdgeData big = e;
  big.beta *= 1e4;
  big.s_vec *= 1e4;
  EXPECT_TRUE(is_real_locally(big));
}

// Both directions on samples: real inputs are made Y-free by the standard
// form frame; non-real ones keep a residual under numerical minimization.
TEST(RealLocally, BothDirections) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const EdgeData real =
        apply_rotations(random_real_edge(rng), random_rotation(rng), random_rotation(rng));
    ASSERT_TRUE(is_real_locally(real));
    const StandardForm f = standard_form(real);
    EXPECT_TRUE(y_free(apply_rotations(real, f.left_rot, f.right_rot), 1e-9));
  }
  for (int i = 0; i < 100; ++i) {
    const EdgeData e = random_edge(rng);
    if (is_real_locally(e)) continue;
    EXPECT_GT(min_violation(e, Target::kRealness, 10, i), 1e-6);
  }
}

TEST(StandardForm, Invariants) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 300; ++i) {
    const EdgeData e =
        apply_rotations(random_real_edge(rng), random_rotation(rng), random_rotation(rng));
    const StandardForm f = standard_form(e);
    EXPECT_EQ(f.s_vec[1], 0.0);
    EXPECT_EQ(f.p_vec[1], 0.0);
    EXPECT_GE(f.beta_diag[2], f.beta_diag[0]);
    EXPECT_GE(f.beta_diag[0], 0.0);
    if (f.special_case == SpecialCase::kNone) EXPECT_NEAR(f.beta_diag[2], 1.0, 1e-12);
    EXPECT_GT(f.normalization, 0.0);
    const EdgeData t = apply_rotations(e, f.left_rot, f.right_rot);
    const EdgeData g = f.as_edge();
    EXPECT_LT((t.beta - g.beta * f.normalization).norm(), 1e-9);
    EXPECT_LT((t.s_vec - g.s_vec * f.normalization).norm(), 1e-9);
    EXPECT_LT((t.p_vec - g.p_vec * f.normalization).norm(), 1e-9);
  }
}

TEST(StandardForm, SpecialCases) {
  std::mt19937_64 rng(16);
  EdgeData sp = random_real_edge(rng);
  sp.s_vec.setZero();
  sp.p_vec.setZero();
  EXPECT_EQ(standard_form(sp).special_case, SpecialCase::kSAndPZero);
  EdgeData bz = random_real_edge(rng);
  bz.beta.setZero();
  EXPECT_EQ(standard_form(bz).special_case, SpecialCase::kBetaZero);
  EXPECT_THROW(standard_form(random_edge(rng)), PreconditionError);
}

// A lone YY coupling with an X field on one side and a Z field on the other
// is stoquastic: rotating the coupling out of the Y slot gives a witness.
TEST(StandardForm, LoneYyCouplingWithFieldsIsStoquastic) {
  for (double b : {1.0, -1.0, 0.3}) {
    EdgeData e;
    e.beta(1, 1) = b;
    e.s_vec[0] = 1;
    e.p_vec[2] = 1;
    const StandardForm f = standard_form(e);
    EXPECT_NE(f.special_case, SpecialCase::kLoneYyBlocked);
    const auto d = decide_stoquastic_2q(e);
    expect_valid_witness(e, d);
  }
}

TEST(Decide2q, CliffordInsufficientExample) {
  const EdgeData e = clifford_insufficient_family(2, 0.5, 0.2);
  const auto d = decide_stoquastic_2q(e);
  expect_valid_witness(e, d);
  EXPECT_FALSE(brute_force_clifford(to_hamiltonian(e), OracleMode::kZMatrix).has_value());
}

TEST(Decide2q, AlreadyZMatrixGivesIdentity) {
  EdgeData e;
  e.beta(0, 0) = -1;
  e.beta(1, 1) = -1;
  const auto d = decide_stoquastic_2q(e);
  expect_valid_witness(e, d);
  EXPECT_EQ(d.witness->case_id, 0);
  EXPECT_TRUE(d.witness->left.matrix().isIdentity());
  EXPECT_TRUE(d.witness->right.matrix().isIdentity());
}

TEST(Decide2q, NonRealIsRefuted) {
  EdgeData e;
  e.beta = Eigen::Vector3d(1, 2, 3).asDiagonal();
  e.s_vec = Eigen::Vector3d(1, 1, 1);
  const auto d = decide_stoquastic_2q(e);
  EXPECT_FALSE(d.real);
  EXPECT_FALSE(d.stoquastic);
}

// Random real instances against Levenberg-Marquardt over rotation pairs:
// positives carry a verified witness, negatives are never contradicted.
TEST(Decide2q, AgreesWithNumericalSearch) {
  std::mt19937_64 rng(17);
  int pos = 0, neg = 0;
  for (int i = 0; i < 150; ++i) {
    EdgeData base = random_real_edge(rng);
    if (i % 3 == 0) base.beta(0, 2) = base.beta(2, 0) = 0;  // more symmetric shapes
    const EdgeData e = apply_rotations(base, random_rotation(rng), random_rotation(rng));
    const auto d = decide_stoquastic_2q(e);
    if (d.stoquastic) {
      ++pos;
      expect_valid_witness(e, d);
    } else {
      ++neg;
      EXPECT_GT(min_violation(e, Target::kZMatrix, 20, i), 1e-7) << "instance " << i;
    }
  }
  EXPECT_GT(pos, 10);
  EXPECT_GT(neg, 10);
}

TEST(RegionScan, ShapeAndKnownPoints) {
  const auto rows = region_scan({0, 2, 3}, {0, 1, 2}, {0, 1, 2});
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[0].a_x, 0.0);
  EXPECT_EQ(rows[1].a_xx, 1.0);
  EXPECT_EQ(rows[2].a_z, 1.0);
  EXPECT_EQ(rows[4].a_x, 1.0);
  for (const auto& r : rows) {
    if (r.a_x == 0 && r.a_z == 0) EXPECT_TRUE(r.stoquastic);
    EXPECT_EQ(r.stoquastic, r.case_id >= 0);
  }
  const auto two = region_scan({2, 3, 2}, {0.5, 1, 2}, {0.2, 1, 2});
  ASSERT_EQ(two.size(), 8u);
  EXPECT_EQ(two[0].a_x, 2.0);
  EXPECT_EQ(two[0].a_z, 0.5);
  EXPECT_EQ(two[0].a_xx, 0.2);
  EXPECT_TRUE(two[0].stoquastic);
  EXPECT_THROW(region_scan({0, 1, 1}, {0, 1, 2}, {0, 1, 2}), PreconditionError);
}

TEST(RegionScan, ZeroFieldsAreCliffordStoquastic) {
  for (double axx : {0.0, 0.5, 1.0, 3.0}) {
    const EdgeData e = clifford_insufficient_family(0, 0, axx);
    EXPECT_TRUE(brute_force_clifford(to_hamiltonian(e), OracleMode::kZMatrix).has_value());
    EXPECT_TRUE(decide_stoquastic_2q(e).stoquastic);
  }
}

}  // namespace
}  // namespace stoq
