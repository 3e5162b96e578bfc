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
#include <optional>
#include <string>
#include <vector>

#include "stoq/pauli.hpp"

namespace stoq {

/// The six scalar triple products of vectors built from (beta, S, P), with
/// M = beta beta^T and N = beta^T beta:
///   i10 = (S, MS, M^2 S)          i11 = (P, NP, N^2 P)
///   i15 = (S, MS, beta P)         i16 = (beta^T S, P, NP)
///   i17 = (beta^T S, N beta^T S, P)  i18 = (S, beta P, M beta P)
struct TripleInvariants {
  double i10 = 0, i11 = 0, i15 = 0, i16 = 0, i17 = 0, i18 = 0;

  std::array<double, 6> values() const { return {i10, i11, i15, i16, i17, i18}; }
  /// Polynomial degree of each entry of values() in the inputs.
  static constexpr std::array<int, 6> kDegrees = {9, 9, 6, 6, 7, 7};
};

TripleInvariants triple_invariants(const EdgeData& e);

/// True iff some pair of local rotations makes every Y-odd coefficient
/// vanish. Decided by the triple products: inputs are rescaled so the
/// largest of |beta|_F, |S|, |P| is one and each invariant is compared with
/// `tol`.
bool is_real_locally(const EdgeData& e, double tol = kTolerance);

enum class SpecialCase {
  kNone,
  kSAndPZero,
  kBetaZero,
  /// beta = diag(0, b, 0) with both X and Z one-local pairs nonzero. Never
  /// produced by standard_form: a rank-1 coupling always admits a frame
  /// whose Y slot lies in its null space, so the form ends up with a_ZZ > 0.
  kLoneYyBlocked,
};

const char* to_string(SpecialCase c);

/// Diagonal real frame: left_rot/right_rot take the input to
/// (diag(beta_diag), s_vec, p_vec) * normalization.
struct StandardForm {
  Eigen::Vector3d beta_diag = Eigen::Vector3d::Zero();
  Eigen::Vector3d s_vec = Eigen::Vector3d::Zero();
  Eigen::Vector3d p_vec = Eigen::Vector3d::Zero();
  Rotation3 left_rot;
  Rotation3 right_rot;
  double normalization = 1.0;
  SpecialCase special_case = SpecialCase::kNone;

  EdgeData as_edge() const;
};

/// Throws PreconditionError when e is not real under local rotations.
StandardForm standard_form(const EdgeData& e);

/// Angles are relative to the standard-form frame (possibly after the
/// X<->Y or Z<->Y variant); `left`/`right` act on the original input and
/// already include the standard-form and variant rotations.
struct TwoQubitWitness {
  double theta_l = 0;
  double theta_r = 0;
  int gamma_l = 1;
  int gamma_r = 1;
  /// 0: no inequality case was needed (already a Z-matrix or special case);
  /// 1-4: the case of the inequality system that produced the angles.
  int case_id = 0;
  Rotation3 left;
  Rotation3 right;
};

struct TwoQubitDecision {
  bool real = false;
  bool stoquastic = false;
  std::optional<StandardForm> form;
  std::optional<TwoQubitWitness> witness;
  std::string certificate_note;
  /// Number of theta_R samples examined for case 1 (0 if it never ran).
  int grid_samples = 0;
};

/// Grid resolution of the case-1 search: base samples of theta_R over
/// (-pi/2, pi/2) and the subdivision used by each refinement round.
struct Case1Grid {
  int base_samples = 4096;
  int refine_factor = 16;
  int refine_rounds = 2;
};

/// Negative answers are relative to the case-1 grid.
TwoQubitDecision decide_stoquastic_2q(const EdgeData& e, const Case1Grid& grid = {});

/// aZ (Z0 + Z1) - aX (X0 + X1) + aXX X0 X1 + Z0 Z1.
EdgeData clifford_insufficient_family(double a_x, double a_z, double a_xx);

struct ScanAxis {
  double lo = 0;
  double hi = 0;
  int steps = 2;
  /// Inclusive linspace value i of steps.
  double at(int i) const;
};

struct ScanRow {
  double a_x, a_z, a_xx;
  bool stoquastic;
  int case_id;  // -1 when refuted
};

/// Rows in grid order: a_x outermost, then a_z, then a_xx.
std::vector<ScanRow> region_scan(const ScanAxis& ax, const ScanAxis& az, const ScanAxis& axx,
                                 const Case1Grid& grid = {});

}  // namespace stoq
