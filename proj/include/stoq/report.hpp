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

#include <optional>
#include <string>
#include <vector>

#include "stoq/decomposer.hpp"
#include "stoq/io.hpp"
#include "stoq/two_qubit.hpp"
#include "stoq/xyz.hpp"

namespace stoq {

/// Images printed 1-based, e.g. "perm=[3,2,1] signs=[+1,-1,+1]".
std::string format_signed_permutation(const SignedPermutation& sp);
std::string format_matrix(const Eigen::Matrix3d& m);

std::string xyz_report(const XyzDecision& d);

/// {"stoquastic", "rejecting_step", "trace": [{step_id, action, detail}],
///  "solution": [{"qubit", "perm", "signs"}], "coefficients": [{line, text,
///  value}]} with 1-based permutation images.
std::string xyz_trace_json(const XyzDecision& d, const std::vector<CoefficientLiteral>& literals);

std::string two_qubit_report(const EdgeData& e, const TwoQubitDecision& d);

std::string decomposition_report(const ConeResult& r);

/// Header `aX,aZ,aXX,stoquastic,case_id` then one row per sample.
std::string region_scan_csv(const std::vector<ScanRow>& rows);

std::string oracle_report(const std::optional<std::vector<SignedPermutation>>& witness);

}  // namespace stoq
