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

#include "stoq/report.hpp"

#include <json.hpp>

namespace stoq {

namespace {

std::string vec(const Eigen::Vector3d& v) {
  return "(" + format_double(v[0]) + ", " + format_double(v[1]) + ", " + format_double(v[2]) + ")";
}

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

}  // namespace

std::string format_signed_permutation(const SignedPermutation& sp) {
  std::string out = "perm=[";
  for (int m = 0; m < 3; ++m) out += (m ? "," : "") + std::to_string(sp.perm[m] + 1);
  out += "] signs=[";
  for (int m = 0; m < 3; ++m) out += (m ? "," : "") + sign_str(sp.signs[m]);
  return out + "]";
}

std::string format_matrix(const Eigen::Matrix3d& m) {
  std::string out;
  for (int r = 0; r < 3; ++r) {
    out += "  [";
    for (int c = 0; c < 3; ++c) {
      // Clean the printout of -0 and rounding dust.
      const double x = std::abs(m(r, c)) < 1e-15 ? 0.0 : m(r, c);
      out += (c ? ", " : "") + format_double(x);
    }
    out += "]\n";
  }
  return out;
}

std::string xyz_report(const XyzDecision& d) {
  std::string out;
  if (d.stoquastic) {
    out += "STOQUASTIC\n";
    for (std::size_t q = 0; q < d.solution.size(); ++q) {
      out += "qubit " + std::to_string(q) + ": " + format_signed_permutation(d.solution[q]) + "\n";
    }
  } else {
    out += "NOT STOQUASTIC\n";
    out += "rejected at " + d.rejecting_step + "\n";
    for (const auto& t : d.trace) {
      if (t.step_id == d.rejecting_step) out += "  " + t.action + ": " + t.detail + "\n";
    }
  }
  return out;
}

std::string xyz_trace_json(const XyzDecision& d, const std::vector<CoefficientLiteral>& literals) {
  nlohmann::ordered_json j;
  j["stoquastic"] = d.stoquastic;
  j["rejecting_step"] = d.rejecting_step;
  j["trace"] = nlohmann::ordered_json::array();
  for (const auto& t : d.trace) {
    j["trace"].push_back({{"step_id", t.step_id}, {"action", t.action}, {"detail", t.detail}});
  }
  j["solution"] = nlohmann::ordered_json::array();
  for (std::size_t q = 0; q < d.solution.size(); ++q) {
    const auto& sp = d.solution[q];
    j["solution"].push_back({{"qubit", q},
                             {"perm", {sp.perm[0] + 1, sp.perm[1] + 1, sp.perm[2] + 1}},
                             {"signs", {sp.signs[0], sp.signs[1], sp.signs[2]}}});
  }
  j["coefficients"] = nlohmann::ordered_json::array();
  for (const auto& l : literals) {
    j["coefficients"].push_back({{"line", l.line}, {"text", l.text}, {"value", l.value}});
  }
  return j.dump(2) + "\n";
}

std::string two_qubit_report(const EdgeData& e, const TwoQubitDecision& d) {
  std::string out;
  const auto inv = triple_invariants(e);
  out += "invariants: i10=" + format_double(inv.i10) + " i11=" + format_double(inv.i11) +
         " i15=" + format_double(inv.i15) + " i16=" + format_double(inv.i16) +
         " i17=" + format_double(inv.i17) + " i18=" + format_double(inv.i18) + "\n";
  if (!d.real) {
    out += "NOT REAL UNDER LOCAL ROTATIONS\n";
    out += "NOT STOQUASTIC\n";
    return out;
  }
  out += "REAL\n";
  if (d.form) {
    const auto& f = *d.form;
    out += "standard form: beta=diag" + vec(f.beta_diag) + " S=" + vec(f.s_vec) +
           " P=" + vec(f.p_vec) + " scale=" + format_double(f.normalization) +
           " special=" + to_string(f.special_case) + "\n";
  }
  if (!d.certificate_note.empty()) out += "note: " + d.certificate_note + "\n";
  if (d.grid_samples > 0) out += "case-1 samples: " + std::to_string(d.grid_samples) + "\n";
  if (d.stoquastic && d.witness) {
    const auto& w = *d.witness;
    out += "STOQUASTIC\n";
    out += "case " + std::to_string(w.case_id) + " theta_L=" + format_double(w.theta_l) +
           " theta_R=" + format_double(w.theta_r) + " gamma_L=" + std::to_string(w.gamma_l) +
           " gamma_R=" + std::to_string(w.gamma_r) + "\n";
    out += "left rotation:\n" + format_matrix(w.left.matrix());
    out += "right rotation:\n" + format_matrix(w.right.matrix());
  } else {
    out += "NOT STOQUASTIC\n";
  }
  return out;
}

std::string decomposition_report(const ConeResult& r) {
  if (!r.accepted) return "NOT IN CONE\n" + r.reason + "\n";
  std::string out = "DECOMPOSED\n";
  for (const auto& t : r.decomposition->terms) {
    out += "edge (" + std::to_string(t.u) + "," + std::to_string(t.v) + "): S=" +
           vec(t.term.s_vec) + " P=" + vec(t.term.p_vec) + "\n" + format_matrix(t.term.beta);
  }
  for (const auto& [v, c] : r.decomposition->leftovers) {
    out += "leftover X@" + std::to_string(v) + " " + format_double(c) + "\n";
  }
  for (const auto& [v, c] : r.decomposition->diagonal_leftovers) {
    out += "leftover Z@" + std::to_string(v) + " " + format_double(c) + "\n";
  }
  return out;
}

std::string region_scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "aX,aZ,aXX,stoquastic,case_id\n";
  for (const auto& r : rows) {
    out += format_double(r.a_x) + "," + format_double(r.a_z) + "," + format_double(r.a_xx) + "," +
           (r.stoquastic ? "1" : "0") + "," + std::to_string(r.case_id) + "\n";
  }
  return out;
}

std::string oracle_report(const std::optional<std::vector<SignedPermutation>>& witness) {
  if (!witness) return "NO ASSIGNMENT\n";
  std::string out = "FOUND\n";
  for (std::size_t q = 0; q < witness->size(); ++q) {
    out += "qubit " + std::to_string(q) + ": " + format_signed_permutation((*witness)[q]) + "\n";
  }
  return out;
}

}  // namespace stoq
