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

#include "stoq/two_qubit.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "stoq/errors.hpp"

namespace stoq {

namespace {

using Eigen::Matrix3d;
using Eigen::Vector3d;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double triple(const Vector3d& a, const Vector3d& b, const Vector3d& c) {
  return a.dot(b.cross(c));
}

double input_scale(const EdgeData& e) {
  return std::max({e.beta.norm(), e.s_vec.norm(), e.p_vec.norm()});
}

// ---------------------------------------------------------------------------
// Frame bookkeeping. Rows of `left`/`right` are the new basis vectors, so the
// frame is (left * beta * right^T, left * S, right * P) of the input.

struct Frame {
  Vector3d d = Vector3d::Zero();
  Vector3d s = Vector3d::Zero();
  Vector3d p = Vector3d::Zero();
  Matrix3d left = Matrix3d::Identity();
  Matrix3d right = Matrix3d::Identity();
};

// Apply (G, H) to the frame; G diag H^T must stay diagonal.
void transform(Frame& f, const Matrix3d& g, const Matrix3d& h) {
  Matrix3d b = g * f.d.asDiagonal() * h.transpose();
  f.d = b.diagonal();
  f.s = g * f.s;
  f.p = h * f.p;
  f.left = g * f.left;
  f.right = h * f.right;
}

const Matrix3d& swap_xz() {
  static const Matrix3d k = (Matrix3d() << 0, 0, 1, 0, -1, 0, 1, 0, 0).finished();
  return k;
}
const Matrix3d& swap_xy() {
  static const Matrix3d k = (Matrix3d() << 0, 1, 0, 1, 0, 0, 0, 0, -1).finished();
  return k;
}
const Matrix3d& swap_zy() {
  static const Matrix3d k = (Matrix3d() << 1, 0, 0, 0, 0, 1, 0, -1, 0).finished();
  return k;
}

bool lex_less(const Frame& a, const Frame& b) {
  std::array<double, 6> x{a.s[0], a.s[1], a.s[2], a.p[0], a.p[1], a.p[2]};
  std::array<double, 6> y{b.s[0], b.s[1], b.s[2], b.p[0], b.p[1], b.p[2]};
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// Bring the diagonal to c >= a >= 0, breaking a == c by the smaller (S, P).
void canonicalize(Frame& f, double tol) {
  const Matrix3d id = Matrix3d::Identity();
  if (f.d[0] < 0) transform(f, Vector3d(-1, -1, 1).asDiagonal().toDenseMatrix(), id);
  if (f.d[2] < 0) transform(f, Vector3d(1, -1, -1).asDiagonal().toDenseMatrix(), id);
  Frame swapped = f;
  transform(swapped, swap_xz(), swap_xz());
  if (f.d[0] > f.d[2] + tol) {
    f = swapped;
  } else if (std::abs(f.d[0] - f.d[2]) <= tol && lex_less(swapped, f)) {
    f = swapped;
  }
}

// ---------------------------------------------------------------------------
// Choice of the Y slot.

struct PerpResult {
  Eigen::VectorXd x;
  double residual;
};

// Unit x in R^d minimizing |C x| (C is k x d). Among exact null directions,
// prefer the one whose image under `ambient` is closest to the Y, X, then Z
// axis.
PerpResult perp_unit(const Eigen::MatrixXd& c, const Eigen::MatrixXd& ambient, double tol) {
  const Eigen::Index d = ambient.cols();
  Eigen::MatrixXd null_basis;
  double residual = 0.0;
  if (c.rows() == 0 || c.norm() <= tol) {
    null_basis = Eigen::MatrixXd::Identity(d, d);
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(c, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    std::vector<Eigen::Index> cols;
    for (Eigen::Index j = 0; j < d; ++j) {
      const double s = j < sv.size() ? sv[j] : 0.0;
      if (s <= tol) cols.push_back(j);
    }
    if (cols.empty()) {
      return {svd.matrixV().col(d - 1), sv[d - 1]};
    }
    null_basis.resize(d, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) {
      null_basis.col(static_cast<Eigen::Index>(i)) = svd.matrixV().col(cols[i]);
    }
    residual = (c * null_basis.col(0)).norm();
  }
  const Eigen::MatrixXd q = ambient * null_basis;
  for (int axis_id : {1, 0, 2}) {
    Eigen::VectorXd coeffs = q.row(axis_id).transpose();
    if (coeffs.norm() > 1e-6) {
      Eigen::VectorXd x = null_basis * coeffs.normalized();
      return {x, c.rows() ? (c * x).norm() : 0.0};
    }
  }
  return {null_basis.col(0), residual};
}

struct SlotChoice {
  Vector3d u, v;
  double residual;
};

Matrix3d complete_basis(const Vector3d& u) {
  // Columns 0, 1 span u's orthogonal complement.
  Eigen::Index k;
  u.cwiseAbs().minCoeff(&k);
  Vector3d t = Vector3d::Unit(k);
  Vector3d a1 = (t - t.dot(u) * u).normalized();
  Vector3d a2 = u.cross(a1);
  Matrix3d out;
  out.col(0) = a1;
  out.col(1) = a2;
  out.col(2) = u;
  return out;
}

SlotChoice choose_y_slot(const EdgeData& e, double tol) {
  Eigen::JacobiSVD<Matrix3d> svd(e.beta, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector3d sv = svd.singularValues();
  const Matrix3d& uu = svd.matrixU();
  const Matrix3d& vv = svd.matrixV();

  // Clusters of equal singular values; the null cluster first, then the
  // nonzero clusters by increasing value.
  std::vector<std::vector<int>> clusters;
  std::vector<bool> is_null;
  {
    std::vector<int> null_idx;
    for (int i = 0; i < 3; ++i)
      if (sv[i] <= tol) null_idx.push_back(i);
    if (!null_idx.empty()) {
      clusters.push_back(null_idx);
      is_null.push_back(true);
    }
    std::vector<std::vector<int>> nonzero;
    for (int i = 2; i >= 0; --i) {
      if (sv[i] <= tol) continue;
      if (!nonzero.empty() && std::abs(sv[nonzero.back().back()] - sv[i]) <= tol) {
        nonzero.back().push_back(i);
      } else {
        nonzero.push_back({i});
      }
    }
    for (auto& c : nonzero) {
      clusters.push_back(c);
      is_null.push_back(false);
    }
  }

  std::optional<SlotChoice> best;
  for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
    const auto& idx = clusters[ci];
    const auto d = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd uc(3, d), vc(3, d);
    for (Eigen::Index j = 0; j < d; ++j) {
      uc.col(j) = uu.col(idx[j]);
      vc.col(j) = vv.col(idx[j]);
    }
    SlotChoice cand;
    if (is_null[ci]) {
      Eigen::MatrixXd cl = (uc.transpose() * e.s_vec).transpose();
      Eigen::MatrixXd cr = (vc.transpose() * e.p_vec).transpose();
      PerpResult l = perp_unit(cl, uc, tol);
      PerpResult r = perp_unit(cr, vc, tol);
      cand = {uc * l.x, vc * r.x, std::max(l.residual, r.residual)};
    } else {
      Eigen::MatrixXd c(2, d);
      c.row(0) = (uc.transpose() * e.s_vec).transpose();
      c.row(1) = (vc.transpose() * e.p_vec).transpose();
      PerpResult x = perp_unit(c, uc, tol);
      cand = {uc * x.x, vc * x.x, x.residual};
    }
    cand.u.normalize();
    cand.v.normalize();
    if (cand.residual <= tol) return cand;
    if (!best || cand.residual < best->residual) best = cand;
  }
  return *best;
}

Frame diagonal_frame(const EdgeData& e, double tol) {
  const SlotChoice slot = choose_y_slot(e, tol);
  const Matrix3d a = complete_basis(slot.u);
  const Matrix3d b = complete_basis(slot.v);
  const Eigen::Matrix2d m =
      a.leftCols<2>().transpose() * e.beta * b.leftCols<2>();
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector3d l_big = a.leftCols<2>() * svd.matrixU().col(0);
  const Vector3d l_small = a.leftCols<2>() * svd.matrixU().col(1);
  const Vector3d r_big = b.leftCols<2>() * svd.matrixV().col(0);
  const Vector3d r_small = b.leftCols<2>() * svd.matrixV().col(1);

  Matrix3d ol, orr;
  ol.row(0) = l_small;
  ol.row(1) = slot.u;
  ol.row(2) = l_big;
  orr.row(0) = r_small;
  orr.row(1) = slot.v;
  orr.row(2) = r_big;
  if (ol.determinant() < 0) ol.row(1) *= -1.0;
  if (orr.determinant() < 0) orr.row(1) *= -1.0;

  Frame f;
  f.left = ol;
  f.right = orr;
  f.d = (ol * e.beta * orr.transpose()).diagonal();
  f.s = ol * e.s_vec;
  f.p = orr * e.p_vec;
  f.s[1] = 0.0;
  f.p[1] = 0.0;
  return f;
}

// ---------------------------------------------------------------------------
// Interval sets on the real line.

using Interval = std::pair<double, double>;
using IntervalSet = std::vector<Interval>;

const IntervalSet kAll = {{-kInf, kInf}};

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  IntervalSet out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].first, b[j].first);
    const double hi = std::min(a[i].second, b[j].second);
    if (lo <= hi) out.push_back({lo, hi});
    if (a[i].second < b[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

// {x : m x + q <= 0}
IntervalSet lin_le0(double m, double q) {
  const double slack = 1e-12 * (std::abs(m) + std::abs(q));
  if (std::abs(m) <= 1e-14 * (std::abs(q) + 1.0)) {
    return q <= slack ? kAll : IntervalSet{};
  }
  const double root = -q / m;
  if (m > 0) return {{-kInf, root}};
  return {{root, kInf}};
}

// {x : A x^2 + B x + C >= 0}, with a small relative slack so that tangent
// roots survive rounding.
IntervalSet quad_ge0(double a, double b, double c) {
  const double mag = std::abs(a) + std::abs(b) + std::abs(c);
  if (mag == 0.0) return kAll;
  if (std::abs(a) <= 1e-14 * mag) {
    return lin_le0(-b, -c);
  }
  const double disc = b * b - 4 * a * c;
  const double disc_slack = 1e-12 * (b * b + 4 * std::abs(a * c));
  if (disc < 0) {
    if (a > 0) return kAll;
    if (disc >= -disc_slack) {
      const double x = -b / (2 * a);
      return {{x, x}};
    }
    return {};
  }
  const double sq = std::sqrt(disc);
  const double qq = -0.5 * (b + (b >= 0 ? sq : -sq));
  double r1 = qq / a;
  double r2 = qq != 0.0 ? c / qq : r1;
  if (r1 > r2) std::swap(r1, r2);
  if (a > 0) return {{-kInf, r1}, {r2, kInf}};
  return {{r1, r2}};
}

std::vector<double> candidates(const IntervalSet& set) {
  std::vector<double> out;
  for (const auto& [lo, hi] : set) {
    const bool flo = std::isfinite(lo), fhi = std::isfinite(hi);
    if (flo && fhi) {
      out.push_back((lo + hi) / 2);
      out.push_back(lo);
      out.push_back(hi);
    } else if (fhi) {
      out.push_back(hi - 1.0);
      out.push_back(hi);
    } else if (flo) {
      out.push_back(lo + 1.0);
      out.push_back(lo);
    } else {
      out.push_back(0.0);
      out.push_back(1.0);
      out.push_back(-1.0);
    }
  }
  return out;
}

double angle_from_tan(double x, int delta) {
  return std::atan(x) + (delta < 0 ? kPi : 0.0);
}

// ---------------------------------------------------------------------------
// Search over the realness-preserving rotations of a frame.

struct Search {
  const EdgeData& original;
  const Frame& frame;
  std::optional<TwoQubitWitness> found;

  bool try_angles(double theta_l, double theta_r, int case_id) {
    const Rotation3 ol = Rotation3::about_axis(Pauli::Y, theta_l);
    const Rotation3 orr = Rotation3::about_axis(Pauli::Y, theta_r);
    const Matrix3d wl = ol.matrix() * frame.left;
    const Matrix3d wr = orr.matrix() * frame.right;
    EdgeData t;
    t.beta = wl * original.beta * wr.transpose();
    t.s_vec = wl * original.s_vec;
    t.p_vec = wr * original.p_vec;
    if (!is_z_matrix_2q(t)) return false;
    TwoQubitWitness w;
    w.theta_l = theta_l;
    w.theta_r = theta_r;
    w.case_id = case_id;
    w.left = Rotation3::from_matrix(wl);
    w.right = Rotation3::from_matrix(wr);
    found = w;
    return true;
  }
};

bool run_case4(Search& s) {
  for (int dl : {1, -1})
    for (int dr : {1, -1})
      if (s.try_angles(dl * kPi / 2, dr * kPi / 2, 4)) return true;
  return false;
}

bool run_case2(Search& s) {
  const auto& f = s.frame;
  const double a = f.d[0], b = f.d[1], c = f.d[2];
  const double s3 = f.s[2], p1 = f.p[0], p3 = f.p[2];
  for (int dl : {1, -1}) {
    if (dl * s3 > kTolerance) continue;
    for (int dr : {1, -1}) {
      IntervalSet set = lin_le0(dl * dr * c, 0.0);
      set = intersect(set, quad_ge0(c * c - b * b, 0.0, -b * b));
      set = intersect(set, lin_le0(dr * p3, dr * p1));
      set = intersect(set, quad_ge0(p3 * p3, 2 * p1 * p3, p1 * p1 - a * a));
      set = intersect(set, quad_ge0(s3 * s3, 0.0, s3 * s3 - c * c));
      for (double x2 : candidates(set))
        if (s.try_angles(dl * kPi / 2, angle_from_tan(x2, dr), 2)) return true;
    }
  }
  return false;
}

bool run_case3(Search& s) {
  const auto& f = s.frame;
  const double a = f.d[0], b = f.d[1], c = f.d[2];
  const double s1 = f.s[0], s3 = f.s[2], p3 = f.p[2];
  for (int dr : {1, -1}) {
    if (dr * p3 > kTolerance) continue;
    for (int dl : {1, -1}) {
      IntervalSet set = lin_le0(dl * dr * c, 0.0);
      set = intersect(set, quad_ge0(c * c - b * b, 0.0, -b * b));
      set = intersect(set, quad_ge0(p3 * p3, 0.0, p3 * p3 - c * c));
      set = intersect(set, lin_le0(dl * s3, dl * s1));
      set = intersect(set, quad_ge0(s3 * s3, 2 * s1 * s3, s1 * s1 - a * a));
      for (double x1 : candidates(set))
        if (s.try_angles(angle_from_tan(x1, dl), dr * kPi / 2, 3)) return true;
    }
  }
  return false;
}

// Feasible x1 set of case 1 at fixed x2 and signs; `sig` collects the sign
// pattern used to steer refinement.
IntervalSet case1_set(const Frame& f, double x2, int dl, int dr, std::uint64_t* sig) {
  const double a = f.d[0], b = f.d[1], c = f.d[2];
  const double s1 = f.s[0], s3 = f.s[2], p1 = f.p[0], p3 = f.p[2];
  const double w = 1 + x2 * x2;
  const double k = p1 + p3 * x2;
  auto note = [sig](bool bit) {
    if (sig) *sig = (*sig << 1) | (bit ? 1u : 0u);
  };
  const double qa[3] = {c * c * x2 * x2 - b * b * w, k * k - a * a, s3 * s3 * w - c * c};
  const double qb[3] = {2 * a * c * x2, 2 * a * c * x2, 2 * s1 * s3 * w + 2 * a * c * x2};
  const double qc[3] = {a * a - b * b * w, k * k - c * c * x2 * x2, s1 * s1 * w - a * a * x2 * x2};
  for (int i = 0; i < 3; ++i) {
    note(qa[i] > 0);
    note(qb[i] * qb[i] - 4 * qa[i] * qc[i] > 0);
  }
  note(dr * k > 0);
  IntervalSet set;
  if (dr * k <= kTolerance) {
    set = lin_le0(dl * dr * c * x2, dl * dr * a);
    set = intersect(set, lin_le0(dl * s3, dl * s1));
    for (int i = 0; i < 3 && !set.empty(); ++i) set = intersect(set, quad_ge0(qa[i], qb[i], qc[i]));
  }
  note(!set.empty());
  return set;
}

bool try_case1_sample(Search& s, double theta, std::uint64_t* sig) {
  const double x2 = std::tan(theta);
  bool hit = false;
  for (int dr : {1, -1}) {
    for (int dl : {1, -1}) {
      IntervalSet set = case1_set(s.frame, x2, dl, dr, sig);
      if (hit) continue;
      for (double x1 : candidates(set)) {
        if (s.try_angles(angle_from_tan(x1, dl), angle_from_tan(x2, dr), 1)) {
          hit = true;
          break;
        }
      }
    }
  }
  return hit;
}

bool run_case1(Search& s, const Case1Grid& grid, int* samples) {
  const int n = std::max(grid.base_samples, 2);
  std::vector<double> thetas;
  std::vector<std::uint64_t> sigs;
  for (int k = 1; k < n; ++k) {
    const double theta = -kPi / 2 + k * kPi / n;
    std::uint64_t sig = 0;
    ++*samples;
    if (try_case1_sample(s, theta, &sig)) return true;
    thetas.push_back(theta);
    sigs.push_back(sig);
  }
  for (int round = 0; round < grid.refine_rounds; ++round) {
    std::vector<double> next_thetas;
    std::vector<std::uint64_t> next_sigs;
    for (std::size_t i = 0; i + 1 < thetas.size(); ++i) {
      if (sigs[i] == sigs[i + 1]) continue;
      const double step = (thetas[i + 1] - thetas[i]) / grid.refine_factor;
      next_thetas.push_back(thetas[i]);
      next_sigs.push_back(sigs[i]);
      for (int j = 1; j < grid.refine_factor; ++j) {
        const double theta = thetas[i] + j * step;
        std::uint64_t sig = 0;
        ++*samples;
        if (try_case1_sample(s, theta, &sig)) return true;
        next_thetas.push_back(theta);
        next_sigs.push_back(sig);
      }
      next_thetas.push_back(thetas[i + 1]);
      next_sigs.push_back(sigs[i + 1]);
    }
    if (next_thetas.empty()) break;
    thetas = std::move(next_thetas);
    sigs = std::move(next_sigs);
  }
  return false;
}

Rotation3 rotation_to_minus_x(const Vector3d& v) {
  if (v.norm() <= kTolerance) return Rotation3();
  const Eigen::Quaterniond q = Eigen::Quaterniond::FromTwoVectors(v, -Vector3d::UnitX());
  return Rotation3::from_matrix(q.toRotationMatrix());
}

}  // namespace

// ---------------------------------------------------------------------------

TripleInvariants triple_invariants(const EdgeData& e) {
  const Matrix3d& b = e.beta;
  const Matrix3d m = b * b.transpose();
  const Matrix3d n = b.transpose() * b;
  const Vector3d& s = e.s_vec;
  const Vector3d& p = e.p_vec;
  const Vector3d bts = b.transpose() * s;
  const Vector3d bp = b * p;
  TripleInvariants t;
  t.i10 = triple(s, m * s, m * m * s);
  t.i11 = triple(p, n * p, n * n * p);
  t.i15 = triple(s, m * s, bp);
  t.i16 = triple(bts, p, n * p);
  t.i17 = triple(bts, n * bts, p);
  t.i18 = triple(s, bp, m * bp);
  return t;
}

bool is_real_locally(const EdgeData& e, double tol) {
  const double scale = input_scale(e);
  if (scale == 0.0) return true;
  EdgeData unit;
  unit.beta = e.beta / scale;
  unit.s_vec = e.s_vec / scale;
  unit.p_vec = e.p_vec / scale;
  for (double v : triple_invariants(unit).values())
    if (std::abs(v) > tol) return false;
  return true;
}

const char* to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::kNone:
      return "none";
    case SpecialCase::kSAndPZero:
      return "s_and_p_zero";
    case SpecialCase::kBetaZero:
      return "beta_zero";
    case SpecialCase::kLoneYyBlocked:
      return "lone_yy_blocked";
  }
  return "?";
}

EdgeData StandardForm::as_edge() const {
  EdgeData e;
  e.beta = beta_diag.asDiagonal();
  e.s_vec = s_vec;
  e.p_vec = p_vec;
  return e;
}

StandardForm standard_form(const EdgeData& e) {
  if (!is_real_locally(e)) {
    throw PreconditionError("standard form requires a Hamiltonian that is real under local rotations");
  }
  const double tol = kTolerance * std::max(1.0, input_scale(e));
  Frame f = diagonal_frame(e, tol);
  canonicalize(f, tol);

  StandardForm out;
  if (e.s_vec.norm() <= tol && e.p_vec.norm() <= tol) {
    out.special_case = SpecialCase::kSAndPZero;
  } else if (e.beta.norm() <= tol) {
    out.special_case = SpecialCase::kBetaZero;
  } else if (f.d[2] > tol) {
    out.normalization = f.d[2];
  }
  out.beta_diag = f.d / out.normalization;
  out.s_vec = f.s / out.normalization;
  out.p_vec = f.p / out.normalization;
  out.left_rot = Rotation3::from_matrix(f.left);
  out.right_rot = Rotation3::from_matrix(f.right);
  return out;
}

TwoQubitDecision decide_stoquastic_2q(const EdgeData& e, const Case1Grid& grid) {
  TwoQubitDecision out;
  out.real = is_real_locally(e);
  if (!out.real) {
    out.certificate_note = "not real under local rotations: a triple-product invariant is nonzero";
    return out;
  }
  if (is_z_matrix_2q(e)) {
    out.stoquastic = true;
    out.witness = TwoQubitWitness{};
    out.certificate_note = "already a symmetric Z-matrix";
    out.form = standard_form(e);
    return out;
  }
  const StandardForm form = standard_form(e);
  out.form = form;

  if (form.special_case == SpecialCase::kSAndPZero) {
    const EdgeData diag = form.as_edge();
    for (const auto& cl : clifford_rotations()) {
      for (const auto& cr : clifford_rotations()) {
        EdgeData t;
        t.beta = apply_signed_permutations(diag.beta, cl, cr);
        if (!is_z_matrix_2q(t)) continue;
        TwoQubitWitness w;
        w.left = cl.rotation() * form.left_rot;
        w.right = cr.rotation() * form.right_rot;
        if (!is_z_matrix_2q(apply_rotations(e, w.left, w.right))) continue;
        out.stoquastic = true;
        out.witness = w;
        out.certificate_note = "special case s_and_p_zero: signed permutations suffice";
        return out;
      }
    }
    out.certificate_note = "special case s_and_p_zero: no signed permutation found";
    return out;
  }
  if (form.special_case == SpecialCase::kBetaZero) {
    TwoQubitWitness w;
    w.left = rotation_to_minus_x(e.s_vec);
    w.right = rotation_to_minus_x(e.p_vec);
    out.stoquastic = is_z_matrix_2q(apply_rotations(e, w.left, w.right));
    if (out.stoquastic) out.witness = w;
    out.certificate_note = "special case beta_zero: one-local fields rotated onto -X";
    return out;
  }

  const double tol = kTolerance;
  Frame base;
  base.d = form.beta_diag;
  base.s = form.s_vec;
  base.p = form.p_vec;
  base.left = form.left_rot.matrix();
  base.right = form.right_rot.matrix();
  std::vector<std::pair<Frame, std::string>> variants = {{base, "standard frame"}};
  if (std::abs(base.s[0]) <= tol && std::abs(base.p[0]) <= tol) {
    Frame v = base;
    transform(v, swap_xy(), swap_xy());
    canonicalize(v, tol);
    variants.push_back({v, "X<->Y variant"});
  }
  if (std::abs(base.s[2]) <= tol && std::abs(base.p[2]) <= tol) {
    Frame v = base;
    transform(v, swap_zy(), swap_zy());
    canonicalize(v, tol);
    variants.push_back({v, "Z<->Y variant"});
  }

  for (const auto& [frame, label] : variants) {
    Search s{e, frame, std::nullopt};
    bool ok = run_case4(s) || run_case2(s) || run_case3(s) ||
              run_case1(s, grid, &out.grid_samples);
    if (ok) {
      out.stoquastic = true;
      out.witness = s.found;
      out.certificate_note =
          "case " + std::to_string(s.found->case_id) + " feasible in the " + label;
      return out;
    }
  }
  out.certificate_note = "all four cases refuted in " + std::to_string(variants.size()) +
                         " frame(s); case 1 checked on " + std::to_string(out.grid_samples) +
                         " theta_R samples";
  return out;
}

EdgeData clifford_insufficient_family(double a_x, double a_z, double a_xx) {
  EdgeData e;
  e.beta(0, 0) = a_xx;
  e.beta(2, 2) = 1.0;
  e.s_vec = Vector3d(-a_x, 0, a_z);
  e.p_vec = e.s_vec;
  return e;
}

double ScanAxis::at(int i) const {
  if (steps < 2) throw PreconditionError("scan axes need at least two steps");
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * i / (steps - 1);
}

std::vector<ScanRow> region_scan(const ScanAxis& ax, const ScanAxis& az, const ScanAxis& axx,
                                 const Case1Grid& grid) {
  if (ax.steps < 2 || az.steps < 2 || axx.steps < 2) {
    throw PreconditionError("scan axes need at least two steps");
  }
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(ax.steps) * az.steps * axx.steps);
  for (int i = 0; i < ax.steps; ++i) {
    for (int j = 0; j < az.steps; ++j) {
      for (int k = 0; k < axx.steps; ++k) {
        const double x = ax.at(i), z = az.at(j), xx = axx.at(k);
        const TwoQubitDecision d = decide_stoquastic_2q(clifford_insufficient_family(x, z, xx), grid);
        rows.push_back({x, z, xx, d.stoquastic,
                        d.stoquastic && d.witness ? d.witness->case_id : -1});
      }
    }
  }
  return rows;
}

}  // namespace stoq
