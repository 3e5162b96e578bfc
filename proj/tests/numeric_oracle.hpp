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

// Numerical ground truth for two-qubit questions: Levenberg-Marquardt over
// pairs of rotation vectors, restarted from random points.

#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include <algorithm>
#include <random>

#include "stoq/pauli.hpp"

namespace stoq::testing {

enum class Target { kRealness, kZMatrix };

inline Eigen::Matrix3d rotation_from_vector(const Eigen::Vector3d& w) {
  const double a = w.norm();
  if (a == 0) return Eigen::Matrix3d::Identity();
  return Eigen::AngleAxisd(a, w / a).toRotationMatrix();
}

// Residual vector whose zero set is the target condition.
struct ViolationFunctor {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  EdgeData e;
  Target target;

  int inputs() const { return 6; }
  int values() const { return target == Target::kRealness ? 6 : 9; }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    const Eigen::Matrix3d o1 = rotation_from_vector(x.head<3>());
    const Eigen::Matrix3d o2 = rotation_from_vector(x.tail<3>());
    const Eigen::Matrix3d b = o1 * e.beta * o2.transpose();
    const Eigen::Vector3d s = o1 * e.s_vec, p = o2 * e.p_vec;
    f.resize(9);
    f << b(0, 1), b(1, 0), b(1, 2), b(2, 1), s[1], p[1], 0, 0, 0;
    if (target == Target::kZMatrix) {
      f[6] = std::max(0.0, b(0, 0) + std::abs(b(1, 1)));
      f[7] = std::max(0.0, s[0] + std::abs(b(0, 2)));
      f[8] = std::max(0.0, p[0] + std::abs(b(2, 0)));
    } else {
      f.conservativeResize(6);
    }
    return 0;
  }
};

// Smallest residual norm found, relative to the input scale.
inline double min_violation(const EdgeData& e, Target target, int restarts, std::uint64_t seed) {
  const double scale = std::max({e.beta.norm(), e.s_vec.norm(), e.p_vec.norm(), 1e-300});
  EdgeData unit = e;
  unit.beta /= scale;
  unit.s_vec /= scale;
  unit.p_vec /= scale;
  ViolationFunctor fun{unit, target};
  Eigen::NumericalDiff<ViolationFunctor> diff(fun);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(-3.2, 3.2);
  double best = 1e300;
  for (int r = 0; r < restarts; ++r) {
    Eigen::VectorXd x(6);
    for (int i = 0; i < 6; ++i) x[i] = ang(rng);
    Eigen::LevenbergMarquardt<Eigen::NumericalDiff<ViolationFunctor>> lm(diff);
    lm.parameters.maxfev = 2000;
    lm.parameters.xtol = 1e-14;
    lm.parameters.ftol = 1e-16;
    lm.minimize(x);
    Eigen::VectorXd f;
    fun(x, f);
    best = std::min(best, f.norm());
    if (best < 1e-12) break;
  }
  return best;
}

}  // namespace stoq::testing
