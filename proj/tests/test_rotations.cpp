// Copyright (c) 2026 The VBCsim Authors.
// All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <random>

#include "vbc/rotations.hpp"

using namespace vbc;

TEST_CASE("wrap_angle maps into (-pi, pi]")
{
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(-M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(3.0 * M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(2.0 * M_PI + 0.25) == doctest::Approx(0.25));
  CHECK(wrap_angle(-7.5 * M_PI) == doctest::Approx(0.5 * M_PI));
}

TEST_CASE("euler round trip away from the poles")
{
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> angle(-1.3, 1.3);
  for (int k = 0; k < 500; ++k)
  {
    EulerAngles e{angle(rng), angle(rng), angle(rng)};
    const EulerAngles r = euler_from_quat(quat_from_euler(e));
    CHECK(r.roll == doctest::Approx(e.roll).epsilon(1e-10));
    CHECK(r.pitch == doctest::Approx(e.pitch).epsilon(1e-10));
    CHECK(r.yaw == doctest::Approx(e.yaw).epsilon(1e-10));
  }
}

TEST_CASE("single-axis quaternions match their Euler angles")
{
  const double a = 0.7;
  const EulerAngles roll_only =
      euler_from_quat(Eigen::Quaterniond(
          Eigen::AngleAxisd(a, Eigen::Vector3d::UnitX())));
  CHECK(roll_only.roll == doctest::Approx(a));
  CHECK(roll_only.pitch == doctest::Approx(0.0).scale(1.0));
  CHECK(roll_only.yaw == doctest::Approx(0.0).scale(1.0));

  const EulerAngles pitch_only =
      euler_from_quat(Eigen::Quaterniond(
          Eigen::AngleAxisd(a, Eigen::Vector3d::UnitY())));
  CHECK(pitch_only.pitch == doctest::Approx(a));
}

TEST_CASE("gimbal pole stays finite")
{
  const EulerAngles e = euler_from_quat(
      quat_from_euler(EulerAngles{0.3, M_PI / 2.0, 0.4}));
  CHECK(std::isfinite(e.roll));
  CHECK(std::isfinite(e.pitch));
  CHECK(std::isfinite(e.yaw));
  CHECK(e.pitch == doctest::Approx(M_PI / 2.0).epsilon(1e-9));
}

TEST_CASE("integrate_quat matches the axis-angle solution")
{
  const Eigen::Vector3d omega(0.3, -0.2, 0.5);
  Eigen::Quaterniond q = Eigen::Quaterniond::Identity();
  const double dt = 1e-3;
  const int n = 2000;
  for (int k = 0; k < n; ++k)
    q = integrate_quat(q, omega, dt);
  // Constant body rate: exact solution is one big exponential.
  const Eigen::Quaterniond exact(
      Eigen::AngleAxisd(omega.norm() * dt * n, omega.normalized()));
  CHECK(q.angularDistance(exact) < 1e-10);
  CHECK(std::abs(q.norm() - 1.0) < 1e-12);
}

TEST_CASE("integrate_quat with zero rate is identity")
{
  const Eigen::Quaterniond q =
      quat_from_euler(EulerAngles{0.2, -0.1, 0.9});
  const Eigen::Quaterniond r =
      integrate_quat(q, Eigen::Vector3d::Zero(), 0.05);
  CHECK(r.angularDistance(q) == doctest::Approx(0.0).scale(1.0));
}
