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

#include "vbc/rotations.hpp"

#include <algorithm>
#include <cmath>

namespace vbc
{
double wrap_angle(double a)
{
  a = std::fmod(a, 2.0 * M_PI);
  if (a <= -M_PI)
    a += 2.0 * M_PI;
  else if (a > M_PI)
    a -= 2.0 * M_PI;
  return a;
}

Eigen::Quaterniond quat_from_euler(const EulerAngles& e)
{
  return Eigen::Quaterniond(
      Eigen::AngleAxisd(e.yaw, Eigen::Vector3d::UnitZ()) *
      Eigen::AngleAxisd(e.pitch, Eigen::Vector3d::UnitY()) *
      Eigen::AngleAxisd(e.roll, Eigen::Vector3d::UnitX()));
}

EulerAngles euler_from_quat(const Eigen::Quaterniond& q)
{
  const Eigen::Matrix3d R = q.normalized().toRotationMatrix();
  EulerAngles e;
  // R(2,0) = -sin(pitch); clamp against round-off at the gimbal poles.
  const double sp = std::clamp(-R(2, 0), -1.0, 1.0);
  e.pitch = std::asin(sp);
  if (std::abs(sp) > 1.0 - 1e-12)
  {
    // Gimbal lock: yaw and roll are degenerate, report all rotation as yaw.
    e.roll = 0.0;
    e.yaw = std::atan2(-R(0, 1), R(1, 1));
  }
  else
  {
    e.roll = std::atan2(R(2, 1), R(2, 2));
    e.yaw = std::atan2(R(1, 0), R(0, 0));
  }
  return e;
}

Eigen::Quaterniond integrate_quat(const Eigen::Quaterniond& q,
                                  const Eigen::Vector3d& omega_body,
                                  double dt)
{
  const double angle = omega_body.norm() * dt;
  Eigen::Quaterniond out = q;
  if (angle > 0.0)
  {
    const Eigen::Quaterniond step(
        Eigen::AngleAxisd(angle, omega_body.normalized()));
    out = q * step;  // body-frame rate composes on the right
  }
  out.normalize();
  return out;
}

Eigen::Matrix3d skew(const Eigen::Vector3d& v)
{
  Eigen::Matrix3d s;
  s << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return s;
}
}  // namespace vbc
