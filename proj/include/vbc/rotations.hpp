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

#ifndef VBC_ROTATIONS_HPP_
#define VBC_ROTATIONS_HPP_

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace vbc
{
/// Intrinsic z-y'-x'' (yaw, pitch, roll) angles in radians.  In the z-up
/// body frame positive roll lifts the starboard side and positive pitch
/// drops the nose.
struct EulerAngles
{
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;
};

/// Wraps an angle to (-pi, pi].
double wrap_angle(double a);

/// Body-to-world quaternion for intrinsic yaw-pitch-roll angles.
Eigen::Quaterniond quat_from_euler(const EulerAngles& e);

/// Inverse of quat_from_euler; pitch is clamped to [-pi/2, pi/2].
EulerAngles euler_from_quat(const Eigen::Quaterniond& q);

/// Integrates a body-frame angular velocity over dt with the exact
/// rotation-group exponential and renormalizes the result.
Eigen::Quaterniond integrate_quat(const Eigen::Quaterniond& q,
                                  const Eigen::Vector3d& omega_body,
                                  double dt);

/// Skew-symmetric matrix S(v) with S(v)*w = v x w.
Eigen::Matrix3d skew(const Eigen::Vector3d& v);
}  // namespace vbc

#endif  // VBC_ROTATIONS_HPP_
