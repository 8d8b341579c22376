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

#ifndef VBC_ENVIRONMENT_HPP_
#define VBC_ENVIRONMENT_HPP_

#include <Eigen/Dense>

namespace vbc
{
/// Fluid and world parameters shared by the hydrostatic model and the
/// simulator.  The world frame is x forward, y left, z up; a submerged
/// vehicle has position.z() <= 0 and depth = -position.z().
struct EnvironmentParams
{
  /// Water density (kg/m^3).
  double rho = 1000.0;
  /// Gravitational acceleration (m/s^2), positive down.
  double g = 9.81;
  /// Atmospheric pressure at the surface (Pa).
  double p_atm = 101325.0;
  /// Uniform ambient current, world frame (m/s).
  Eigen::Vector3d current = Eigen::Vector3d::Zero();
  /// Tank floor depth (m); the simulator clamps motion below this.
  double depth_max = 12.0;

  /// Throws std::invalid_argument if any parameter is outside its domain.
  void validate() const;

  /// Absolute pressure at a given depth (m below the surface).
  double pressure_at_depth(double depth) const
  {
    return p_atm + rho * g * depth;
  }
};
}  // namespace vbc

#endif  // VBC_ENVIRONMENT_HPP_
