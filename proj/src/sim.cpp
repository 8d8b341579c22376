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

#include "vbc/sim.hpp"

#include <algorithm>
#include <cmath>

namespace vbc
{
void DragModel::validate() const
{
  if (!linear.allFinite() || linear.minCoeff() < 0.0)
    throw std::invalid_argument("drag: linear coefficients must be >= 0");
  if (!angular.allFinite() || angular.minCoeff() < 0.0)
    throw std::invalid_argument("drag: angular coefficients must be >= 0");
  if (!added_mass.allFinite() || added_mass.minCoeff() < 0.0)
    throw std::invalid_argument("drag: added mass must be >= 0");
}

void ActuatorDynamics::validate() const
{
  if (!(max_speed > 0.0) || !std::isfinite(max_speed))
    throw std::invalid_argument("actuator: max_speed must be positive");
  if (deadband < 0.0 || !std::isfinite(deadband))
    throw std::invalid_argument("actuator: deadband must be >= 0");
}

void SensorNoise::validate() const
{
  if (pressure_sigma < 0.0 || angle_sigma < 0.0 ||
      !std::isfinite(pressure_sigma) || !std::isfinite(angle_sigma))
    throw std::invalid_argument("sensor noise sigmas must be >= 0");
}

double SensorModel::gauss(double sigma)
{
  if (sigma == 0.0)
    return 0.0;
  return sigma * unit_(rng_);
}

SensorReading SensorModel::sample(const RigidBodyState& state,
                                  const EnvironmentParams& env, double t)
{
  const EulerAngles e = state.euler();
  SensorReading r;
  r.t = t;
  r.pressure = env.pressure_at_depth(state.depth()) +
               gauss(noise_.pressure_sigma);
  r.roll = e.roll + gauss(noise_.angle_sigma);
  r.pitch = e.pitch + gauss(noise_.angle_sigma);
  r.yaw = e.yaw + gauss(noise_.angle_sigma);
  return r;
}

DepthEstimate pressure_to_depth(double pressure, const EnvironmentParams& env)
{
  if (!std::isfinite(pressure))
    throw std::domain_error("pressure is not finite");
  DepthEstimate est;
  est.depth = (pressure - env.p_atm) / (env.rho * env.g);
  if (est.depth < 0.0)
  {
    est.depth = 0.0;
    est.at_surface = true;
  }
  return est;
}

Eigen::Matrix<double, 6, 1> drag_wrench(const RigidBodyState& state,
                                        const DragModel& drag,
                                        const EnvironmentParams& env)
{
  const Eigen::Vector3d v_rel =
      state.velocity -
      state.attitude.toRotationMatrix().transpose() * env.current;
  const Eigen::Vector3d& w = state.angular_velocity;

  Eigen::Matrix<double, 6, 1> wrench;
  wrench.head<3>() =
      -drag.linear.cwiseProduct(v_rel.cwiseProduct(v_rel.cwiseAbs()));
  wrench.tail<3>() =
      -drag.angular.cwiseProduct(w.cwiseProduct(w.cwiseAbs()));
  return wrench;
}

Eigen::Matrix<double, 6, 6> mass_matrix(const VehicleGeometry& geom,
                                        const ActuatorState& ext,
                                        const DragModel& drag)
{
  const MassProperties mp = mass_properties(geom, ext);
  const Eigen::Matrix3d s_com = skew(mp.com);
  // Inertia about the body origin via the parallel axis shift.
  const Eigen::Matrix3d inertia_origin =
      mp.inertia_com - mp.mass * s_com * s_com;

  Eigen::Matrix<double, 6, 6> M = Eigen::Matrix<double, 6, 6>::Zero();
  M.topLeftCorner<3, 3>() = mp.mass * Eigen::Matrix3d::Identity();
  M.topRightCorner<3, 3>() = -mp.mass * s_com;
  M.bottomLeftCorner<3, 3>() = mp.mass * s_com;
  M.bottomRightCorner<3, 3>() = inertia_origin;
  M += drag.added_mass.asDiagonal();
  return M;
}

double mechanical_energy(const RigidBodyState& state,
                         const VehicleGeometry& geom,
                         const ActuatorState& ext,
                         const EnvironmentParams& env,
                         const DragModel& drag)
{
  const Eigen::Matrix<double, 6, 6> M = mass_matrix(geom, ext, drag);
  Eigen::Matrix<double, 6, 1> nu;
  nu << state.velocity, state.angular_velocity;
  const double kinetic = 0.5 * nu.dot(M * nu);

  const MassProperties mp = mass_properties(geom, ext);
  const BuoyancyState bs = center_of_buoyancy(geom, ext, env);
  const Eigen::Matrix3d R = state.attitude.toRotationMatrix();
  const double z_com = (state.position + R * mp.com).z();
  const double z_cob = (state.position + R * bs.cob).z();
  // Gravity potential rises with the com, buoyancy potential falls with
  // the cob.
  const double potential =
      env.g * mp.mass * z_com - env.rho * env.g * bs.volume * z_cob;
  return kinetic + potential;
}

RigidBodyState step(const RigidBodyState& state, const VehicleGeometry& geom,
                    const ActuatorState& ext, const EnvironmentParams& env,
                    const DragModel& drag, double dt)
{
  if (!(dt > 0.0))
    throw std::domain_error("step requires dt > 0");
  if (!state.finite())
    throw SimulationFault("state is non-finite before integration");

  const Eigen::Matrix<double, 6, 6> M = mass_matrix(geom, ext, drag);
  Eigen::Matrix<double, 6, 1> nu;
  nu << state.velocity, state.angular_velocity;

  // Rigid-body Coriolis/centripetal in the momentum form; does no work.
  const Eigen::Vector3d h_lin = M.topRows<3>() * nu;
  const Eigen::Vector3d h_ang = M.bottomRows<3>() * nu;
  Eigen::Matrix<double, 6, 1> coriolis;
  coriolis.head<3>() = state.angular_velocity.cross(h_lin);
  coriolis.tail<3>() = state.angular_velocity.cross(h_ang) +
                       state.velocity.cross(h_lin);

  const Eigen::Matrix<double, 6, 1> wrench =
      hydrostatic_wrench(geom, ext, state.attitude, env) +
      drag_wrench(state, drag, env);

  const Eigen::Matrix<double, 6, 1> accel =
      M.ldlt().solve(wrench - coriolis);

  RigidBodyState next;
  next.velocity = state.velocity + dt * accel.head<3>();
  next.angular_velocity = state.angular_velocity + dt * accel.tail<3>();
  next.attitude = integrate_quat(state.attitude, next.angular_velocity, dt);
  next.position =
      state.position + dt * (state.attitude.toRotationMatrix() *
                             next.velocity);

  // The free surface and the floor stop vertical motion.
  const auto clamp_vertical = [&next](double z, bool moving_past) {
    next.position.z() = z;
    if (moving_past)
    {
      const Eigen::Matrix3d R = next.attitude.toRotationMatrix();
      Eigen::Vector3d v_world = R * next.velocity;
      v_world.z() = 0.0;
      next.velocity = R.transpose() * v_world;
    }
  };
  if (next.position.z() > 0.0)
  {
    const double vz = (next.attitude.toRotationMatrix() * next.velocity).z();
    clamp_vertical(0.0, vz > 0.0);
  }
  else if (next.depth() > env.depth_max)
  {
    const double vz = (next.attitude.toRotationMatrix() * next.velocity).z();
    clamp_vertical(-env.depth_max, vz < 0.0);
  }

  if (!next.finite())
    throw SimulationFault("state went non-finite during integration");
  return next;
}

ActuatorState actuator_update(const ControlCommand& command,
                              const ActuatorState& state,
                              const ActuatorDynamics& dynamics,
                              double stroke_max, double dt)
{
  if (!(dt > 0.0))
    throw std::domain_error("actuator_update requires dt > 0");
  ActuatorState next = state;
  for (int i = 0; i < 4; ++i)
  {
    const double err = command[i] - state[i];
    if (std::abs(err) <= dynamics.deadband)
      continue;
    const double move = std::min(std::abs(err), dynamics.max_speed * dt);
    next[i] = std::clamp(state[i] + std::copysign(move, err), 0.0,
                         stroke_max);
  }
  return next;
}
}  // namespace vbc
