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

#include "vbc/control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

#include "vbc/rotations.hpp"

namespace vbc
{
namespace
{
constexpr double kSingularValueCutoff = 1e-10;

double clamp_symmetric(double v, double limit)
{
  return std::clamp(v, -limit, limit);
}
}  // namespace

void WrenchTarget::validate() const
{
  if (!vec().allFinite())
    throw std::domain_error("wrench target has non-finite entries");
}

Eigen::Matrix<double, 6, 4> build_B(const VehicleGeometry& geom,
                                    const EnvironmentParams& env,
                                    BMatrixVariant variant)
{
  const double alpha = env.rho * env.g * geom.actuator.piston_area();
  const double x = geom.actuator.mount.x();
  const double y = geom.actuator.mount.y();

  Eigen::Matrix<double, 6, 4> B = Eigen::Matrix<double, 6, 4>::Zero();
  for (int i = 0; i < 4; ++i)
  {
    B(2, i) = alpha;                               // heave
    B(3, i) = alpha * kActuatorSignY[i] * y;       // roll: +lifts port
    // Pitch: +lifts the bow.  The geometric row signs by engine x offset;
    // the alternative reuses the left/right signing.
    const double sx = variant == BMatrixVariant::kGeometric
                          ? kActuatorSignX[i]
                          : kActuatorSignY[i];
    B(4, i) = alpha * sx * x;
  }
  return B;
}

Eigen::Matrix<double, 4, 6> pseudo_inverse(
    const Eigen::Matrix<double, 6, 4>& B)
{
  Eigen::JacobiSVD<Eigen::Matrix<double, 6, 4>> svd(
      B, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = kSingularValueCutoff * sv(0);

  Eigen::Matrix<double, 4, 6> sigma_inv = Eigen::Matrix<double, 4, 6>::Zero();
  for (int i = 0; i < sv.size(); ++i)
  {
    if (sv(i) > cutoff)
      sigma_inv(i, i) = 1.0 / sv(i);
  }
  return svd.matrixV() * sigma_inv * svd.matrixU().transpose();
}

AllocationResult allocate_open_loop(const Eigen::Matrix<double, 6, 4>& B,
                                    const WrenchTarget& tau_des,
                                    const Eigen::Matrix<double, 6, 1>& g0,
                                    double offset_limit)
{
  tau_des.validate();
  if (!g0.allFinite())
    throw std::domain_error("g0 has non-finite entries");
  if (!(offset_limit >= 0.0))
    throw std::domain_error("offset_limit must be non-negative");

  const Eigen::Matrix<double, 6, 1> rhs = tau_des.vec() - g0;
  AllocationResult out;
  out.offsets = pseudo_inverse(B) * rhs;
  out.residual = B * out.offsets - rhs;
  for (int i = 0; i < 4; ++i)
  {
    out.saturated_offsets(i) = clamp_symmetric(out.offsets(i), offset_limit);
    out.saturated[i] = out.saturated_offsets(i) != out.offsets(i);
    out.any_saturated = out.any_saturated || out.saturated[i];
  }
  return out;
}

void PidGains::validate() const
{
  const double vals[] = {kp, ki, kd, i_limit, out_limit, d_filter_tau};
  for (double v : vals)
  {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("pid gains and limits must be >= 0");
  }
}

double Pid::step_error(double error, double dt)
{
  if (!(dt > 0.0))
    throw std::domain_error("pid step requires dt > 0");
  if (!std::isfinite(error))
    throw std::domain_error("pid error is not finite");

  integrator_ += error * dt;
  if (gains_.i_limit > 0.0)
    integrator_ = clamp_symmetric(integrator_, gains_.i_limit);

  const double d_raw = (error - prev_error_) / dt;
  prev_error_ = error;
  if (gains_.d_filter_tau > 0.0)
  {
    // First-order low-pass, seeded by the first raw sample.
    const double a = dt / (gains_.d_filter_tau + dt);
    d_filtered_ = primed_ ? d_filtered_ + a * (d_raw - d_filtered_) : d_raw;
  }
  else
  {
    d_filtered_ = d_raw;
  }
  primed_ = true;

  double out = gains_.kp * error + gains_.ki * integrator_ +
               gains_.kd * d_filtered_;
  if (gains_.out_limit > 0.0)
    out = clamp_symmetric(out, gains_.out_limit);
  last_output_ = out;
  return out;
}

void Pid::reset()
{
  integrator_ = 0.0;
  prev_error_ = 0.0;
  d_filtered_ = 0.0;
  last_output_ = 0.0;
  primed_ = false;
}

Eigen::Vector4d mix(double pid_pressure, double pid_roll, double pid_pitch)
{
  // Rows FL, BL, BR, FR; columns pressure, roll, pitch.
  Eigen::Vector4d u;
  u(0) = pid_pressure - pid_roll + pid_pitch;
  u(1) = pid_pressure - pid_roll - pid_pitch;
  u(2) = pid_pressure + pid_roll - pid_pitch;
  u(3) = pid_pressure + pid_roll + pid_pitch;
  return u;
}

CommandResult total_command(const Eigen::Vector4d& open_loop_offsets,
                            const Eigen::Vector4d& mixer_offsets,
                            const ControlCommand& reference,
                            double stroke_max)
{
  if (!open_loop_offsets.allFinite() || !mixer_offsets.allFinite())
    throw std::domain_error("command offsets have non-finite entries");
  CommandResult out;
  for (int i = 0; i < 4; ++i)
  {
    const double raw = reference[i] + open_loop_offsets(i) + mixer_offsets(i);
    out.command[i] = std::clamp(raw, 0.0, stroke_max);
    out.saturated[i] = out.command[i] != raw;
    out.any_saturated = out.any_saturated || out.saturated[i];
  }
  return out;
}

TrimState compute_trim(const VehicleGeometry& geom,
                       const EnvironmentParams& env, BMatrixVariant variant,
                       double reference_extension)
{
  geom.validate();
  env.validate();
  if (reference_extension < 0.0 ||
      reference_extension > geom.actuator.stroke_max)
    throw std::domain_error("reference extension outside the stroke");

  TrimState trim;
  // Ballast term only: keep the net vertical force, drop hydrostatic torque
  // (the attitude loops own that).
  const auto wrench = hydrostatic_wrench(
      geom, ActuatorState::uniform(reference_extension),
      Eigen::Quaterniond::Identity(), env);
  trim.g0(2) = wrench(2);
  const Eigen::Matrix<double, 6, 4> B = build_B(geom, env, variant);
  // Half the remaining stroke in the tighter direction bounds the offsets.
  const double limit = std::min(reference_extension,
                                geom.actuator.stroke_max -
                                    reference_extension);
  const AllocationResult alloc =
      allocate_open_loop(B, WrenchTarget{}, trim.g0, limit);
  trim.offsets = alloc.offsets;
  trim.residual_norm = alloc.residual.norm();
  trim.saturated = alloc.any_saturated;
  const CommandResult cmd =
      total_command(alloc.offsets, Eigen::Vector4d::Zero(),
                    ControlCommand::uniform(reference_extension),
                    geom.actuator.stroke_max);
  trim.command = cmd.command;
  trim.saturated = trim.saturated || cmd.any_saturated;
  return trim;
}

Controller::Controller(const ControllerConfig& config,
                       const VehicleGeometry& geom,
                       const EnvironmentParams& env)
    : config_(config),
      env_(env),
      stroke_max_(geom.actuator.stroke_max),
      trim_(compute_trim(geom, env, config.variant,
                         config.reference_extension)),
      pid_pressure_(config.pressure),
      pid_roll_(config.roll),
      pid_pitch_(config.pitch)
{
  config.pressure.validate();
  config.roll.validate();
  config.pitch.validate();
}

ControllerOutput Controller::tick(double pressure_meas, double roll_meas,
                                  double pitch_meas,
                                  const ControllerSetpoint& setpoint,
                                  double dt)
{
  // measurement - setpoint per channel; see the class comment.
  const double pressure_set = env_.pressure_at_depth(setpoint.depth);
  const double e_pressure = pressure_meas - pressure_set;
  const double e_roll = wrap_angle(roll_meas - setpoint.roll);
  const double e_pitch = wrap_angle(pitch_meas - setpoint.pitch);

  ControllerOutput out;
  out.pid_pressure = pid_pressure_.step_error(e_pressure, dt);
  out.pid_roll = pid_roll_.step_error(e_roll, dt);
  out.pid_pitch = pid_pitch_.step_error(e_pitch, dt);
  out.mixer = mix(out.pid_pressure, out.pid_roll, out.pid_pitch);

  const CommandResult cmd = total_command(
      trim_.offsets, out.mixer,
      ControlCommand::uniform(config_.reference_extension), stroke_max_);
  out.command = cmd.command;
  out.saturated = cmd.saturated;
  return out;
}

void Controller::reset()
{
  pid_pressure_.reset();
  pid_roll_.reset();
  pid_pitch_.reset();
}
}  // namespace vbc
