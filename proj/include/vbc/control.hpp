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

#ifndef VBC_CONTROL_HPP_
#define VBC_CONTROL_HPP_

#include <array>

#include <Eigen/Dense>

#include "vbc/environment.hpp"
#include "vbc/vehicle.hpp"

namespace vbc
{
/// Desired net wrench in the allocation's wrench convention: +fz lifts the
/// vehicle, +tau_x lifts the port (left, +y) side, +tau_y lifts the bow.
/// Only fz, tau_x and tau_y are reachable with buoyancy actuation.
struct WrenchTarget
{
  double fx = 0.0;
  double fy = 0.0;
  double fz = 0.0;
  double tau_x = 0.0;
  double tau_y = 0.0;
  double tau_z = 0.0;

  Eigen::Matrix<double, 6, 1> vec() const
  {
    Eigen::Matrix<double, 6, 1> v;
    v << fx, fy, fz, tau_x, tau_y, tau_z;
    return v;
  }
  /// Throws std::domain_error on non-finite entries.
  void validate() const;
};

/// Absolute piston extension commands (m), FL/BL/BR/FR.
struct ControlCommand
{
  std::array<double, 4> extension = {0.0, 0.0, 0.0, 0.0};

  double& operator[](int i) { return extension[i]; }
  double operator[](int i) const { return extension[i]; }
  static ControlCommand uniform(double e)
  {
    return ControlCommand{{e, e, e, e}};
  }
  Eigen::Vector4d vec() const
  {
    return Eigen::Vector4d(extension[0], extension[1], extension[2],
                           extension[3]);
  }
};

/// Choice of pitch-moment row in the allocation matrix.  kGeometric signs
/// the row by each engine's x offset (front +, back -); kPaper reuses the
/// roll row's left/right signing, matching the vehicle's original design
/// notes.  Config token: b_matrix = geometric | paper.
enum class BMatrixVariant
{
  kGeometric,
  kPaper
};

/// Buoyancy allocation matrix mapping piston extension offsets (m) to the
/// wrench described on WrenchTarget.  Rows fx, fy and tau_z are zero; the
/// remaining rows scale with alpha = rho * g * piston_area.  Rank is at
/// most 3.
Eigen::Matrix<double, 6, 4> build_B(const VehicleGeometry& geom,
                                    const EnvironmentParams& env,
                                    BMatrixVariant variant);

struct AllocationResult
{
  /// Minimum-norm extension offsets about the reference (m); unbounded.
  Eigen::Vector4d offsets = Eigen::Vector4d::Zero();
  /// B * offsets - (tau_des - g0); nonzero only outside B's column span.
  Eigen::Matrix<double, 6, 1> residual =
      Eigen::Matrix<double, 6, 1>::Zero();
  /// Offsets clamped to [-offset_limit, +offset_limit].
  Eigen::Vector4d saturated_offsets = Eigen::Vector4d::Zero();
  std::array<bool, 4> saturated = {false, false, false, false};
  bool any_saturated = false;
};

/// Minimum-norm least-squares solve of B * u = tau_des - g0 through the
/// pseudo-inverse.  Singular values below 1e-10 times the largest are
/// treated as zero.  offset_limit bounds the saturated copy (typically half
/// the stroke about a mid-stroke reference).
AllocationResult allocate_open_loop(const Eigen::Matrix<double, 6, 4>& B,
                                    const WrenchTarget& tau_des,
                                    const Eigen::Matrix<double, 6, 1>& g0,
                                    double offset_limit);

/// Moore-Penrose pseudo-inverse with the same thresholding rule as
/// allocate_open_loop.
Eigen::Matrix<double, 4, 6> pseudo_inverse(
    const Eigen::Matrix<double, 6, 4>& B);

/// PID gains and limits.  A limit of 0 disables the corresponding clamp.
/// d_filter_tau is the time constant of a first-order low-pass on the
/// error derivative; 0 uses the raw backward difference.
struct PidGains
{
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;
  double i_limit = 0.0;
  double out_limit = 0.0;
  double d_filter_tau = 0.1;

  void validate() const;
};

/// Positional-form PID with derivative on error and integrator clamping.
/// State starts at zero: the first derivative sample sees a previous error
/// of 0.
class Pid
{
 public:
  Pid() = default;
  explicit Pid(const PidGains& gains) : gains_(gains) {}

  /// Advances one step with a precomputed error.  dt must be positive.
  double step_error(double error, double dt);
  /// Standard form: error = setpoint - measurement.
  double step(double setpoint, double measurement, double dt)
  {
    return step_error(setpoint - measurement, dt);
  }
  void reset();

  const PidGains& gains() const { return gains_; }
  double integrator() const { return integrator_; }
  double last_output() const { return last_output_; }

 private:
  PidGains gains_;
  double integrator_ = 0.0;
  double prev_error_ = 0.0;
  double d_filtered_ = 0.0;
  double last_output_ = 0.0;
  bool primed_ = false;
};

/// Feedback mixer: maps the pressure, roll and pitch PID outputs to
/// per-engine extension offsets.  Pressure drives all engines together,
/// roll drives left against right, pitch drives front against back.
Eigen::Vector4d mix(double pid_pressure, double pid_roll, double pid_pitch);

struct CommandResult
{
  ControlCommand command;
  std::array<bool, 4> saturated = {false, false, false, false};
  bool any_saturated = false;
};

/// reference + open_loop_offsets + mixer_offsets, clamped to
/// [0, stroke_max] per engine with per-engine saturation flags.
CommandResult total_command(const Eigen::Vector4d& open_loop_offsets,
                            const Eigen::Vector4d& mixer_offsets,
                            const ControlCommand& reference,
                            double stroke_max);

/// Static trim solution: offsets that cancel the net buoyancy force at the
/// reference extension, level attitude. Trim is a ballast term: it balances
/// the heave force only, and any residual hydrostatic torque is left to the
/// attitude loops.
struct TrimState
{
  /// Static buoyancy wrench at the reference: (0, 0, f_buoy - m g, 0, 0, 0).
  Eigen::Matrix<double, 6, 1> g0 = Eigen::Matrix<double, 6, 1>::Zero();
  Eigen::Vector4d offsets = Eigen::Vector4d::Zero();
  ControlCommand command;
  /// Out-of-span force residual norm (N).
  double residual_norm = 0.0;
  bool saturated = false;
};

/// Solves the allocation for tau_des = 0 at the given uniform reference
/// extension and forms the absolute command.
TrimState compute_trim(const VehicleGeometry& geom,
                       const EnvironmentParams& env, BMatrixVariant variant,
                       double reference_extension);

struct ControllerConfig
{
  PidGains pressure;
  PidGains roll;
  PidGains pitch;
  BMatrixVariant variant = BMatrixVariant::kGeometric;
  double reference_extension = 0.05;
};

struct ControllerSetpoint
{
  double depth = 0.0;   // m below surface
  double roll = 0.0;    // rad
  double pitch = 0.0;   // rad
};

struct ControllerOutput
{
  ControlCommand command;
  std::array<bool, 4> saturated = {false, false, false, false};
  double pid_pressure = 0.0;
  double pid_roll = 0.0;
  double pid_pitch = 0.0;
  Eigen::Vector4d mixer = Eigen::Vector4d::Zero();
};

/// Depth/roll/pitch feedback wrapped around the static trim command.
///
/// Channel errors are formed as measurement - setpoint: a vehicle deeper
/// than commanded reads higher pressure, and with the all-positive pressure
/// mixer column a positive PID output must add buoyancy.  The same
/// orientation holds for roll (right side low reads negative roll, mixer
/// then lifts the right) and pitch (nose low reads positive pitch, mixer
/// lifts the bow), so all three channels use positive gains.
class Controller
{
 public:
  Controller(const ControllerConfig& config, const VehicleGeometry& geom,
             const EnvironmentParams& env);

  /// One feedback step.  pressure_meas is absolute (Pa); angles in rad.
  ControllerOutput tick(double pressure_meas, double roll_meas,
                        double pitch_meas, const ControllerSetpoint& setpoint,
                        double dt);
  void reset();

  const TrimState& trim() const { return trim_; }
  const ControllerConfig& config() const { return config_; }
  const Pid& pid_pressure() const { return pid_pressure_; }
  const Pid& pid_roll() const { return pid_roll_; }
  const Pid& pid_pitch() const { return pid_pitch_; }

 private:
  ControllerConfig config_;
  EnvironmentParams env_;
  double stroke_max_;
  TrimState trim_;
  Pid pid_pressure_;
  Pid pid_roll_;
  Pid pid_pitch_;
};
}  // namespace vbc

#endif  // VBC_CONTROL_HPP_
