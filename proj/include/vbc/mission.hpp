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

#ifndef VBC_MISSION_HPP_
#define VBC_MISSION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vbc/control.hpp"
#include "vbc/environment.hpp"
#include "vbc/sim.hpp"
#include "vbc/vehicle.hpp"

namespace vbc
{
/// One schedule segment: the setpoint holds from t_start until the next
/// segment starts (or the mission ends).
struct Setpoint
{
  double t_start = 0.0;
  ControllerSetpoint target;
};

struct SetpointSchedule
{
  std::string name;
  std::vector<Setpoint> segments;
  double duration = 0.0;
  /// Depth the vehicle starts at, level and at rest.
  double initial_depth = 0.0;

  /// Throws std::invalid_argument on an empty schedule, non-monotonic
  /// times, depths outside [0, env.depth_max] or angles beyond +-80 deg.
  void validate(const EnvironmentParams& env) const;
  const ControllerSetpoint& at(double t) const;
  std::size_t segment_index(double t) const;
};

/// Alternating depth steps between two setpoints, starting and holding at
/// the shallow one first.
SetpointSchedule depth_hold_mission(double depth_low, double depth_high,
                                    double segment_duration, int repeats);

enum class SawtoothAxis
{
  kPitch,
  kRoll
};

/// Glide cycles: tilt one way while diving to the deep setpoint, tilt the
/// other way while climbing back.  A positive pitch amplitude drops the
/// nose on the dive leg; a positive roll amplitude drops the starboard
/// side.  amplitude may be negative (mirrored glide) or zero (pure heave).
SetpointSchedule sawtooth_mission(SawtoothAxis axis, int cycles,
                                  double amplitude, double depth_shallow,
                                  double depth_deep,
                                  double segment_duration);

/// Net yaw of the loop pitch(theta) -> +roll(phi) -> -pitch -> -roll
/// composed as body-frame rotations (rad).  Buoyancy actuation has no yaw
/// authority; this non-commuting loop is the only way to turn.  The value
/// sizes yaw_prp blocks.  Note the closed-loop vehicle turns with
/// sign(theta * phi), opposite this composition: the pistons only push
/// vertically, so each leg rotates the hull about a world-horizontal axis
/// rather than a body axis.
double prp_block_yaw(double theta, double phi);

/// Repeated pitch/roll blocks at constant depth accumulating yaw toward
/// target_yaw.  Each block holds four setpoints for segment_duration
/// seconds: (step, 0), (step, phi), (0, phi), (0, 0) in (pitch, roll),
/// with the sign of phi chosen so each block turns toward the target and
/// the block count rounding |target| to the nearest whole block (at least
/// one).  A zero step or target degenerates into a single level hold.
SetpointSchedule yaw_prp_mission(double target_yaw, double step_angle,
                                 double depth, double segment_duration);

/// Everything a closed-loop run needs besides the schedule.
struct RunParams
{
  VehicleGeometry geom;
  EnvironmentParams env;
  DragModel drag;
  ActuatorDynamics actuator;
  SensorNoise noise;
  ControllerConfig controller;
  /// Physics step (s); the control period must be an integer multiple.
  double dt = 1e-3;
  /// Feedback rate (Hz).
  double control_rate = 20.0;
  std::uint64_t seed = 1;

  void validate() const;
};

/// One row per control tick.  True state, sensor readings, setpoints, PID
/// internals and the commanded/actual extensions; the CSV log mirrors
/// these fields exactly.
struct TickRecord
{
  double t = 0.0;
  double pos_x = 0.0, pos_y = 0.0, depth = 0.0;
  double roll = 0.0, pitch = 0.0, yaw = 0.0;
  std::array<double, 3> vel = {0.0, 0.0, 0.0};
  std::array<double, 3> omega = {0.0, 0.0, 0.0};
  std::array<double, 4> ext = {0.0, 0.0, 0.0, 0.0};
  std::array<double, 4> cmd = {0.0, 0.0, 0.0, 0.0};
  double sens_pressure = 0.0;
  double sens_roll = 0.0, sens_pitch = 0.0, sens_yaw = 0.0;
  double set_depth = 0.0, set_roll = 0.0, set_pitch = 0.0;
  double pid_pressure = 0.0, pid_roll = 0.0, pid_pitch = 0.0;
  double int_pressure = 0.0, int_roll = 0.0, int_pitch = 0.0;
  std::array<double, 4> open_loop = {0.0, 0.0, 0.0, 0.0};
  std::array<double, 4> mixer = {0.0, 0.0, 0.0, 0.0};
  std::array<bool, 4> saturated = {false, false, false, false};
};

struct TickLog
{
  std::vector<TickRecord> ticks;
};

/// Per-segment tracking quality.  Settling means all three channels stay
/// in band for 5 consecutive seconds; the depth band is 5% of the
/// commanded step (at least 2 cm) and the angle bands are +-2 deg.
/// Steady-state errors average the absolute error over the segment's last
/// 5 seconds.
struct SegmentMetrics
{
  std::size_t index = 0;
  double t_start = 0.0;
  double duration = 0.0;
  double depth_setpoint = 0.0;
  double roll_setpoint = 0.0;
  double pitch_setpoint = 0.0;
  bool settled = false;
  double settling_time = 0.0;
  double depth_err_ss = 0.0;
  double roll_err_ss = 0.0;
  double pitch_err_ss = 0.0;
  double duty = 0.0;
};

struct MissionMetrics
{
  std::string mission;
  double duration = 0.0;
  std::size_t ticks = 0;
  std::vector<SegmentMetrics> segments;
  bool all_settled = false;
  /// World-frame displacement from the start (x, y, z-up).
  Eigen::Vector3d net_displacement = Eigen::Vector3d::Zero();
  /// Unwrapped heading change over the run (rad).
  double net_yaw = 0.0;
  /// Unwrapped yaw at each segment boundary (rad).
  std::vector<double> yaw_at_segment_end;
  double lateral_drift_final = 0.0;
  double lateral_drift_max = 0.0;
  /// Largest |depth - depth setpoint| over the run (m).
  double depth_excursion_max = 0.0;
  /// Total commanded piston travel, summed over engines (m).
  double actuator_duty = 0.0;
  bool fault = false;
  std::size_t fault_tick = 0;
  std::string fault_message;
};

struct MissionResult
{
  TickLog log;
  MissionMetrics metrics;
  RigidBodyState final_state;
  ActuatorState final_extensions;
};

/// Runs the closed loop over the schedule: sample sensors, tick the
/// controller, then integrate physics substeps until the next control
/// tick.  Deterministic for a fixed schedule, params and seed.  A
/// SimulationFault ends the run early and is recorded in the metrics
/// instead of propagating.
MissionResult run_mission(const SetpointSchedule& schedule,
                          const RunParams& params);

/// Segment boundaries and all aggregate metrics recovered from a tick log
/// alone; setpoint changes delimit segments.
MissionMetrics compute_metrics(const TickLog& log);
}  // namespace vbc

#endif  // VBC_MISSION_HPP_
