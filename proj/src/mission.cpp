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

#include "vbc/mission.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vbc/rotations.hpp"

namespace vbc
{
namespace
{
constexpr double kMaxCommandAngle = 80.0 * M_PI / 180.0;
constexpr double kSettleWindow = 5.0;    // s in band before settled
constexpr double kAngleBand = 2.0 * M_PI / 180.0;
constexpr double kDepthBandFraction = 0.05;
constexpr double kDepthBandFloor = 0.02;  // m, for zero-step segments

void require(bool ok, const std::string& msg)
{
  if (!ok)
    throw std::invalid_argument(msg);
}
}  // namespace

void SetpointSchedule::validate(const EnvironmentParams& env) const
{
  require(!segments.empty(), "schedule '" + name + "' has no segments");
  require(segments.front().t_start == 0.0,
          "schedule '" + name + "' must start at t = 0");
  for (std::size_t i = 0; i < segments.size(); ++i)
  {
    const Setpoint& s = segments[i];
    if (i > 0)
      require(s.t_start > segments[i - 1].t_start,
              "schedule '" + name + "' segment times must increase");
    std::ostringstream where;
    where << "schedule '" << name << "' segment " << i;
    require(s.target.depth >= 0.0 && s.target.depth <= env.depth_max,
            where.str() + ": depth outside [0, " +
                std::to_string(env.depth_max) + "]");
    require(std::abs(s.target.roll) <= kMaxCommandAngle &&
                std::abs(s.target.pitch) <= kMaxCommandAngle,
            where.str() + ": angle setpoints must be within +-80 deg");
  }
  require(duration > segments.back().t_start,
          "schedule '" + name + "' duration must extend past the last segment");
  require(initial_depth >= 0.0 && initial_depth <= env.depth_max,
          "schedule '" + name + "' initial depth outside [0, depth_max]");
}

std::size_t SetpointSchedule::segment_index(double t) const
{
  std::size_t idx = 0;
  for (std::size_t i = 0; i < segments.size(); ++i)
  {
    if (segments[i].t_start <= t)
      idx = i;
    else
      break;
  }
  return idx;
}

const ControllerSetpoint& SetpointSchedule::at(double t) const
{
  return segments[segment_index(t)].target;
}

SetpointSchedule depth_hold_mission(double depth_low, double depth_high,
                                    double segment_duration, int repeats)
{
  require(repeats >= 1, "depth_hold: repeats must be >= 1");
  require(segment_duration > 0.0,
          "depth_hold: segment_duration must be positive");
  SetpointSchedule s;
  s.name = "depth_hold";
  s.initial_depth = depth_low;
  for (int r = 0; r < repeats; ++r)
  {
    s.segments.push_back(
        {2 * r * segment_duration, ControllerSetpoint{depth_low, 0.0, 0.0}});
    s.segments.push_back({(2 * r + 1) * segment_duration,
                          ControllerSetpoint{depth_high, 0.0, 0.0}});
  }
  s.duration = 2.0 * repeats * segment_duration;
  return s;
}

SetpointSchedule sawtooth_mission(SawtoothAxis axis, int cycles,
                                  double amplitude, double depth_shallow,
                                  double depth_deep, double segment_duration)
{
  require(cycles >= 1, "sawtooth: cycles must be >= 1");
  require(segment_duration > 0.0,
          "sawtooth: segment_duration must be positive");
  require(std::abs(amplitude) < kMaxCommandAngle,
          "sawtooth: |amplitude| must be under 80 deg");
  require(depth_deep > depth_shallow && depth_shallow > 0.0,
          "sawtooth: need depth_deep > depth_shallow > 0");

  SetpointSchedule s;
  s.name = axis == SawtoothAxis::kPitch ? "sawtooth_pitch" : "sawtooth_roll";
  s.initial_depth = depth_shallow;
  for (int k = 0; k < 2 * cycles; ++k)
  {
    const bool dive = k % 2 == 0;
    // Tilt one way on the dive leg, the other way on the climb.
    const double angle = dive ? amplitude : -amplitude;
    ControllerSetpoint sp;
    sp.depth = dive ? depth_deep : depth_shallow;
    (axis == SawtoothAxis::kPitch ? sp.pitch : sp.roll) = angle;
    s.segments.push_back({k * segment_duration, sp});
  }
  s.duration = 2.0 * cycles * segment_duration;
  return s;
}

double prp_block_yaw(double theta, double phi)
{
  // Body-frame sequence composes on the right.
  const Eigen::Quaterniond q =
      Eigen::Quaterniond(Eigen::AngleAxisd(theta, Eigen::Vector3d::UnitY())) *
      Eigen::Quaterniond(Eigen::AngleAxisd(phi, Eigen::Vector3d::UnitX())) *
      Eigen::Quaterniond(Eigen::AngleAxisd(-theta, Eigen::Vector3d::UnitY())) *
      Eigen::Quaterniond(Eigen::AngleAxisd(-phi, Eigen::Vector3d::UnitX()));
  return euler_from_quat(q).yaw;
}

SetpointSchedule yaw_prp_mission(double target_yaw, double step_angle,
                                 double depth, double segment_duration)
{
  require(step_angle >= 0.0 && step_angle < kMaxCommandAngle,
          "yaw_prp: step_angle must be in [0, 80) deg");
  require(segment_duration > 0.0,
          "yaw_prp: segment_duration must be positive");

  SetpointSchedule s;
  s.name = "yaw_prp";
  s.initial_depth = depth;

  const double base_yaw = prp_block_yaw(step_angle, step_angle);
  if (step_angle == 0.0 || target_yaw == 0.0 || base_yaw == 0.0)
  {
    // Degenerate request: hold level for one block's worth of time.
    s.segments.push_back({0.0, ControllerSetpoint{depth, 0.0, 0.0}});
    s.duration = 4.0 * segment_duration;
    return s;
  }

  // The composition estimate sizes the block count. The closed-loop yaw
  // direction is sign(theta * phi), opposite to that estimate: the pistons
  // exert world-vertical forces only, so rolling while pitched turns the
  // hull about a world-horizontal axis whose body-z projection carries the
  // yaw. Pick the roll sign that walks toward the target.
  const double phi = target_yaw > 0.0 ? step_angle : -step_angle;
  const int blocks = std::max(
      1L, std::lround(std::abs(target_yaw) / std::abs(base_yaw)));

  for (int b = 0; b < blocks; ++b)
  {
    const double t0 = 4.0 * b * segment_duration;
    const double d = depth;
    s.segments.push_back(
        {t0, ControllerSetpoint{d, 0.0, step_angle}});
    s.segments.push_back(
        {t0 + segment_duration, ControllerSetpoint{d, phi, step_angle}});
    s.segments.push_back(
        {t0 + 2.0 * segment_duration, ControllerSetpoint{d, phi, 0.0}});
    s.segments.push_back(
        {t0 + 3.0 * segment_duration, ControllerSetpoint{d, 0.0, 0.0}});
  }
  s.duration = 4.0 * blocks * segment_duration;
  return s;
}

void RunParams::validate() const
{
  geom.validate();
  env.validate();
  drag.validate();
  actuator.validate();
  noise.validate();
  controller.pressure.validate();
  controller.roll.validate();
  controller.pitch.validate();
  require(dt > 0.0 && std::isfinite(dt), "run: dt must be positive");
  require(control_rate > 0.0 && std::isfinite(control_rate),
          "run: control_rate must be positive");
  const double sub = 1.0 / (control_rate * dt);
  require(std::abs(sub - std::lround(sub)) < 1e-9 * sub && sub >= 1.0,
          "run: the control period must be an integer number of physics "
          "steps");
  require(controller.reference_extension >= 0.0 &&
              controller.reference_extension <= geom.actuator.stroke_max,
          "run: reference extension outside the stroke");
}

MissionResult run_mission(const SetpointSchedule& schedule,
                          const RunParams& params)
{
  params.validate();
  schedule.validate(params.env);

  const double dt_c = 1.0 / params.control_rate;
  const int n_sub = static_cast<int>(std::lround(dt_c / params.dt));
  const std::size_t n_ticks = static_cast<std::size_t>(
      std::lround(schedule.duration * params.control_rate));

  Controller controller(params.controller, params.geom, params.env);
  SensorModel sensors(params.noise, params.seed);

  MissionResult result;
  result.log.ticks.reserve(n_ticks);

  RigidBodyState state;
  state.position.z() = -schedule.initial_depth;
  ActuatorState ext =
      ActuatorState::uniform(params.controller.reference_extension);

  bool fault = false;
  std::size_t fault_tick = 0;
  std::string fault_message;

  for (std::size_t k = 0; k < n_ticks; ++k)
  {
    const double t = static_cast<double>(k) * dt_c;
    const ControllerSetpoint& sp = schedule.at(t);
    const SensorReading reading = sensors.sample(state, params.env, t);
    const ControllerOutput out =
        controller.tick(reading.pressure, reading.roll, reading.pitch, sp,
                        dt_c);

    TickRecord r;
    r.t = t;
    r.pos_x = state.position.x();
    r.pos_y = state.position.y();
    r.depth = state.depth();
    const EulerAngles e = state.euler();
    r.roll = e.roll;
    r.pitch = e.pitch;
    r.yaw = e.yaw;
    for (int i = 0; i < 3; ++i)
    {
      r.vel[i] = state.velocity(i);
      r.omega[i] = state.angular_velocity(i);
    }
    for (int i = 0; i < 4; ++i)
    {
      r.ext[i] = ext[i];
      r.cmd[i] = out.command[i];
      r.open_loop[i] = controller.trim().offsets(i);
      r.mixer[i] = out.mixer(i);
      r.saturated[i] = out.saturated[i];
    }
    r.sens_pressure = reading.pressure;
    r.sens_roll = reading.roll;
    r.sens_pitch = reading.pitch;
    r.sens_yaw = reading.yaw;
    r.set_depth = sp.depth;
    r.set_roll = sp.roll;
    r.set_pitch = sp.pitch;
    r.pid_pressure = out.pid_pressure;
    r.pid_roll = out.pid_roll;
    r.pid_pitch = out.pid_pitch;
    r.int_pressure = controller.pid_pressure().integrator();
    r.int_roll = controller.pid_roll().integrator();
    r.int_pitch = controller.pid_pitch().integrator();
    result.log.ticks.push_back(r);

    try
    {
      for (int j = 0; j < n_sub; ++j)
      {
        ext = actuator_update(out.command, ext, params.actuator,
                              params.geom.actuator.stroke_max, params.dt);
        state = step(state, params.geom, ext, params.env, params.drag,
                     params.dt);
      }
    }
    catch (const SimulationFault& f)
    {
      fault = true;
      fault_tick = k;
      fault_message = f.what();
      break;
    }
  }

  result.final_state = state;
  result.final_extensions = ext;
  result.metrics = compute_metrics(result.log);
  result.metrics.mission = schedule.name;
  result.metrics.fault = fault;
  result.metrics.fault_tick = fault_tick;
  result.metrics.fault_message = fault_message;
  return result;
}

MissionMetrics compute_metrics(const TickLog& log)
{
  MissionMetrics m;
  m.ticks = log.ticks.size();
  if (log.ticks.empty())
    return m;

  const auto& ticks = log.ticks;
  const double dt = ticks.size() > 1 ? ticks[1].t - ticks[0].t : 0.0;
  m.duration = ticks.back().t + dt;

  // Setpoint changes delimit segments.
  std::vector<std::size_t> starts = {0};
  for (std::size_t k = 1; k < ticks.size(); ++k)
  {
    if (ticks[k].set_depth != ticks[k - 1].set_depth ||
        ticks[k].set_roll != ticks[k - 1].set_roll ||
        ticks[k].set_pitch != ticks[k - 1].set_pitch)
      starts.push_back(k);
  }
  starts.push_back(ticks.size());

  const auto in_band = [&](const TickRecord& r, double band_depth) {
    return std::abs(r.depth - r.set_depth) <= band_depth &&
           std::abs(wrap_angle(r.roll - r.set_roll)) <= kAngleBand &&
           std::abs(wrap_angle(r.pitch - r.set_pitch)) <= kAngleBand;
  };

  double prev_depth_target = ticks[0].depth;
  m.all_settled = true;
  for (std::size_t s = 0; s + 1 < starts.size(); ++s)
  {
    const std::size_t i0 = starts[s];
    const std::size_t i1 = starts[s + 1];
    const double t_end = i1 < ticks.size() ? ticks[i1].t : m.duration;

    SegmentMetrics seg;
    seg.index = s;
    seg.t_start = ticks[i0].t;
    seg.duration = t_end - seg.t_start;
    seg.depth_setpoint = ticks[i0].set_depth;
    seg.roll_setpoint = ticks[i0].set_roll;
    seg.pitch_setpoint = ticks[i0].set_pitch;

    const double band_depth =
        std::max(kDepthBandFraction *
                     std::abs(seg.depth_setpoint - prev_depth_target),
                 kDepthBandFloor);
    prev_depth_target = seg.depth_setpoint;

    // Earliest window of kSettleWindow seconds fully in band.
    const std::size_t window =
        dt > 0.0 ? static_cast<std::size_t>(std::lround(kSettleWindow / dt))
                 : 1;
    std::vector<int> bad(i1 - i0 + 1, 0);
    for (std::size_t k = i0; k < i1; ++k)
      bad[k - i0 + 1] = bad[k - i0] + (in_band(ticks[k], band_depth) ? 0 : 1);
    for (std::size_t l = i0; l + window <= i1; ++l)
    {
      if (bad[l - i0 + window] - bad[l - i0] == 0)
      {
        seg.settled = true;
        seg.settling_time = ticks[l].t - seg.t_start;
        break;
      }
    }

    // Steady state: mean |error| over the last kSettleWindow seconds.
    const double t_ss = std::max(seg.t_start, t_end - kSettleWindow);
    std::size_t n_ss = 0;
    for (std::size_t k = i0; k < i1; ++k)
    {
      if (ticks[k].t < t_ss)
        continue;
      seg.depth_err_ss += std::abs(ticks[k].depth - seg.depth_setpoint);
      seg.roll_err_ss += std::abs(wrap_angle(ticks[k].roll - seg.roll_setpoint));
      seg.pitch_err_ss +=
          std::abs(wrap_angle(ticks[k].pitch - seg.pitch_setpoint));
      ++n_ss;
    }
    if (n_ss > 0)
    {
      seg.depth_err_ss /= n_ss;
      seg.roll_err_ss /= n_ss;
      seg.pitch_err_ss /= n_ss;
    }

    for (std::size_t k = std::max<std::size_t>(i0, 1); k < i1; ++k)
    {
      for (int i = 0; i < 4; ++i)
        seg.duty += std::abs(ticks[k].ext[i] - ticks[k - 1].ext[i]);
    }

    m.all_settled = m.all_settled && seg.settled;
    m.actuator_duty += seg.duty;
    m.segments.push_back(seg);
  }

  const TickRecord& first = ticks.front();
  const TickRecord& last = ticks.back();
  m.net_displacement = Eigen::Vector3d(last.pos_x - first.pos_x,
                                       last.pos_y - first.pos_y,
                                       first.depth - last.depth);

  double yaw_acc = 0.0;
  std::size_t seg_cursor = 1;
  for (std::size_t k = 0; k < ticks.size(); ++k)
  {
    if (k > 0)
      yaw_acc += wrap_angle(ticks[k].yaw - ticks[k - 1].yaw);
    const double drift =
        std::hypot(ticks[k].pos_x - first.pos_x, ticks[k].pos_y - first.pos_y);
    m.lateral_drift_max = std::max(m.lateral_drift_max, drift);
    m.depth_excursion_max = std::max(
        m.depth_excursion_max, std::abs(ticks[k].depth - ticks[k].set_depth));
    // Record unwrapped yaw at the last tick of each segment.
    while (seg_cursor < starts.size() && k + 1 == starts[seg_cursor])
    {
      m.yaw_at_segment_end.push_back(yaw_acc);
      ++seg_cursor;
    }
  }
  m.net_yaw = yaw_acc;
  m.lateral_drift_final =
      std::hypot(last.pos_x - first.pos_x, last.pos_y - first.pos_y);
  return m;
}
}  // namespace vbc
