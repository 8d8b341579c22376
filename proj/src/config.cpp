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

#include "vbc/config.hpp"

#include <cmath>
#include <stdexcept>

namespace vbc
{
namespace
{
constexpr double kDegToRad = M_PI / 180.0;

// Default passive trim: neutral and torque balanced at mid-stroke for the
// default geometry (see neutralized_trim).  Frozen so the shipped config
// is plain numbers; a test re-derives them.
constexpr double kDefaultTrimVolume = 9.07386347687506e-4;
constexpr double kDefaultTrimX = 3.8832195184650294e-3;
constexpr double kDefaultTrimZ = 0.08;
}  // namespace

ControllerConfig default_controller_config()
{
  ControllerConfig c;
  // Gains sized against the piston slew limit (8 mm/s): the depth loop
  // must stay slow enough that commanded steps do not wind up against the
  // actuator, or the vehicle limit-cycles around the setpoint.
  c.pressure.kp = 1.5e-6;
  c.pressure.ki = 2e-7;
  c.pressure.kd = 8e-6;
  c.pressure.i_limit = 2e4;
  c.pressure.out_limit = 0.0;
  c.pressure.d_filter_tau = 0.7;

  c.roll.kp = 0.005;
  c.roll.ki = 0.01;
  c.roll.kd = 0.015;
  c.roll.i_limit = 2.0;
  c.roll.out_limit = 0.0;
  c.roll.d_filter_tau = 0.3;

  c.pitch = c.roll;

  c.variant = BMatrixVariant::kGeometric;
  c.reference_extension = 0.05;
  return c;
}

RunConfig::RunConfig()
{
  vehicle.trim.added_volume = kDefaultTrimVolume;
  vehicle.trim.location = Eigen::Vector3d(kDefaultTrimX, 0.0, kDefaultTrimZ);
}

const std::vector<std::string>& mission_names()
{
  static const std::vector<std::string> names = {
      "depth_hold", "sawtooth_pitch", "sawtooth_roll", "yaw_prp"};
  return names;
}

SetpointSchedule build_schedule(const RunConfig& config)
{
  const MissionConfig& m = config.mission;
  if (m.name == "depth_hold")
  {
    return depth_hold_mission(m.depth_low, m.depth_high,
                              m.depth_segment_duration, m.depth_repeats);
  }
  if (m.name == "sawtooth_pitch" || m.name == "sawtooth_roll")
  {
    return sawtooth_mission(m.name == "sawtooth_pitch" ? SawtoothAxis::kPitch
                                                       : SawtoothAxis::kRoll,
                            m.saw_cycles, m.saw_amplitude_deg * kDegToRad,
                            m.saw_depth_shallow, m.saw_depth_deep,
                            m.saw_segment_duration);
  }
  if (m.name == "yaw_prp")
  {
    return yaw_prp_mission(m.prp_target_deg * kDegToRad,
                           m.prp_step_deg * kDegToRad, m.prp_depth,
                           m.prp_segment_duration);
  }
  throw std::invalid_argument("unknown mission '" + m.name + "'");
}

RunParams make_run_params(const RunConfig& config)
{
  RunParams p;
  p.geom = config.vehicle;
  p.env = config.env;
  p.drag = config.drag;
  p.actuator = config.actuator;
  p.noise.pressure_sigma = config.pressure_noise_sigma;
  p.noise.angle_sigma = config.angle_noise_sigma_deg * kDegToRad;
  p.controller = config.controller;
  p.dt = config.dt;
  p.control_rate = config.control_rate;
  p.seed = config.seed;
  return p;
}
}  // namespace vbc
