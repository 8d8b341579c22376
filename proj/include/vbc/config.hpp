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

#ifndef VBC_CONFIG_HPP_
#define VBC_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vbc/control.hpp"
#include "vbc/environment.hpp"
#include "vbc/mission.hpp"
#include "vbc/sim.hpp"
#include "vbc/vehicle.hpp"

namespace vbc
{
/// Parameters of the built-in mission builders.  Only the group matching
/// `name` is used for a given run.
struct MissionConfig
{
  std::string name = "depth_hold";

  double depth_low = 0.17;
  double depth_high = 0.58;
  double depth_segment_duration = 60.0;
  int depth_repeats = 2;

  int saw_cycles = 4;
  double saw_amplitude_deg = 30.0;
  double saw_depth_shallow = 0.45;
  double saw_depth_deep = 0.60;
  double saw_segment_duration = 40.0;

  double prp_target_deg = 45.0;
  double prp_step_deg = 30.0;
  double prp_depth = 0.5;
  double prp_segment_duration = 15.0;
};

struct OutputConfig
{
  std::string dir = "out";
  bool write_logs = true;
};

/// Shipped feedback gains.  The vehicle dimensions and masses are
/// measured hardware values; these gains are simulation-tuned to meet the
/// tracking targets with the default drag model and are not authoritative.
ControllerConfig default_controller_config();

/// Everything a run needs, with the shipped defaults.  The default trim
/// makes the default vehicle neutrally buoyant at mid-stroke.
struct RunConfig
{
  VehicleGeometry vehicle;
  EnvironmentParams env;
  ControllerConfig controller = default_controller_config();
  DragModel drag;
  ActuatorDynamics actuator;
  double pressure_noise_sigma = 50.0;  // Pa
  double angle_noise_sigma_deg = 0.5;
  double dt = 1e-3;
  double control_rate = 20.0;
  std::uint64_t seed = 1;
  MissionConfig mission;
  OutputConfig output;

  RunConfig();
};

/// Mission names accepted by build_schedule and the run command.
const std::vector<std::string>& mission_names();

/// Builds the schedule selected by config.mission.name; throws
/// std::invalid_argument for an unknown name.
SetpointSchedule build_schedule(const RunConfig& config);

RunParams make_run_params(const RunConfig& config);
}  // namespace vbc

#endif  // VBC_CONFIG_HPP_
