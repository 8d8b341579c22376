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

#include "options.hpp"

#include <map>
#include <string>

namespace vbc
{
namespace
{
void add_gain_options(CLI::App& app, const std::string& channel,
                      PidGains& gains)
{
  const std::string p = "--controller." + channel + "_";
  app.add_option(p + "kp", gains.kp)->capture_default_str();
  app.add_option(p + "ki", gains.ki)->capture_default_str();
  app.add_option(p + "kd", gains.kd)->capture_default_str();
  app.add_option(p + "i_limit", gains.i_limit, "0 disables the clamp")
      ->capture_default_str();
  app.add_option(p + "out_limit", gains.out_limit, "0 disables the clamp")
      ->capture_default_str();
  app.add_option(p + "d_tau", gains.d_filter_tau,
                 "derivative low-pass time constant (s); 0 = raw")
      ->capture_default_str();
}
}  // namespace

void attach_options(CLI::App& app, RunConfig& cfg)
{
  app.option_defaults()->ignore_case(false);

  // vehicle
  auto* v = &cfg.vehicle;
  app.add_option("--vehicle.plate_length", v->plate.length, "m")
      ->capture_default_str();
  app.add_option("--vehicle.plate_width", v->plate.width, "m")
      ->capture_default_str();
  app.add_option("--vehicle.plate_thickness", v->plate.thickness, "m")
      ->capture_default_str();
  app.add_option("--vehicle.plate_mass", v->plate.mass, "kg")
      ->capture_default_str();
  app.add_option("--vehicle.plate_x", v->plate.com.x(), "m")
      ->capture_default_str();
  app.add_option("--vehicle.plate_y", v->plate.com.y(), "m")
      ->capture_default_str();
  app.add_option("--vehicle.plate_z", v->plate.com.z(), "m")
      ->capture_default_str();

  app.add_option("--vehicle.engine_diameter", v->engine_static.diameter, "m")
      ->capture_default_str();
  app.add_option("--vehicle.engine_length", v->engine_static.cyl_length, "m")
      ->capture_default_str();
  app.add_option("--vehicle.engine_mass", v->engine_static.mass, "kg")
      ->capture_default_str();
  app.add_option("--vehicle.engine_x", v->engine_static.com.x(), "m")
      ->capture_default_str();
  app.add_option("--vehicle.engine_y", v->engine_static.com.y(),
                 "m; mirrored for the right side")
      ->capture_default_str();
  app.add_option("--vehicle.engine_z", v->engine_static.com.z(), "m")
      ->capture_default_str();

  app.add_option("--vehicle.housing_diameter", v->housing.diameter, "m")
      ->capture_default_str();
  app.add_option("--vehicle.housing_length", v->housing.cyl_length, "m")
      ->capture_default_str();
  app.add_option("--vehicle.housing_mass", v->housing.mass, "kg")
      ->capture_default_str();
  app.add_option("--vehicle.housing_x", v->housing.com.x(), "m")
      ->capture_default_str();
  app.add_option("--vehicle.housing_y", v->housing.com.y(), "m")
      ->capture_default_str();
  app.add_option("--vehicle.housing_z", v->housing.com.z(), "m")
      ->capture_default_str();

  app.add_option("--vehicle.piston_diameter", v->actuator.piston_diameter,
                 "m")
      ->capture_default_str();
  app.add_option("--vehicle.stroke_max", v->actuator.stroke_max, "m")
      ->capture_default_str();
  app.add_option("--vehicle.mount_x", v->actuator.mount.x(),
                 "m; engines sit at (+-mount_x, +-mount_y, mount_z)")
      ->capture_default_str();
  app.add_option("--vehicle.mount_y", v->actuator.mount.y(), "m")
      ->capture_default_str();
  app.add_option("--vehicle.mount_z", v->actuator.mount.z(), "m")
      ->capture_default_str();
  app.add_option("--vehicle.moving_mass", v->actuator.moving_mass,
                 "kg per piston")
      ->capture_default_str();

  app.add_option("--vehicle.trim_mass", v->trim.added_mass, "kg")
      ->capture_default_str();
  app.add_option("--vehicle.trim_volume", v->trim.added_volume, "m^3")
      ->capture_default_str();
  app.add_option("--vehicle.trim_x", v->trim.location.x(), "m")
      ->capture_default_str();
  app.add_option("--vehicle.trim_y", v->trim.location.y(), "m")
      ->capture_default_str();
  app.add_option("--vehicle.trim_z", v->trim.location.z(), "m")
      ->capture_default_str();

  // environment
  app.add_option("--environment.rho", cfg.env.rho, "kg/m^3")
      ->capture_default_str();
  app.add_option("--environment.g", cfg.env.g, "m/s^2")
      ->capture_default_str();
  app.add_option("--environment.p_atm", cfg.env.p_atm, "Pa")
      ->capture_default_str();
  app.add_option("--environment.current_x", cfg.env.current.x(), "m/s")
      ->capture_default_str();
  app.add_option("--environment.current_y", cfg.env.current.y(), "m/s")
      ->capture_default_str();
  app.add_option("--environment.current_z", cfg.env.current.z(), "m/s")
      ->capture_default_str();
  app.add_option("--environment.depth_max", cfg.env.depth_max, "m")
      ->capture_default_str();

  // controller
  static const std::map<std::string, BMatrixVariant> variants{
      {"geometric", BMatrixVariant::kGeometric},
      {"paper", BMatrixVariant::kPaper}};
  app.add_option("--controller.b_matrix", cfg.controller.variant,
                 "pitch-row signing of the allocation matrix")
      ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case))
      ->default_str("geometric");
  app.add_option("--controller.reference_extension",
                 cfg.controller.reference_extension, "m")
      ->capture_default_str();
  add_gain_options(app, "pressure", cfg.controller.pressure);
  add_gain_options(app, "roll", cfg.controller.roll);
  add_gain_options(app, "pitch", cfg.controller.pitch);

  // sim
  app.add_option("--sim.dt", cfg.dt, "physics step (s)")
      ->capture_default_str();
  app.add_option("--sim.control_rate", cfg.control_rate, "Hz")
      ->capture_default_str();
  app.add_option("--sim.seed", cfg.seed, "sensor noise seed")
      ->envname("VBC_SEED")
      ->capture_default_str();
  app.add_option("--sim.pressure_noise", cfg.pressure_noise_sigma,
                 "1-sigma (Pa)")
      ->capture_default_str();
  app.add_option("--sim.angle_noise_deg", cfg.angle_noise_sigma_deg,
                 "1-sigma (deg)")
      ->capture_default_str();
  app.add_option("--sim.actuator_speed", cfg.actuator.max_speed, "m/s")
      ->capture_default_str();
  app.add_option("--sim.actuator_deadband", cfg.actuator.deadband, "m")
      ->capture_default_str();
  app.add_option("--sim.drag_x", cfg.drag.linear.x(), "N s^2/m^2")
      ->capture_default_str();
  app.add_option("--sim.drag_y", cfg.drag.linear.y(), "N s^2/m^2")
      ->capture_default_str();
  app.add_option("--sim.drag_z", cfg.drag.linear.z(), "N s^2/m^2")
      ->capture_default_str();
  app.add_option("--sim.drag_rot_x", cfg.drag.angular.x(), "N m s^2")
      ->capture_default_str();
  app.add_option("--sim.drag_rot_y", cfg.drag.angular.y(), "N m s^2")
      ->capture_default_str();
  app.add_option("--sim.drag_rot_z", cfg.drag.angular.z(), "N m s^2")
      ->capture_default_str();
  app.add_option("--sim.added_mass_x", cfg.drag.added_mass(0), "kg")
      ->capture_default_str();
  app.add_option("--sim.added_mass_y", cfg.drag.added_mass(1), "kg")
      ->capture_default_str();
  app.add_option("--sim.added_mass_z", cfg.drag.added_mass(2), "kg")
      ->capture_default_str();
  app.add_option("--sim.added_mass_rot_x", cfg.drag.added_mass(3), "kg m^2")
      ->capture_default_str();
  app.add_option("--sim.added_mass_rot_y", cfg.drag.added_mass(4), "kg m^2")
      ->capture_default_str();
  app.add_option("--sim.added_mass_rot_z", cfg.drag.added_mass(5), "kg m^2")
      ->capture_default_str();

  // mission
  app.add_option("--mission.name", cfg.mission.name)
      ->check(CLI::IsMember(mission_names()))
      ->capture_default_str();
  app.add_option("--mission.depth_low", cfg.mission.depth_low, "m")
      ->capture_default_str();
  app.add_option("--mission.depth_high", cfg.mission.depth_high, "m")
      ->capture_default_str();
  app.add_option("--mission.depth_segment", cfg.mission.depth_segment_duration,
                 "s")
      ->capture_default_str();
  app.add_option("--mission.depth_repeats", cfg.mission.depth_repeats)
      ->capture_default_str();
  app.add_option("--mission.saw_cycles", cfg.mission.saw_cycles)
      ->capture_default_str();
  app.add_option("--mission.saw_amplitude_deg", cfg.mission.saw_amplitude_deg,
                 "tilt amplitude; sign mirrors the glide")
      ->capture_default_str();
  app.add_option("--mission.saw_shallow", cfg.mission.saw_depth_shallow, "m")
      ->capture_default_str();
  app.add_option("--mission.saw_deep", cfg.mission.saw_depth_deep, "m")
      ->capture_default_str();
  app.add_option("--mission.saw_segment", cfg.mission.saw_segment_duration,
                 "s")
      ->capture_default_str();
  app.add_option("--mission.prp_target_deg", cfg.mission.prp_target_deg)
      ->capture_default_str();
  app.add_option("--mission.prp_step_deg", cfg.mission.prp_step_deg)
      ->capture_default_str();
  app.add_option("--mission.prp_depth", cfg.mission.prp_depth, "m")
      ->capture_default_str();
  app.add_option("--mission.prp_segment", cfg.mission.prp_segment_duration,
                 "s")
      ->capture_default_str();

  // output
  app.add_option("--output.dir", cfg.output.dir)
      ->envname("VBC_OUT_DIR")
      ->capture_default_str();
  app.add_flag("--output.write_logs,!--output.no_logs",
               cfg.output.write_logs, "write CSV and metrics files")
      ->capture_default_str();
}
}  // namespace vbc
