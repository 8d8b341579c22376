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

// vbcsim: closed-loop simulator for a four-piston vectored buoyancy
// vehicle.  Exit codes: 0 success, 1 I/O or config error, 2 usage error,
// 3 simulation fault, 4 objective not met (unsettled run, infeasible trim).

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vbc/config.hpp"
#include "vbc/csv_log.hpp"
#include "vbc/metrics_io.hpp"
#include "options.hpp"

namespace
{
constexpr double kRadToDeg = 180.0 / M_PI;

const Eigen::IOFormat kMatrixFmt(6, 0, "  ", "\n", "  [", "]");

void print_engine_table(std::ostream& out, const Eigen::Vector4d& offsets,
                        const vbc::ControlCommand& command,
                        const std::array<bool, 4>& saturated)
{
  out << "  engine   offset (m)     command (m)    saturated\n";
  for (int i = 0; i < 4; ++i)
  {
    out << "  " << std::left << std::setw(9) << vbc::kActuatorNames[i]
        << std::right << std::setw(11) << offsets(i) << "    "
        << std::setw(11) << command[i] << "    "
        << (saturated[i] ? "yes" : "no") << "\n";
  }
}

int cmd_trim(const vbc::RunConfig& cfg)
{
  const vbc::TrimState trim =
      vbc::compute_trim(cfg.vehicle, cfg.env, cfg.controller.variant,
                        cfg.controller.reference_extension);
  std::cout << std::setprecision(6);
  std::cout << "trim at reference extension "
            << cfg.controller.reference_extension << " m\n";
  std::cout << "  static buoyancy g0_z: " << trim.g0(2) << " N\n";
  std::array<bool, 4> sat{};
  for (int i = 0; i < 4; ++i)
    sat[i] = trim.saturated &&
             (trim.command[i] == 0.0 ||
              trim.command[i] == cfg.vehicle.actuator.stroke_max);
  print_engine_table(std::cout, trim.offsets, trim.command, sat);
  std::cout << "  out-of-span residual: " << trim.residual_norm << " N\n";
  if (trim.saturated)
  {
    std::cout << "trim infeasible: a piston saturated at the reference "
                 "extension\n";
    return 4;
  }
  return 0;
}

int cmd_allocate(const vbc::RunConfig& cfg, const std::vector<double>& w)
{
  cfg.vehicle.validate();
  cfg.env.validate();
  vbc::WrenchTarget tau;
  tau.fx = w[0];
  tau.fy = w[1];
  tau.fz = w[2];
  tau.tau_x = w[3];
  tau.tau_y = w[4];
  tau.tau_z = w[5];

  const Eigen::Matrix<double, 6, 4> B =
      vbc::build_B(cfg.vehicle, cfg.env, cfg.controller.variant);
  const double ref = cfg.controller.reference_extension;
  // Same ballast-only g0 the trim uses: net vertical force at reference.
  Eigen::Matrix<double, 6, 1> g0 = Eigen::Matrix<double, 6, 1>::Zero();
  g0(2) = vbc::hydrostatic_wrench(cfg.vehicle,
                                  vbc::ActuatorState::uniform(ref),
                                  Eigen::Quaterniond::Identity(),
                                  cfg.env)(2);
  const double limit =
      std::min(ref, cfg.vehicle.actuator.stroke_max - ref);
  const vbc::AllocationResult alloc =
      vbc::allocate_open_loop(B, tau, g0, limit);

  std::cout << std::setprecision(6);
  std::cout << "allocation matrix B (rows fx fy fz tau_x tau_y tau_z; "
               "columns FL BL BR FR):\n"
            << B.format(kMatrixFmt) << "\n";
  std::cout << "static buoyancy g0_z at reference: " << g0(2) << " N\n";
  const vbc::CommandResult cmd = vbc::total_command(
      alloc.saturated_offsets, Eigen::Vector4d::Zero(),
      vbc::ControlCommand::uniform(ref), cfg.vehicle.actuator.stroke_max);
  print_engine_table(std::cout, alloc.offsets, cmd.command, alloc.saturated);
  std::cout << "residual wrench norm: " << alloc.residual.norm() << "\n";
  if (alloc.any_saturated)
    std::cout << "note: request exceeds the stroke about the reference\n";
  return 0;
}

struct RunOutputs
{
  std::string csv_path;
  std::string metrics_path;
};

RunOutputs write_run_outputs(const vbc::RunConfig& cfg,
                             const vbc::MissionResult& result)
{
  RunOutputs paths;
  if (!cfg.output.write_logs)
    return paths;
  std::filesystem::create_directories(cfg.output.dir);
  paths.csv_path =
      cfg.output.dir + "/" + result.metrics.mission + "_log.csv";
  paths.metrics_path =
      cfg.output.dir + "/" + result.metrics.mission + "_metrics.json";
  vbc::write_csv(paths.csv_path, result.log);
  vbc::write_metrics_file(paths.metrics_path, result.metrics);
  return paths;
}

int cmd_run(const vbc::RunConfig& cfg)
{
  const vbc::SetpointSchedule schedule = vbc::build_schedule(cfg);
  const vbc::MissionResult result =
      vbc::run_mission(schedule, vbc::make_run_params(cfg));

  const RunOutputs paths = write_run_outputs(cfg, result);
  std::cout << vbc::summary_text(result.metrics);
  if (!paths.csv_path.empty())
    std::cout << "wrote " << paths.csv_path << " and " << paths.metrics_path
              << "\n";

  if (result.metrics.fault)
  {
    std::cerr << "simulation fault at tick " << result.metrics.fault_tick
              << ": " << result.metrics.fault_message << "\n";
    return 3;
  }
  if (!result.metrics.all_settled)
  {
    std::cerr << "objective not met: not every segment settled\n";
    return 4;
  }
  return 0;
}

struct SweepRow
{
  std::string value;
  std::uint64_t seed = 0;
  vbc::MissionMetrics metrics;
  std::string error;
};

int cmd_sweep(const vbc::RunConfig& base, const std::string& param,
              std::vector<std::string> values,
              std::vector<std::uint64_t> seeds)
{
  if (values.empty() && seeds.empty())
  {
    std::cerr << "usage error: sweep needs --values and/or --seeds\n";
    return 2;
  }
  if (values.empty())
    values.push_back("");
  if (seeds.empty())
    seeds.push_back(base.seed);
  if (!values.front().empty() && param.empty())
  {
    std::cerr << "usage error: --values requires --param\n";
    return 2;
  }

  // Prepare configs serially so override typos fail before any run.
  std::vector<vbc::RunConfig> configs;
  std::vector<SweepRow> rows;
  for (const std::string& value : values)
  {
    for (std::uint64_t seed : seeds)
    {
      vbc::RunConfig c = base;
      if (!value.empty())
      {
        CLI::App shim;
        vbc::attach_options(shim, c);
        try
        {
          shim.parse("--" + param + "=" + value, false);
        }
        catch (const CLI::ParseError& e)
        {
          std::cerr << "usage error: cannot set " << param << "=" << value
                    << ": " << e.what() << "\n";
          return 2;
        }
      }
      c.seed = seed;
      c.output.write_logs = false;
      configs.push_back(c);
      rows.push_back(SweepRow{value, seed, {}, {}});
    }
  }

  const int n = static_cast<int>(configs.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i)
  {
    try
    {
      const vbc::SetpointSchedule schedule =
          vbc::build_schedule(configs[i]);
      rows[i].metrics =
          vbc::run_mission(schedule, vbc::make_run_params(configs[i]))
              .metrics;
    }
    catch (const std::exception& e)
    {
      rows[i].error = e.what();
    }
  }

  std::cout << std::setprecision(6);
  std::cout << "sweep" << (param.empty() ? "" : " of " + param) << ", "
            << n << " runs\n";
  std::cout << "  value        seed  settled  max_settle_s  depth_ss_m  "
               "net_yaw_deg  duty_m  status\n";
  nlohmann::json jrows = nlohmann::json::array();
  for (const SweepRow& r : rows)
  {
    double settle_max = 0.0;
    double depth_ss_max = 0.0;
    for (const auto& s : r.metrics.segments)
    {
      settle_max = std::max(settle_max, s.settling_time);
      depth_ss_max = std::max(depth_ss_max, s.depth_err_ss);
    }
    std::ostringstream line;
    line << "  " << std::left << std::setw(12)
         << (r.value.empty() ? "-" : r.value) << std::right << std::setw(5)
         << r.seed << "  " << std::setw(7)
         << (r.metrics.all_settled ? "yes" : "no") << "  " << std::setw(12)
         << settle_max << "  " << std::setw(10) << depth_ss_max << "  "
         << std::setw(11) << r.metrics.net_yaw * kRadToDeg << "  "
         << std::setw(6) << r.metrics.actuator_duty << "  ";
    if (!r.error.empty())
      line << "error: " << r.error;
    else if (r.metrics.fault)
      line << "fault";
    else
      line << "ok";
    std::cout << line.str() << "\n";

    nlohmann::json jr;
    jr["param"] = param;
    jr["value"] = r.value;
    jr["seed"] = r.seed;
    if (!r.error.empty())
      jr["error"] = r.error;
    else
      jr["metrics"] = nlohmann::json::parse(
          vbc::metrics_to_json(r.metrics));
    jrows.push_back(jr);
  }

  std::filesystem::create_directories(base.output.dir);
  const std::string path =
      base.output.dir + "/sweep" + (param.empty() ? "" : "_" + param) +
      ".json";
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  out << jrows.dump(2) << "\n";
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_report(const std::string& path)
{
  vbc::MissionMetrics metrics;
  if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
  {
    metrics = vbc::compute_metrics(vbc::read_csv(path));
    metrics.mission = std::filesystem::path(path).stem().string();
  }
  else
  {
    metrics = vbc::read_metrics_file(path);
  }
  std::cout << vbc::summary_text(metrics);
  return 0;
}

// CLI11 resolves dotted config keys through subcommand lookup, which never
// matches our flat "group.option" names.  Rejoin each item into its fully
// qualified name so both "[controller] / kp=..." sections and flat
// "controller.kp=..." lines address the same option, and unknown keys fail
// with the offending key spelled out.
class FlatIniConfig : public CLI::ConfigINI
{
 public:
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override
  {
    std::vector<CLI::ConfigItem> flat;
    for (CLI::ConfigItem item : CLI::ConfigINI::from_config(input))
    {
      if (item.name == "++" || item.name == "--") continue;  // section marks
      std::string full;
      for (const std::string& parent : item.parents) full += parent + ".";
      item.name = full + item.name;
      item.parents.clear();
      flat.push_back(std::move(item));
    }
    return flat;
  }
};
}  // namespace

int main(int argc, char** argv)
{
  vbc::RunConfig cfg;
  CLI::App app{
      "vbcsim: four-piston vectored buoyancy vehicle simulator and "
      "controller"};
  app.set_config("--config", "", "INI config file");
  app.config_formatter(std::make_shared<FlatIniConfig>());
  app.allow_config_extras(CLI::config_extras_mode::error);
  vbc::attach_options(app, cfg);
  app.require_subcommand(1);

  auto* trim_cmd = app.add_subcommand(
      "trim", "static piston offsets canceling the hydrostatic wrench");
  std::vector<double> wrench_vals;
  auto* alloc_cmd = app.add_subcommand(
      "allocate", "piston offsets realizing a desired wrench");
  alloc_cmd
      ->add_option("wrench", wrench_vals,
                   "fx fy fz tau_x tau_y tau_z (N, N m)")
      ->expected(6)
      ->required();
  auto* run_cmd =
      app.add_subcommand("run", "run a closed-loop mission");
  std::string mission_pos;
  run_cmd->add_option("mission", mission_pos, "mission name")
      ->check(CLI::IsMember(vbc::mission_names()));
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "repeat a mission across parameter values and seeds");
  std::string sweep_param;
  std::vector<std::string> sweep_values;
  std::vector<std::uint64_t> sweep_seeds;
  sweep_cmd->add_option("--param", sweep_param,
                        "option name to vary, e.g. controller.pressure_kp");
  sweep_cmd->add_option("--values", sweep_values, "comma-separated values")
      ->delimiter(',');
  sweep_cmd->add_option("--seeds", sweep_seeds, "comma-separated seeds")
      ->delimiter(',');
  auto* report_cmd = app.add_subcommand(
      "report", "summarize a metrics JSON or tick-log CSV");
  std::string report_path;
  report_cmd->add_option("path", report_path, "file to summarize")
      ->required();

  for (auto* sub : {trim_cmd, alloc_cmd, run_cmd, sweep_cmd, report_cmd})
    sub->fallthrough();

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp& e)
  {
    return app.exit(e);
  }
  catch (const CLI::CallForAllHelp& e)
  {
    return app.exit(e);
  }
  catch (const CLI::FileError& e)
  {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }
  catch (const CLI::ConfigError& e)
  {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }
  catch (const CLI::ParseError& e)
  {
    app.exit(e);
    return 2;
  }

  try
  {
    if (*trim_cmd)
      return cmd_trim(cfg);
    if (*alloc_cmd)
      return cmd_allocate(cfg, wrench_vals);
    if (*run_cmd)
    {
      if (!mission_pos.empty())
        cfg.mission.name = mission_pos;
      return cmd_run(cfg);
    }
    if (*sweep_cmd)
      return cmd_sweep(cfg, sweep_param, sweep_values, sweep_seeds);
    if (*report_cmd)
      return cmd_report(report_path);
  }
  catch (const vbc::SimulationFault& e)
  {
    std::cerr << "simulation fault: " << e.what() << "\n";
    return 3;
  }
  catch (const std::invalid_argument& e)
  {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }
  catch (const std::domain_error& e)
  {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }
  catch (const std::exception& e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
