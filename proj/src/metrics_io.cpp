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

#include "vbc/metrics_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace vbc
{
namespace
{
constexpr double kRadToDeg = 180.0 / M_PI;

nlohmann::json segment_to_json(const SegmentMetrics& s)
{
  return nlohmann::json{
      {"index", s.index},
      {"t_start", s.t_start},
      {"duration", s.duration},
      {"depth_setpoint", s.depth_setpoint},
      {"roll_setpoint_deg", s.roll_setpoint * kRadToDeg},
      {"pitch_setpoint_deg", s.pitch_setpoint * kRadToDeg},
      {"settled", s.settled},
      {"settling_time", s.settling_time},
      {"depth_err_ss", s.depth_err_ss},
      {"roll_err_ss_deg", s.roll_err_ss * kRadToDeg},
      {"pitch_err_ss_deg", s.pitch_err_ss * kRadToDeg},
      {"duty", s.duty}};
}

SegmentMetrics segment_from_json(const nlohmann::json& j)
{
  SegmentMetrics s;
  s.index = j.at("index").get<std::size_t>();
  s.t_start = j.at("t_start").get<double>();
  s.duration = j.at("duration").get<double>();
  s.depth_setpoint = j.at("depth_setpoint").get<double>();
  s.roll_setpoint = j.at("roll_setpoint_deg").get<double>() / kRadToDeg;
  s.pitch_setpoint = j.at("pitch_setpoint_deg").get<double>() / kRadToDeg;
  s.settled = j.at("settled").get<bool>();
  s.settling_time = j.at("settling_time").get<double>();
  s.depth_err_ss = j.at("depth_err_ss").get<double>();
  s.roll_err_ss = j.at("roll_err_ss_deg").get<double>() / kRadToDeg;
  s.pitch_err_ss = j.at("pitch_err_ss_deg").get<double>() / kRadToDeg;
  s.duty = j.at("duty").get<double>();
  return s;
}
}  // namespace

std::string metrics_to_json(const MissionMetrics& m)
{
  nlohmann::json j;
  j["mission"] = m.mission;
  j["duration"] = m.duration;
  j["ticks"] = m.ticks;
  j["all_settled"] = m.all_settled;
  j["segments"] = nlohmann::json::array();
  for (const auto& s : m.segments)
    j["segments"].push_back(segment_to_json(s));
  j["net_displacement"] = {m.net_displacement.x(), m.net_displacement.y(),
                           m.net_displacement.z()};
  j["net_yaw_deg"] = m.net_yaw * kRadToDeg;
  j["yaw_at_segment_end_deg"] = nlohmann::json::array();
  for (double y : m.yaw_at_segment_end)
    j["yaw_at_segment_end_deg"].push_back(y * kRadToDeg);
  j["lateral_drift_final"] = m.lateral_drift_final;
  j["lateral_drift_max"] = m.lateral_drift_max;
  j["depth_excursion_max"] = m.depth_excursion_max;
  j["actuator_duty"] = m.actuator_duty;
  j["fault"] = m.fault;
  if (m.fault)
  {
    j["fault_tick"] = m.fault_tick;
    j["fault_message"] = m.fault_message;
  }
  return j.dump(2) + "\n";
}

MissionMetrics metrics_from_json(const std::string& json_text)
{
  nlohmann::json j;
  try
  {
    j = nlohmann::json::parse(json_text);
  }
  catch (const nlohmann::json::exception& e)
  {
    throw std::runtime_error(std::string("metrics json: ") + e.what());
  }
  MissionMetrics m;
  m.mission = j.at("mission").get<std::string>();
  m.duration = j.at("duration").get<double>();
  m.ticks = j.at("ticks").get<std::size_t>();
  m.all_settled = j.at("all_settled").get<bool>();
  for (const auto& js : j.at("segments"))
    m.segments.push_back(segment_from_json(js));
  const auto& nd = j.at("net_displacement");
  m.net_displacement =
      Eigen::Vector3d(nd.at(0).get<double>(), nd.at(1).get<double>(),
                      nd.at(2).get<double>());
  m.net_yaw = j.at("net_yaw_deg").get<double>() / kRadToDeg;
  for (const auto& y : j.at("yaw_at_segment_end_deg"))
    m.yaw_at_segment_end.push_back(y.get<double>() / kRadToDeg);
  m.lateral_drift_final = j.at("lateral_drift_final").get<double>();
  m.lateral_drift_max = j.at("lateral_drift_max").get<double>();
  m.depth_excursion_max = j.at("depth_excursion_max").get<double>();
  m.actuator_duty = j.at("actuator_duty").get<double>();
  m.fault = j.at("fault").get<bool>();
  if (m.fault)
  {
    m.fault_tick = j.at("fault_tick").get<std::size_t>();
    m.fault_message = j.at("fault_message").get<std::string>();
  }
  return m;
}

void write_metrics_file(const std::string& path, const MissionMetrics& m)
{
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  out << metrics_to_json(m);
  if (!out)
    throw std::runtime_error("failed writing '" + path + "'");
}

MissionMetrics read_metrics_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try
  {
    return metrics_from_json(buf.str());
  }
  catch (const nlohmann::json::exception& e)
  {
    throw std::runtime_error("'" + path + "' is not a metrics file: " +
                             e.what());
  }
}

std::string summary_text(const MissionMetrics& m)
{
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "mission " << m.mission << ": " << m.duration << " s, " << m.ticks
      << " control ticks\n";
  for (const auto& s : m.segments)
  {
    out << "  segment " << s.index << " @" << s.t_start << "s"
        << "  depth " << s.depth_setpoint << "m"
        << "  roll " << s.roll_setpoint * kRadToDeg << "deg"
        << "  pitch " << s.pitch_setpoint * kRadToDeg << "deg"
        << "  | ";
    if (s.settled)
      out << "settled in " << s.settling_time << "s";
    else
      out << "did not settle";
    out << ", ss err " << s.depth_err_ss << "m / "
        << s.roll_err_ss * kRadToDeg << "deg / "
        << s.pitch_err_ss * kRadToDeg << "deg\n";
  }
  out << "  net displacement (" << m.net_displacement.x() << ", "
      << m.net_displacement.y() << ", " << m.net_displacement.z() << ") m\n";
  out << "  net yaw " << m.net_yaw * kRadToDeg << " deg, lateral drift "
      << m.lateral_drift_final << " m (max " << m.lateral_drift_max
      << " m)\n";
  out << "  max depth excursion " << m.depth_excursion_max
      << " m, actuator duty " << m.actuator_duty << " m\n";
  if (m.fault)
    out << "  FAULT at tick " << m.fault_tick << ": " << m.fault_message
        << "\n";
  return out.str();
}
}  // namespace vbc
