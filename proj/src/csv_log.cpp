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

#include "vbc/csv_log.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vbc
{
namespace
{
constexpr std::size_t kColumns = 46;

std::array<double, kColumns> flatten(const TickRecord& r)
{
  std::array<double, kColumns> v{};
  std::size_t n = 0;
  v[n++] = r.t;
  v[n++] = r.pos_x;
  v[n++] = r.pos_y;
  v[n++] = r.depth;
  v[n++] = r.roll;
  v[n++] = r.pitch;
  v[n++] = r.yaw;
  for (double x : r.vel)
    v[n++] = x;
  for (double x : r.omega)
    v[n++] = x;
  for (double x : r.ext)
    v[n++] = x;
  for (double x : r.cmd)
    v[n++] = x;
  v[n++] = r.sens_pressure;
  v[n++] = r.sens_roll;
  v[n++] = r.sens_pitch;
  v[n++] = r.sens_yaw;
  v[n++] = r.set_depth;
  v[n++] = r.set_roll;
  v[n++] = r.set_pitch;
  v[n++] = r.pid_pressure;
  v[n++] = r.pid_roll;
  v[n++] = r.pid_pitch;
  v[n++] = r.int_pressure;
  v[n++] = r.int_roll;
  v[n++] = r.int_pitch;
  for (double x : r.open_loop)
    v[n++] = x;
  for (double x : r.mixer)
    v[n++] = x;
  for (bool b : r.saturated)
    v[n++] = b ? 1.0 : 0.0;
  return v;
}

TickRecord unflatten(const std::array<double, kColumns>& v)
{
  TickRecord r;
  std::size_t n = 0;
  r.t = v[n++];
  r.pos_x = v[n++];
  r.pos_y = v[n++];
  r.depth = v[n++];
  r.roll = v[n++];
  r.pitch = v[n++];
  r.yaw = v[n++];
  for (double& x : r.vel)
    x = v[n++];
  for (double& x : r.omega)
    x = v[n++];
  for (double& x : r.ext)
    x = v[n++];
  for (double& x : r.cmd)
    x = v[n++];
  r.sens_pressure = v[n++];
  r.sens_roll = v[n++];
  r.sens_pitch = v[n++];
  r.sens_yaw = v[n++];
  r.set_depth = v[n++];
  r.set_roll = v[n++];
  r.set_pitch = v[n++];
  r.pid_pressure = v[n++];
  r.pid_roll = v[n++];
  r.pid_pitch = v[n++];
  r.int_pressure = v[n++];
  r.int_roll = v[n++];
  r.int_pitch = v[n++];
  for (double& x : r.open_loop)
    x = v[n++];
  for (double& x : r.mixer)
    x = v[n++];
  for (bool& b : r.saturated)
    b = v[n++] != 0.0;
  return r;
}
}  // namespace

const std::vector<std::string>& csv_columns()
{
  static const std::vector<std::string> names = {
      "t", "pos_x", "pos_y", "depth", "roll", "pitch", "yaw",
      "vel_x", "vel_y", "vel_z", "omega_x", "omega_y", "omega_z",
      "ext_fl", "ext_bl", "ext_br", "ext_fr",
      "cmd_fl", "cmd_bl", "cmd_br", "cmd_fr",
      "sens_pressure", "sens_roll", "sens_pitch", "sens_yaw",
      "set_depth", "set_roll", "set_pitch",
      "pid_pressure", "pid_roll", "pid_pitch",
      "int_pressure", "int_roll", "int_pitch",
      "ol_fl", "ol_bl", "ol_br", "ol_fr",
      "mix_fl", "mix_bl", "mix_br", "mix_fr",
      "sat_fl", "sat_bl", "sat_br", "sat_fr"};
  return names;
}

void write_csv(const std::string& path, const TickLog& log)
{
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open '" + path + "' for writing");

  const auto& names = csv_columns();
  for (std::size_t i = 0; i < names.size(); ++i)
    out << (i ? "," : "") << names[i];
  out << "\n";

  char buf[32];
  for (const TickRecord& r : log.ticks)
  {
    const auto v = flatten(r);
    for (std::size_t i = 0; i < v.size(); ++i)
    {
      std::snprintf(buf, sizeof buf, "%.12g", v[i]);
      if (i)
        out << ',';
      out << buf;
    }
    out << "\n";
  }
  if (!out)
    throw std::runtime_error("failed writing '" + path + "'");
}

TickLog read_csv(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("'" + path + "': empty file");
  {
    std::ostringstream expected;
    const auto& names = csv_columns();
    for (std::size_t i = 0; i < names.size(); ++i)
      expected << (i ? "," : "") << names[i];
    if (line != expected.str())
      throw std::runtime_error("'" + path + "': unexpected CSV header");
  }

  TickLog log;
  std::size_t line_no = 1;
  while (std::getline(in, line))
  {
    ++line_no;
    if (line.empty())
      continue;
    std::array<double, kColumns> v{};
    std::size_t n = 0;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ','))
    {
      if (n >= kColumns)
        break;
      try
      {
        v[n++] = std::stod(cell);
      }
      catch (const std::exception&)
      {
        throw std::runtime_error("'" + path + "' line " +
                                 std::to_string(line_no) +
                                 ": bad number '" + cell + "'");
      }
    }
    if (n != kColumns)
      throw std::runtime_error("'" + path + "' line " +
                               std::to_string(line_no) +
                               ": expected " + std::to_string(kColumns) +
                               " columns");
    log.ticks.push_back(unflatten(v));
  }
  return log;
}
}  // namespace vbc
