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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "vbc/csv_log.hpp"
#include "vbc/metrics_io.hpp"

using namespace vbc;

namespace
{
namespace fs = std::filesystem;

struct TempFile
{
  fs::path path;
  explicit TempFile(const std::string& name)
      : path(fs::temp_directory_path() / name)
  {
  }
  ~TempFile() { std::remove(path.string().c_str()); }
};

TickLog sample_log()
{
  TickLog log;
  for (int k = 0; k < 7; ++k)
  {
    TickRecord r;
    r.t = 0.05 * k;
    r.pos_x = -0.1 * k;
    r.pos_y = 1e-15 * k;
    r.depth = 0.5 + 0.01 * k;
    r.roll = 0.02 * k - 0.05;
    r.pitch = -0.3;
    r.yaw = 3.1;
    for (int i = 0; i < 3; ++i)
    {
      r.vel[i] = 0.001 * (k + i);
      r.omega[i] = -0.002 * (k - i);
    }
    for (int i = 0; i < 4; ++i)
    {
      r.ext[i] = 0.025 * (i + 1);
      r.cmd[i] = 0.025 * (i + 1) + 1e-4 * k;
      r.open_loop[i] = 1e-6 * i;
      r.mixer[i] = -1e-3 * i * k;
      r.saturated[i] = (k + i) % 3 == 0;
    }
    r.sens_pressure = 101325.0 + 9810.0 * r.depth + 0.123 * k;
    r.sens_roll = r.roll + 1e-3;
    r.sens_pitch = r.pitch - 1e-3;
    r.sens_yaw = r.yaw;
    r.set_depth = 0.6;
    r.set_roll = 0.0;
    r.set_pitch = -0.29;
    r.pid_pressure = 123456.789;
    r.pid_roll = -0.0123;
    r.pid_pitch = 1e12;
    r.int_pressure = -2e4;
    r.int_roll = 0.5;
    r.int_pitch = -0.5;
    log.ticks.push_back(r);
  }
  return log;
}

MissionMetrics sample_metrics()
{
  MissionMetrics m;
  m.mission = "probe";
  m.duration = 42.5;
  m.ticks = 850;
  m.all_settled = true;
  m.net_displacement = Eigen::Vector3d(1.25, -0.5, -0.1);
  m.net_yaw = -0.75;
  m.yaw_at_segment_end = {-0.3, -0.75};
  m.lateral_drift_final = 0.2;
  m.lateral_drift_max = 0.6;
  m.depth_excursion_max = 0.15;
  m.actuator_duty = 3.25;
  SegmentMetrics s;
  s.index = 0;
  s.t_start = 0.0;
  s.duration = 20.0;
  s.depth_setpoint = 0.5;
  s.roll_setpoint = 0.5;  // rad; serialized in degrees
  s.settled = true;
  s.settling_time = 7.5;
  s.depth_err_ss = 0.004;
  s.roll_err_ss = 0.01;
  s.duty = 1.5;
  m.segments.push_back(s);
  s.index = 1;
  s.t_start = 20.0;
  s.settled = false;
  m.segments.push_back(s);
  return m;
}
}  // namespace

TEST_CASE("csv log round trips through a file")
{
  const TickLog log = sample_log();
  TempFile f("vbc_test_log.csv");
  write_csv(f.path.string(), log);
  const TickLog back = read_csv(f.path.string());

  REQUIRE(back.ticks.size() == log.ticks.size());
  for (std::size_t k = 0; k < log.ticks.size(); ++k)
  {
    const TickRecord& a = log.ticks[k];
    const TickRecord& b = back.ticks[k];
    CHECK(b.t == doctest::Approx(a.t).epsilon(1e-11));
    CHECK(b.pos_y == doctest::Approx(a.pos_y).epsilon(1e-11));
    CHECK(b.depth == doctest::Approx(a.depth).epsilon(1e-11));
    CHECK(b.sens_pressure == doctest::Approx(a.sens_pressure).epsilon(1e-11));
    CHECK(b.pid_pitch == doctest::Approx(a.pid_pitch).epsilon(1e-11));
    CHECK(b.saturated == a.saturated);
    for (int i = 0; i < 4; ++i)
    {
      CHECK(b.ext[i] == doctest::Approx(a.ext[i]).epsilon(1e-11));
      CHECK(b.mixer[i] == doctest::Approx(a.mixer[i]).epsilon(1e-11));
    }
  }

  // Identical content writes byte-identical files.
  TempFile g("vbc_test_log2.csv");
  write_csv(g.path.string(), log);
  std::ifstream s1(f.path), s2(g.path);
  const std::string t1((std::istreambuf_iterator<char>(s1)),
                       std::istreambuf_iterator<char>());
  const std::string t2((std::istreambuf_iterator<char>(s2)),
                       std::istreambuf_iterator<char>());
  CHECK(t1 == t2);
  CHECK(t1.substr(0, 2) == "t,");
}

TEST_CASE("csv reader rejects missing files and foreign headers")
{
  CHECK_THROWS_AS(read_csv("/nonexistent/vbc.csv"), std::runtime_error);

  TempFile f("vbc_bad_header.csv");
  std::ofstream(f.path) << "time,depth\n1,2\n";
  CHECK_THROWS_AS(read_csv(f.path.string()), std::runtime_error);

  TempFile g("vbc_bad_width.csv");
  write_csv(g.path.string(), sample_log());
  std::ofstream(g.path, std::ios::app) << "1,2,3\n";
  CHECK_THROWS_AS(read_csv(g.path.string()), std::runtime_error);

  try
  {
    read_csv("/nonexistent/vbc.csv");
  }
  catch (const std::runtime_error& e)
  {
    CHECK(std::string(e.what()).find("/nonexistent/vbc.csv") !=
          std::string::npos);
  }
}

TEST_CASE("metrics survive the json round trip")
{
  const MissionMetrics m = sample_metrics();
  const std::string text = metrics_to_json(m);
  const MissionMetrics back = metrics_from_json(text);

  CHECK(back.mission == m.mission);
  CHECK(back.duration == doctest::Approx(m.duration));
  CHECK(back.ticks == m.ticks);
  CHECK(back.all_settled == m.all_settled);
  CHECK(back.net_yaw == doctest::Approx(m.net_yaw).epsilon(1e-12));
  CHECK(back.net_displacement.isApprox(m.net_displacement, 1e-12));
  REQUIRE(back.yaw_at_segment_end.size() == 2);
  CHECK(back.yaw_at_segment_end[1] == doctest::Approx(-0.75));
  CHECK(back.actuator_duty == doctest::Approx(m.actuator_duty));
  REQUIRE(back.segments.size() == 2);
  CHECK(back.segments[0].roll_setpoint ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(back.segments[0].settled);
  CHECK_FALSE(back.segments[1].settled);
  CHECK(back.segments[1].t_start == 20.0);

  // Angles are stored in degrees for readability.
  CHECK(text.find("roll_setpoint_deg") != std::string::npos);
  CHECK(metrics_to_json(m).find("28.6478") != std::string::npos);
}

TEST_CASE("metrics reader names the offending file")
{
  CHECK_THROWS_AS(read_metrics_file("/nonexistent/vbc.json"),
                  std::runtime_error);
  TempFile f("vbc_bad_metrics.json");
  std::ofstream(f.path) << "{\"mission\": 3}";
  CHECK_THROWS_AS(read_metrics_file(f.path.string()), std::runtime_error);
  CHECK_THROWS_AS(metrics_from_json("not json"), std::runtime_error);
}

TEST_CASE("summary text lists every segment and the aggregates")
{
  const std::string text = summary_text(sample_metrics());
  CHECK(text.find("probe") != std::string::npos);
  CHECK(text.find("settled") != std::string::npos);
  CHECK(text.find("net yaw") != std::string::npos);
  CHECK(text.find("duty") != std::string::npos);
}
