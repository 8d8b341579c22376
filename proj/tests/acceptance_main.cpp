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

// End-to-end acceptance gate: ten numbered checks of the shipped defaults,
// one PASS/FAIL line each.  Every tolerance is pinned here, next to the
// check that uses it.  Exit code is the number of failed checks.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vbc/config.hpp"
#include "vbc/control.hpp"
#include "vbc/csv_log.hpp"
#include "vbc/mission.hpp"
#include "vbc/sim.hpp"
#include "vbc/vehicle.hpp"

namespace
{
constexpr double kDeg = M_PI / 180.0;

int g_failures = 0;

void report(int index, bool pass, const std::string& detail)
{
  std::printf("[%2d] %s  %s\n", index, pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass)
    ++g_failures;
}

std::string fmt(const char* format, ...)
{
  va_list args;
  va_start(args, format);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

vbc::RigidBodyState at_depth(double depth)
{
  vbc::RigidBodyState s;
  s.position = Eigen::Vector3d(0.0, 0.0, -depth);
  return s;
}

// 1. Pressure-to-depth anchors at the two gauge pressures the depth-hold
//    mission steps between.
void criterion_pressure_anchors()
{
  const vbc::EnvironmentParams env;
  const double shallow = vbc::pressure_to_depth(103000.0, env).depth;
  const double deep = vbc::pressure_to_depth(107000.0, env).depth;
  const bool pass = shallow >= 0.165 && shallow <= 0.175 &&
                    deep >= 0.575 && deep <= 0.582;
  report(1, pass,
         fmt("pressure anchors: 103 kPa -> %.4f m (want 0.165..0.175), "
             "107 kPa -> %.4f m (want 0.575..0.582)",
             shallow, deep));
}

// 2. Open-loop allocation on 100 random reachable wrenches: the residual
//    inside the allocation span stays below 1e-9, and no point of a 21^4
//    brute-force offset grid beats the returned solution.
void criterion_allocation_oracle()
{
  const vbc::RunConfig config;
  const Eigen::Matrix<double, 6, 4> B = vbc::build_B(
      config.vehicle, config.env, vbc::BMatrixVariant::kGeometric);
  const Eigen::Matrix<double, 4, 6> Bp = vbc::pseudo_inverse(B);

  constexpr double kBox = 0.025;        // grid covers +-25 mm offsets
  constexpr int kPoints = 21;           // per axis, 2.5 mm spacing
  constexpr double kSpanTol = 1e-9;     // in-span residual bound
  constexpr double kGridSlack = 1e-12;  // fp slack on the optimality check

  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> box(-kBox, kBox);

  double worst_span = 0.0;
  double worst_gap = 0.0;
  bool pass = true;
  for (int trial = 0; trial < 100; ++trial)
  {
    Eigen::Vector4d u0;
    for (int i = 0; i < 4; ++i)
      u0(i) = box(rng);
    const Eigen::Matrix<double, 6, 1> b = B * u0;

    vbc::WrenchTarget target;
    target.fz = b(2);
    target.tau_x = b(3);
    target.tau_y = b(4);
    const vbc::AllocationResult r = vbc::allocate_open_loop(
        B, target, Eigen::Matrix<double, 6, 1>::Zero(), kBox);

    const double span_resid = (Bp * r.residual).norm();
    worst_span = std::max(worst_span, span_resid);
    if (span_resid >= kSpanTol)
      pass = false;

    // Only rows fz/tau_x/tau_y are nonzero; search the grid on those.
    const Eigen::Matrix<double, 3, 4> B3 = B.middleRows<3>(2);
    const Eigen::Vector3d b3 = b.segment<3>(2);
    const Eigen::Vector3d best3 = B3 * r.offsets - b3;
    const double best_norm = best3.norm();

    double grid_min = std::numeric_limits<double>::infinity();
    const double h = 2.0 * kBox / (kPoints - 1);
    for (int i0 = 0; i0 < kPoints; ++i0)
      for (int i1 = 0; i1 < kPoints; ++i1)
        for (int i2 = 0; i2 < kPoints; ++i2)
        {
          const Eigen::Vector3d base = B3.col(0) * (-kBox + h * i0) +
                                       B3.col(1) * (-kBox + h * i1) +
                                       B3.col(2) * (-kBox + h * i2) - b3;
          for (int i3 = 0; i3 < kPoints; ++i3)
          {
            const double n =
                (base + B3.col(3) * (-kBox + h * i3)).squaredNorm();
            grid_min = std::min(grid_min, n);
          }
        }
    grid_min = std::sqrt(grid_min);

    // The continuous minimizer can never lose to a grid point.
    worst_gap = std::max(worst_gap, best_norm - grid_min);
    if (best_norm > grid_min + kGridSlack)
      pass = false;
  }
  report(2, pass,
         fmt("allocation: 100 random wrenches, worst in-span residual "
             "%.2e (< 1e-9), worst solve-vs-grid gap %.2e (< 1e-12)",
             worst_span, worst_gap));
}

// 3. Mixer columns are exact sign patterns and the map stays linear and
//    invertible (column recovery) on random inputs.
void criterion_mixer_exactness()
{
  const Eigen::Vector4d cp = vbc::mix(1.0, 0.0, 0.0);
  const Eigen::Vector4d cr = vbc::mix(0.0, 1.0, 0.0);
  const Eigen::Vector4d cq = vbc::mix(0.0, 0.0, 1.0);
  bool pass = cp == Eigen::Vector4d(1.0, 1.0, 1.0, 1.0) &&
              cr == Eigen::Vector4d(-1.0, -1.0, 1.0, 1.0) &&
              cq == Eigen::Vector4d(1.0, -1.0, -1.0, 1.0) &&
              cp.dot(cr) == 0.0 && cp.dot(cq) == 0.0 && cr.dot(cq) == 0.0;

  constexpr double kLinTol = 1e-12;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k)
  {
    const double p1 = u(rng), r1 = u(rng), q1 = u(rng);
    const double p2 = u(rng), r2 = u(rng), q2 = u(rng);
    const double a = u(rng);
    const Eigen::Vector4d lhs =
        vbc::mix(a * p1 + p2, a * r1 + r2, a * q1 + q2);
    const Eigen::Vector4d rhs =
        a * vbc::mix(p1, r1, q1) + vbc::mix(p2, r2, q2);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());

    // Orthogonal columns make channel recovery a dot product.
    const Eigen::Vector4d m = vbc::mix(p1, r1, q1);
    worst = std::max(worst, std::abs(m.dot(cp) / 4.0 - p1));
    worst = std::max(worst, std::abs(m.dot(cr) / 4.0 - r1));
    worst = std::max(worst, std::abs(m.dot(cq) / 4.0 - q1));
  }
  pass = pass && worst < kLinTol;
  report(3, pass,
         fmt("mixer: unit columns exact, 1000 random linearity/recovery "
             "checks worst error %.2e (< 1e-12)",
             worst));
}

// 4. A neutrally trimmed vehicle released at rest stays put for 100
//    simulated seconds.
void criterion_equilibrium_hold()
{
  const vbc::RunConfig config;
  const vbc::EnvironmentParams env;
  const vbc::ActuatorState mid = vbc::ActuatorState::uniform(0.05);

  constexpr double kPosTol = 1e-6;  // m
  constexpr double kAngTol = 1e-6;  // rad

  vbc::RigidBodyState s = at_depth(0.5);
  const Eigen::Vector3d start = s.position;
  for (int k = 0; k < 100000; ++k)
    s = vbc::step(s, config.vehicle, mid, env, vbc::DragModel{}, 1e-3);

  const double dp = (s.position - start).norm();
  const double da = s.attitude.angularDistance(Eigen::Quaterniond::Identity());
  const bool pass = dp < kPosTol && da < kAngTol;
  report(4, pass,
         fmt("equilibrium: 100 s drift %.2e m (< 1e-6), attitude %.2e rad "
             "(< 1e-6)",
             dp, da));
}

// 5. Depth-hold mission on shipped defaults: every segment settles inside
//    60 simulated seconds with tight steady-state error, and the whole run
//    finishes within the wall-clock budget.
void criterion_depth_hold()
{
  vbc::RunConfig config;
  config.mission.name = "depth_hold";
  const vbc::SetpointSchedule schedule = vbc::build_schedule(config);
  const vbc::RunParams params = vbc::make_run_params(config);

  constexpr double kDepthTol = 0.02;   // m
  constexpr double kAngleTol = 2.0;    // deg
  constexpr double kSettleMax = 60.0;  // s per segment
  constexpr double kWallMax = 30.0;    // s for the whole mission

  const auto t0 = std::chrono::steady_clock::now();
  const vbc::MissionResult res = vbc::run_mission(schedule, params);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  bool pass = !res.metrics.fault && wall < kWallMax;
  double worst_settle = 0.0, worst_depth = 0.0, worst_angle = 0.0;
  for (const auto& seg : res.metrics.segments)
  {
    worst_settle = std::max(worst_settle, seg.settling_time);
    worst_depth = std::max(worst_depth, std::abs(seg.depth_err_ss));
    worst_angle = std::max(worst_angle,
                           std::max(std::abs(seg.roll_err_ss),
                                    std::abs(seg.pitch_err_ss)) / kDeg);
    pass = pass && seg.settled && seg.settling_time < kSettleMax &&
           std::abs(seg.depth_err_ss) <= kDepthTol &&
           std::abs(seg.roll_err_ss) <= kAngleTol * kDeg &&
           std::abs(seg.pitch_err_ss) <= kAngleTol * kDeg;
  }
  report(5, pass,
         fmt("depth hold: %zu/%zu segments settled, worst settle %.1f s "
             "(< 60), ss depth %.3f m (<= 0.02), ss angle %.2f deg (<= 2), "
             "wall %.2f s (< 30)",
             res.metrics.segments.size() -
                 static_cast<std::size_t>(std::count_if(
                     res.metrics.segments.begin(),
                     res.metrics.segments.end(),
                     [](const vbc::SegmentMetrics& m) { return !m.settled; })),
             res.metrics.segments.size(), worst_settle, worst_depth,
             worst_angle, wall));
}

// 6. Sawtooth transit in a 3 m tank: the pitched glide covers more than
//    half a meter over four cycles and mirrors when the amplitude flips;
//    the rolled glide does the same in y.
void criterion_sawtooth_transit()
{
  constexpr double kMinTravel = 0.5;  // m over four cycles

  auto net = [](const char* mission, double amplitude_deg) {
    vbc::RunConfig config;
    config.env.depth_max = 3.0;
    config.mission.name = mission;
    config.mission.saw_amplitude_deg = amplitude_deg;
    const vbc::MissionResult res =
        vbc::run_mission(vbc::build_schedule(config),
                         vbc::make_run_params(config));
    return res.metrics.net_displacement;
  };

  const double x_fwd = net("sawtooth_pitch", 30.0).x();
  const double x_rev = net("sawtooth_pitch", -30.0).x();
  const double y_fwd = net("sawtooth_roll", 30.0).y();
  const double y_rev = net("sawtooth_roll", -30.0).y();

  const bool pass = std::abs(x_fwd) > kMinTravel &&
                    std::abs(x_rev) > kMinTravel &&
                    x_fwd * x_rev < 0.0 && std::abs(y_fwd) > kMinTravel &&
                    std::abs(y_rev) > kMinTravel && y_fwd * y_rev < 0.0;
  report(6, pass,
         fmt("sawtooth: net x %+.2f / %+.2f m, net y %+.2f / %+.2f m "
             "(|each| > 0.5, signs mirror)",
             x_fwd, x_rev, y_fwd, y_rev));
}

// 7. Yaw maneuver: the default 30/30 block sequence accumulates at least
//    20 deg of heading with small drift and depth excursion, zero-amplitude
//    blocks do not turn, and the per-block increment is compared against
//    the body-axis rotation-composition estimate (within 25%, same sign).
//    The last clause fails by design of the vehicle: piston forces are
//    world-vertical, so the closed loop turns opposite the body-axis
//    composition (see prp_block_yaw); the measured numbers are printed.
void criterion_yaw_prp()
{
  constexpr double kMinNetYaw = 20.0;      // deg
  constexpr double kMaxDrift = 0.25;       // m
  constexpr double kMaxExcursion = 0.1;    // m
  constexpr double kMaxZeroYaw = 0.5;      // deg
  constexpr double kBlockRelTol = 0.25;    // vs composition estimate

  vbc::RunConfig config;
  config.mission.name = "yaw_prp";
  const vbc::MissionResult res = vbc::run_mission(
      vbc::build_schedule(config), vbc::make_run_params(config));

  vbc::RunConfig zero = config;
  zero.mission.prp_step_deg = 0.0;
  const vbc::MissionResult res0 = vbc::run_mission(
      vbc::build_schedule(zero), vbc::make_run_params(zero));

  const double net_yaw = res.metrics.net_yaw / kDeg;
  const double zero_yaw = std::abs(res0.metrics.net_yaw) / kDeg;
  const bool motion_ok = std::abs(net_yaw) >= kMinNetYaw &&
                         res.metrics.lateral_drift_max < kMaxDrift &&
                         res.metrics.depth_excursion_max < kMaxExcursion &&
                         zero_yaw < kMaxZeroYaw;

  // Per-block increments from the unwrapped yaw at block boundaries.
  const auto& ye = res.metrics.yaw_at_segment_end;
  std::vector<double> blocks;
  for (std::size_t b = 0; 4 * b + 3 < ye.size(); ++b)
    blocks.push_back((ye[4 * b + 3] - (b ? ye[4 * b - 1] : 0.0)) / kDeg);
  const double estimate =
      vbc::prp_block_yaw(config.mission.prp_step_deg * kDeg,
                         config.mission.prp_step_deg * kDeg) / kDeg;
  bool blocks_ok = !blocks.empty();
  double mean_block = 0.0;
  for (double y : blocks)
  {
    mean_block += y / blocks.size();
    blocks_ok = blocks_ok && y * estimate > 0.0 &&
                std::abs(y - estimate) <= kBlockRelTol * std::abs(estimate);
  }

  report(7, motion_ok && blocks_ok,
         fmt("yaw blocks: net %+.1f deg (|net| >= 20), drift %.3f m "
             "(< 0.25), depth excursion %.3f m (< 0.1), zero-step %.2f deg "
             "(< 0.5); per-block %+.1f deg vs composed %+.1f deg "
             "(want same sign, +-25%%)%s",
             net_yaw, res.metrics.lateral_drift_max,
             res.metrics.depth_excursion_max, zero_yaw, mean_block, estimate,
             blocks_ok ? ""
                       : " -- vertical-force actuation turns opposite the "
                         "composition; see docs/yaw_dynamics.md"));
}

// 8. First-order convergence of the integrator: halving dt roughly halves
//    the terminal-state change on a 10 s closed-loop run, three halvings
//    in a row.
void criterion_dt_convergence()
{
  constexpr double kRatioLo = 1.5;
  constexpr double kRatioHi = 2.6;

  vbc::SetpointSchedule schedule;
  schedule.name = "canonical";
  schedule.initial_depth = 0.5;
  schedule.segments.push_back(
      {0.0, vbc::ControllerSetpoint{0.55, 5.0 * kDeg, -5.0 * kDeg}});
  schedule.segments.push_back(
      {5.0, vbc::ControllerSetpoint{0.45, -5.0 * kDeg, 10.0 * kDeg}});
  schedule.duration = 10.0;

  vbc::RunConfig config;
  vbc::RunParams params = vbc::make_run_params(config);
  params.noise.pressure_sigma = 0.0;
  params.noise.angle_sigma = 0.0;
  params.actuator.deadband = 0.0;  // stiction is not dt-continuous

  std::vector<vbc::RigidBodyState> finals;
  for (const double dt : {5e-3, 2.5e-3, 1.25e-3, 6.25e-4, 3.125e-4})
  {
    params.dt = dt;
    finals.push_back(vbc::run_mission(schedule, params).final_state);
  }

  std::vector<double> diffs;
  for (std::size_t i = 0; i + 1 < finals.size(); ++i)
  {
    const auto& a = finals[i];
    const auto& b = finals[i + 1];
    diffs.push_back((a.position - b.position).norm() +
                    (a.velocity - b.velocity).norm() +
                    a.attitude.angularDistance(b.attitude) +
                    (a.angular_velocity - b.angular_velocity).norm());
  }

  bool pass = true;
  std::ostringstream ratios;
  for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
  {
    const double ratio = diffs[i] / diffs[i + 1];
    ratios << (i ? ", " : "") << fmt("%.2f", ratio);
    pass = pass && ratio > kRatioLo && ratio < kRatioHi;
  }
  report(8, pass,
         fmt("dt convergence: halving ratios %s (want 1.5..2.6)",
             ratios.str().c_str()));
}

// 9. Determinism: identical config and seed give byte-identical CSV logs.
void criterion_determinism()
{
  vbc::RunConfig config;
  config.mission.name = "depth_hold";
  const vbc::SetpointSchedule schedule = vbc::build_schedule(config);
  const vbc::RunParams params = vbc::make_run_params(config);

  const auto dir = std::filesystem::temp_directory_path();
  const std::string a = (dir / "vbcsim_acceptance_a.csv").string();
  const std::string b = (dir / "vbcsim_acceptance_b.csv").string();

  vbc::write_csv(a, vbc::run_mission(schedule, params).log);
  vbc::write_csv(b, vbc::run_mission(schedule, params).log);

  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string ca = slurp(a), cb = slurp(b);
  const bool pass = !ca.empty() && ca == cb;
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  report(9, pass,
         fmt("determinism: two seeded depth-hold runs, %zu-byte CSVs %s",
             ca.size(), pass ? "identical" : "DIFFER"));
}

// 10. Any mission commanding a depth beyond the 12 m rating fails
//     validation before the simulation starts.
void criterion_depth_limit()
{
  bool deep_throws = false;
  try
  {
    vbc::RunConfig config;
    config.mission.name = "depth_hold";
    config.mission.depth_high = 12.5;
    vbc::build_schedule(config).validate(config.env);
  }
  catch (const std::invalid_argument&)
  {
    deep_throws = true;
  }

  bool prp_throws = false;
  try
  {
    vbc::RunConfig config;
    config.mission.name = "yaw_prp";
    config.mission.prp_depth = 13.0;
    vbc::build_schedule(config).validate(config.env);
  }
  catch (const std::invalid_argument&)
  {
    prp_throws = true;
  }

  bool ok_passes = false;
  try
  {
    vbc::RunConfig config;
    vbc::build_schedule(config).validate(config.env);
    ok_passes = true;
  }
  catch (...)
  {
  }

  const bool pass = deep_throws && prp_throws && ok_passes;
  report(10, pass,
         fmt("depth limit: 12.5 m hold %s, 13 m yaw depth %s, defaults %s",
             deep_throws ? "rejected" : "ACCEPTED",
             prp_throws ? "rejected" : "ACCEPTED",
             ok_passes ? "accepted" : "REJECTED"));
}
}  // namespace

int main()
{
  criterion_pressure_anchors();
  criterion_allocation_oracle();
  criterion_mixer_exactness();
  criterion_equilibrium_hold();
  criterion_depth_hold();
  criterion_sawtooth_transit();
  criterion_yaw_prp();
  criterion_dt_convergence();
  criterion_determinism();
  criterion_depth_limit();

  std::printf("acceptance: %d/10 criteria passed\n", 10 - g_failures);
  return g_failures;
}
