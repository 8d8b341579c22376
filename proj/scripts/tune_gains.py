#!/usr/bin/env python3
# Copyright (c) 2026 The VBCsim Authors.
# All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Gain tuning harness around `vbcsim sweep`.

The shipped gains (configs/default.ini, src/config.cpp) came out of grids
run with this script.  The binding constraint is the piston slew limit
(sim.actuator_speed, 8 mm/s): any loop fast enough to demand more volume
rate than the pistons deliver winds up the integrator and limit-cycles
around the setpoint, so the depth loop is tuned soft and the attitude
loops carry most of their damping in kd.  The procedure per channel:

  1. sweep kp over a decade with ki=kd=0 and keep the largest value that
     settles every segment without oscillating,
  2. add ki to close the steady-state gap left by sensor noise and the
     actuator deadband,
  3. add kd (with its low-pass d_tau) until the overshoot goes away,
     stopping before duty climbs, which is the chatter signature.

Example:

    python3 scripts/tune_gains.py --param controller.pressure_kp \
        --values 5e-7,1e-6,1.5e-6,2.5e-6,5e-6 --mission depth_hold

Aggregates worst-case metrics across seeds per value.  Requires a built
binary (default build/tools/vbcsim).
"""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile


def run_sweep(binary, mission, param, values, seeds, extra):
    """Runs one `vbcsim sweep` into a scratch directory and returns the
    parsed row list."""
    with tempfile.TemporaryDirectory(prefix="vbcsim_tune_") as tmp:
        cmd = [
            binary,
            "--mission.name", mission,
            "--output.dir", tmp,
            *extra,
            "sweep",
            "--param", param,
            "--values", ",".join(values),
            "--seeds", ",".join(str(s) for s in seeds),
        ]
        subprocess.run(cmd, check=True, stdout=subprocess.DEVNULL)
        out = pathlib.Path(tmp) / f"sweep_{param}.json"
        return json.loads(out.read_text())


def aggregate(rows):
    """Worst-case view per swept value across seeds."""
    by_value = {}
    for row in rows:
        agg = by_value.setdefault(
            row["value"],
            {"runs": 0, "settled": 0, "max_settle": 0.0, "depth_ss": 0.0,
             "angle_ss": 0.0, "duty": 0.0, "errors": 0},
        )
        agg["runs"] += 1
        if "error" in row:
            agg["errors"] += 1
            continue
        m = row["metrics"]
        agg["settled"] += bool(m["all_settled"])
        for seg in m["segments"]:
            agg["max_settle"] = max(agg["max_settle"], seg["settling_time"])
            agg["depth_ss"] = max(agg["depth_ss"], seg["depth_err_ss"])
            agg["angle_ss"] = max(agg["angle_ss"], abs(seg["roll_err_ss_deg"]),
                                  abs(seg["pitch_err_ss_deg"]))
        agg["duty"] = max(agg["duty"], m["actuator_duty"])
    return by_value


def main():
    ap = argparse.ArgumentParser(
        description="sweep one controller gain and tabulate worst-case "
                    "settling metrics")
    ap.add_argument("--binary", default="build/tools/vbcsim")
    ap.add_argument("--mission", default="depth_hold")
    ap.add_argument("--param", default="controller.pressure_kp")
    ap.add_argument("--values", required=True,
                    help="comma-separated gain values")
    ap.add_argument("--seeds", default="1,2,3")
    ap.add_argument("extra", nargs="*",
                    help="additional vbcsim options, e.g. "
                         "--mission.depth_segment=30")
    args = ap.parse_args()

    values = args.values.split(",")
    seeds = [int(s) for s in args.seeds.split(",")]
    rows = run_sweep(args.binary, args.mission, args.param, values, seeds,
                     args.extra)

    print(f"{args.param} on {args.mission}, {len(seeds)} seeds "
          "(worst case per value)")
    print(f"{'value':>12}  {'settled':>7}  {'max_settle_s':>12}  "
          f"{'depth_ss_m':>10}  {'angle_ss_deg':>12}  {'duty_m':>8}")
    for value in values:
        a = aggregate(rows)[value]
        if a["errors"]:
            print(f"{value:>12}  {a['errors']} of {a['runs']} runs errored")
            continue
        print(f"{value:>12}  {a['settled']:>4}/{a['runs']}  "
              f"{a['max_settle']:>12.2f}  {a['depth_ss']:>10.4f}  "
              f"{a['angle_ss']:>12.3f}  {a['duty']:>8.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
