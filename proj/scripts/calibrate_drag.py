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

"""Drag coefficient selection for the rigid-body model.

The hull is a flat plate with protruding cylinders, far from anything
with a published drag table, so the quadratic coefficients are set to
make the closed-loop behavior plausible rather than from first
principles.  The targets, checked per candidate with this script:

  * heave (sim.drag_z): a commanded 0.4 m depth step settles in tens of
    seconds without overshooting into the floor or the surface,
  * sway/surge (sim.drag_x, sim.drag_y): sawtooth glides cover a vehicle
    length or two per cycle, not meters,
  * rotation (sim.drag_rot_*): attitude steps settle in a few seconds
    with one overshoot at most; too little damping leaves a residual
    wobble the attitude PIDs fight forever (duty climbs), too much makes
    the turning experiments sluggish.

Shipped values: drag 6/18/90 (x/y/z), rot 2/2/1, in configs/default.ini.

Example:

    python3 scripts/calibrate_drag.py --param sim.drag_rot_x \
        --values 0.5,1,2,4 --mission sawtooth_roll

Requires a built binary (default build/tools/vbcsim).
"""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile


def run_sweep(binary, mission, param, values, seeds, extra):
    with tempfile.TemporaryDirectory(prefix="vbcsim_drag_") as tmp:
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


def main():
    ap = argparse.ArgumentParser(
        description="sweep one drag coefficient and tabulate settling, "
                    "travel, and duty")
    ap.add_argument("--binary", default="build/tools/vbcsim")
    ap.add_argument("--mission", default="sawtooth_pitch")
    ap.add_argument("--param", default="sim.drag_rot_y")
    ap.add_argument("--values", required=True,
                    help="comma-separated coefficient values")
    ap.add_argument("--seeds", default="1,2")
    ap.add_argument("extra", nargs="*",
                    help="additional vbcsim options")
    args = ap.parse_args()

    values = args.values.split(",")
    seeds = [int(s) for s in args.seeds.split(",")]
    rows = run_sweep(args.binary, args.mission, args.param, values, seeds,
                     args.extra)

    print(f"{args.param} on {args.mission}, {len(seeds)} seeds "
          "(worst case per value)")
    print(f"{'value':>10}  {'settled':>7}  {'max_settle_s':>12}  "
          f"{'travel_m':>9}  {'drift_m':>8}  {'duty_m':>8}")
    for value in values:
        worst = {"settled": 0, "runs": 0, "settle": 0.0, "travel": 0.0,
                 "drift": 0.0, "duty": 0.0, "errors": 0}
        for row in rows:
            if row["value"] != value:
                continue
            worst["runs"] += 1
            if "error" in row:
                worst["errors"] += 1
                continue
            m = row["metrics"]
            worst["settled"] += bool(m["all_settled"])
            worst["settle"] = max(
                worst["settle"],
                max(s["settling_time"] for s in m["segments"]))
            dx, dy, _ = m["net_displacement"]
            worst["travel"] = max(worst["travel"], (dx**2 + dy**2) ** 0.5)
            worst["drift"] = max(worst["drift"], m["lateral_drift_max"])
            worst["duty"] = max(worst["duty"], m["actuator_duty"])
        if worst["errors"]:
            print(f"{value:>10}  {worst['errors']} of {worst['runs']} "
                  "runs errored")
            continue
        print(f"{value:>10}  {worst['settled']:>4}/{worst['runs']}  "
              f"{worst['settle']:>12.2f}  {worst['travel']:>9.3f}  "
              f"{worst['drift']:>8.3f}  {worst['duty']:>8.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
