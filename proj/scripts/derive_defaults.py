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

"""Re-derives the numeric constants frozen into the C++ sources and tests.

The simulator ships a handful of hand-frozen numbers: the passive trim
ballast that floats the default vehicle level (src/config.cpp), the
buoyancy gain alpha and trim spot checks (tests/test_control.cpp), the
pressure-to-depth anchors (tests/test_sim.cpp), and the pitch-roll-pitch
composition yaws (tests/test_mission.cpp).  This script recomputes every
one of them from the published geometry with plain numpy, independently
of the C++ implementation, and prints them next to the frozen values.

Run from the repository root:

    python3 scripts/derive_defaults.py

Exits nonzero if any recomputed value disagrees with its frozen copy.
"""

import math
import sys

import numpy as np

# Default build, mirrored from configs/default.ini.
RHO = 1000.0
G = 9.81
P_ATM = 101325.0

PLATE_L, PLATE_W, PLATE_T, PLATE_M = 0.457, 0.330, 0.006, 0.945
ENGINE_D, ENGINE_L, ENGINE_M = 0.064, 0.257, 1.505
ENGINE_COM = np.array([0.0, 0.124, 0.044])
HOUSING_D, HOUSING_L, HOUSING_M = 0.089, 0.245, 1.348
HOUSING_COM = np.array([-0.02, 0.0, 0.025])
PISTON_D = 0.05715
MOUNT = np.array([0.127, 0.124, 0.044])
MOVING_MASS = 0.05
TRIM_Z = 0.08
REFERENCE_EXTENSION = 0.05

# Engine order FL, BL, BR, FR; x is forward, y is left.
SIGN_X = np.array([+1.0, -1.0, -1.0, +1.0])
SIGN_Y = np.array([+1.0, +1.0, -1.0, -1.0])


def cylinder_volume(diameter, length):
    return math.pi * (0.5 * diameter) ** 2 * length


def piston_area():
    return 0.25 * math.pi * PISTON_D**2


def mass_and_volume_tables(extension):
    """Mass and displaced-volume items (value, position) at a uniform
    piston extension, excluding the trim ballast."""
    movers_x = SIGN_X * (MOUNT[0] + 0.5 * extension)
    movers_y = SIGN_Y * MOUNT[1]
    masses = [
        (PLATE_M, np.zeros(3)),
        (ENGINE_M, ENGINE_COM * np.array([1.0, +1.0, 1.0])),
        (ENGINE_M, ENGINE_COM * np.array([1.0, -1.0, 1.0])),
        (HOUSING_M, HOUSING_COM),
    ]
    volumes = [
        (PLATE_L * PLATE_W * PLATE_T, np.zeros(3)),
        (cylinder_volume(ENGINE_D, ENGINE_L), masses[1][1]),
        (cylinder_volume(ENGINE_D, ENGINE_L), masses[2][1]),
        (cylinder_volume(HOUSING_D, HOUSING_L), HOUSING_COM),
    ]
    for i in range(4):
        pos = np.array([movers_x[i], movers_y[i], MOUNT[2]])
        masses.append((MOVING_MASS, pos))
        volumes.append((piston_area() * extension, pos))
    return masses, volumes


def derive_trim():
    """Ballast volume and x-position that zero the hydrostatic wrench at
    the reference extension.

    Force balance:   rho * (V_bodies + V_trim) = M_total
    Torque balance:  the centers of buoyancy and mass share the same x
    (y is already symmetric), with the ballast displacing V_trim at
    (trim_x, 0, TRIM_Z) and carrying no mass.
    """
    masses, volumes = mass_and_volume_tables(REFERENCE_EXTENSION)
    m_total = sum(m for m, _ in masses)
    v_bodies = sum(v for v, _ in volumes)
    v_trim = m_total / RHO - v_bodies

    com_x = sum(m * p[0] for m, p in masses) / m_total
    v_total = m_total / RHO
    # cob_x must equal com_x: (sum v*x + v_trim * trim_x) / v_total = com_x
    trim_x = (com_x * v_total - sum(v * p[0] for v, p in volumes)) / v_trim
    return v_trim, trim_x, m_total


def rot_x(a):
    c, s = math.cos(a), math.sin(a)
    return np.array([[1, 0, 0], [0, c, -s], [0, s, c]])


def rot_y(a):
    c, s = math.cos(a), math.sin(a)
    return np.array([[c, 0, s], [0, 1, 0], [-s, 0, c]])


def prp_block_yaw_deg(theta_deg, phi_deg):
    """Yaw left over after pitching, rolling, and unwinding both about the
    body axes: R_y(t) R_x(p) R_y(-t) R_x(-p), read out as the Z-Y-X yaw."""
    t, p = math.radians(theta_deg), math.radians(phi_deg)
    r = rot_y(t) @ rot_x(p) @ rot_y(-t) @ rot_x(-p)
    return math.degrees(math.atan2(r[1, 0], r[0, 0]))


def main():
    checks = []

    def check(label, derived, frozen, where):
        derived = float(derived)
        ok = math.isfinite(derived) and abs(derived - frozen) <= 1e-12 * max(
            1.0, abs(frozen)
        )
        checks.append(ok)
        status = "ok " if ok else "MISMATCH"
        print(f"{status} {label:34s} {derived!r:>25}  frozen {frozen!r}")
        print(f"     ({where})")

    alpha = RHO * G * piston_area()
    check("alpha = rho*g*piston_area", alpha, 25.164676872853917,
          "tests/test_control.cpp kAlpha")
    check("offset for 0.1 N of heave", 0.1 / (4.0 * alpha),
          0.0009934560307018462, "tests/test_control.cpp kOffsetPerTenthNewton")

    v_trim, trim_x, m_total = derive_trim()
    check("trim ballast volume (m^3)", v_trim, 9.07386347687506e-4,
          "src/config.cpp kDefaultTrimVolume")
    check("trim ballast x (m)", trim_x, 3.8832195184650294e-3,
          "src/config.cpp kDefaultTrimX")

    # Without the ballast the vehicle is heavy; the mid-stroke trim command
    # spreads the deficit evenly across the four pistons.
    _, volumes = mass_and_volume_tables(REFERENCE_EXTENSION)
    deficit = m_total * G - RHO * G * sum(v for v, _ in volumes)
    check("untrimmed offsets (m)", deficit / (4.0 * alpha),
          0.08843209189402283, "tests/test_control.cpp kUntrimmedMidOffsets")

    check("depth at 103 kPa (m)", (103000.0 - P_ATM) / (RHO * G),
          0.1707441386340469, "tests/test_sim.cpp kDepthAt103kPa")
    check("depth at 107 kPa (m)", (107000.0 - P_ATM) / (RHO * G),
          0.5784913353720693, "tests/test_sim.cpp kDepthAt107kPa")

    check("composition yaw 30/30 (deg)", prp_block_yaw_deg(30.0, 30.0),
          -14.50247051634759, "tests/test_mission.cpp kPrpYaw3030Deg")
    check("composition yaw 20/25 (deg)", prp_block_yaw_deg(20.0, 25.0),
          -8.314668875236903, "tests/test_mission.cpp kPrpYaw2025Deg")

    if not all(checks):
        print("\nsome derived values disagree with the frozen constants")
        return 1
    print("\nall frozen constants reproduced")
    return 0


if __name__ == "__main__":
    sys.exit(main())
