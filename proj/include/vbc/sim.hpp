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

#ifndef VBC_SIM_HPP_
#define VBC_SIM_HPP_

#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "vbc/control.hpp"
#include "vbc/environment.hpp"
#include "vbc/rotations.hpp"
#include "vbc/vehicle.hpp"

namespace vbc
{
/// Raised when integration produces a non-finite state.
class SimulationFault : public std::runtime_error
{
 public:
  using std::runtime_error::runtime_error;
};

/// Rigid-body state.  position is world frame (z up, so underwater means
/// position.z() <= 0); attitude rotates body vectors into the world;
/// velocities are body frame about the body origin.
struct RigidBodyState
{
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Quaterniond attitude = Eigen::Quaterniond::Identity();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
  Eigen::Vector3d angular_velocity = Eigen::Vector3d::Zero();

  double depth() const { return -position.z(); }
  EulerAngles euler() const { return euler_from_quat(attitude); }
  bool finite() const
  {
    return position.allFinite() && attitude.coeffs().allFinite() &&
           velocity.allFinite() && angular_velocity.allFinite();
  }
};

/// Quadratic damping and added mass.  The flat plate makes broadside (z)
/// drag dominate and sway (y) drag exceed surge (x).
struct DragModel
{
  /// Translational coefficients (N s^2/m^2), body x/y/z.
  Eigen::Vector3d linear = Eigen::Vector3d(6.0, 18.0, 90.0);
  /// Rotational coefficients (N m s^2/rad^2).
  Eigen::Vector3d angular = Eigen::Vector3d(2.0, 2.0, 1.0);
  /// Diagonal added mass (kg, kg m^2): surge, sway, heave, roll, pitch, yaw.
  Eigen::Matrix<double, 6, 1> added_mass =
      (Eigen::Matrix<double, 6, 1>() << 1.1, 1.1, 1.1, 0.0, 0.0, 0.0)
          .finished();

  void validate() const;
};

/// First-order piston response: rate-limited tracking with a stiction
/// deadband.
struct ActuatorDynamics
{
  /// Slew rate (m/s).
  double max_speed = 0.008;
  /// Commands closer than this to the current extension are ignored (m).
  double deadband = 0.0005;

  void validate() const;
};

struct SensorNoise
{
  /// 1-sigma pressure noise (Pa).
  double pressure_sigma = 50.0;
  /// 1-sigma attitude noise per axis (rad).
  double angle_sigma = 0.5 * M_PI / 180.0;

  void validate() const;
};

struct SensorReading
{
  double t = 0.0;
  double pressure = 0.0;  // absolute (Pa)
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;
};

/// Gaussian pressure/attitude sensor with its own seeded engine; no global
/// RNG state.  Zero sigmas bypass the engine so noiseless runs are exact.
class SensorModel
{
 public:
  SensorModel(const SensorNoise& noise, std::uint64_t seed)
      : noise_(noise), rng_(seed)
  {
  }

  SensorReading sample(const RigidBodyState& state,
                       const EnvironmentParams& env, double t);

 private:
  double gauss(double sigma);

  SensorNoise noise_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> unit_{0.0, 1.0};
};

struct DepthEstimate
{
  double depth = 0.0;
  /// True when the raw conversion came out negative and was clipped to 0.
  bool at_surface = false;
};

/// Inverts pressure_at_depth; negative depths clip to the surface.
DepthEstimate pressure_to_depth(double pressure,
                                const EnvironmentParams& env);

/// Quadratic per-axis damping wrench from velocity relative to the ambient
/// current.  Always opposes motion.
Eigen::Matrix<double, 6, 1> drag_wrench(const RigidBodyState& state,
                                        const DragModel& drag,
                                        const EnvironmentParams& env);

/// 6x6 body-frame mass matrix about the body origin: rigid-body mass with
/// center-of-mass coupling plus diagonal added mass.
Eigen::Matrix<double, 6, 6> mass_matrix(const VehicleGeometry& geom,
                                        const ActuatorState& ext,
                                        const DragModel& drag);

/// Kinetic energy (including added mass) plus hydrostatic potential.
/// Useful as a dissipation diagnostic while the extensions are held fixed.
double mechanical_energy(const RigidBodyState& state,
                         const VehicleGeometry& geom,
                         const ActuatorState& ext,
                         const EnvironmentParams& env,
                         const DragModel& drag);

/// One semi-implicit Euler step of the hydrostatic + drag dynamics:
/// velocities update from the current-state wrench, then the pose
/// integrates with the new velocities (exact quaternion exponential).
/// The surface (depth 0) and the floor (env.depth_max) clamp vertical
/// motion.  Throws SimulationFault if the state goes non-finite.
RigidBodyState step(const RigidBodyState& state, const VehicleGeometry& geom,
                    const ActuatorState& ext, const EnvironmentParams& env,
                    const DragModel& drag, double dt);

/// Slews each piston toward its command at most max_speed * dt, holding
/// position inside the deadband; results clamp to [0, stroke_max].
ActuatorState actuator_update(const ControlCommand& command,
                              const ActuatorState& state,
                              const ActuatorDynamics& dynamics,
                              double stroke_max, double dt);
}  // namespace vbc

#endif  // VBC_SIM_HPP_
