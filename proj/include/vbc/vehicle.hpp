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

#ifndef VBC_VEHICLE_HPP_
#define VBC_VEHICLE_HPP_

#include <array>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "vbc/environment.hpp"

namespace vbc
{
/// Actuator ordering used everywhere: front-left, back-left, back-right,
/// front-right.  Body frame is x forward, y left, z up, origin at the
/// plate centroid.
enum ActuatorIndex
{
  kFrontLeft = 0,
  kBackLeft = 1,
  kBackRight = 2,
  kFrontRight = 3
};

/// Printable names matching ActuatorIndex.
extern const std::array<std::string, 4> kActuatorNames;

/// Sign of each engine's x mount offset (front +, back -).
constexpr std::array<double, 4> kActuatorSignX = {+1.0, -1.0, -1.0, +1.0};
/// Sign of each engine's y mount offset (left +, right -).
constexpr std::array<double, 4> kActuatorSignY = {+1.0, +1.0, -1.0, -1.0};

enum class PrimitiveKind
{
  kBox,
  kCylinder
};

/// Homogeneous-density hull primitive.  Cylinders have their axis along
/// body x.  The center-of-mass offset is in the body frame; for fully
/// submerged homogeneous primitives it is also the centroid used for
/// buoyancy.
struct BodyPrimitive
{
  PrimitiveKind kind = PrimitiveKind::kBox;
  /// Box extents: x length, y width, z thickness (m).  Unused for cylinders.
  double length = 0.0;
  double width = 0.0;
  double thickness = 0.0;
  /// Cylinder dimensions (m).  Unused for boxes.
  double diameter = 0.0;
  double cyl_length = 0.0;
  double mass = 0.0;
  Eigen::Vector3d com = Eigen::Vector3d::Zero();

  static BodyPrimitive box(double length, double width, double thickness,
                           double mass, const Eigen::Vector3d& com);
  static BodyPrimitive cylinder(double diameter, double length, double mass,
                                const Eigen::Vector3d& com);

  /// Displaced volume when fully submerged (m^3).
  double volume() const;
  /// Inertia tensor about the primitive's own center of mass (kg m^2).
  Eigen::Matrix3d inertia_about_com() const;
  /// Throws std::invalid_argument on non-positive dimensions or negative
  /// mass.  The label prefixes error messages.
  void validate(const std::string& label) const;
};

/// Per-engine piston geometry, common to all four actuators.  Each engine
/// mounts at (sign_x * mount.x, sign_y * mount.y, mount.z) and extends its
/// piston outward along +-x, displacing extension * piston_area() of water.
struct ActuatorGeometry
{
  /// Piston bore diameter (m).
  double piston_diameter = 0.05715;
  /// Maximum piston extension (m).
  double stroke_max = 0.1;
  /// Magnitudes of the mount offsets from the body origin (m).
  Eigen::Vector3d mount = Eigen::Vector3d(0.127, 0.124, 0.044);
  /// Mass that travels with the piston, modeled as a point at half the
  /// extension beyond the mount (kg).
  double moving_mass = 0.05;

  double piston_area() const;
  /// Mount position of actuator i in the body frame.
  Eigen::Vector3d mount_position(int i) const;
  void validate() const;
};

/// Lumped correction bringing the as-built vehicle to its measured trim:
/// unmodeled displaced volume (fairings, cabling) and ballast mass at a
/// fixed body-frame location.
struct PassiveTrim
{
  double added_mass = 0.0;
  double added_volume = 0.0;
  Eigen::Vector3d location = Eigen::Vector3d::Zero();
  void validate() const;
};

/// Full rigid geometry.  Defaults reproduce the reference build: an acrylic
/// plate carrying two static buoyancy cylinders, an electronics housing and
/// four piston engines at the plate corners.
struct VehicleGeometry
{
  BodyPrimitive plate = BodyPrimitive::box(
      0.457, 0.330, 0.006, 0.945, Eigen::Vector3d::Zero());
  /// One static engine body per side (left, right); both carry the same
  /// primitive mirrored in y through ActuatorGeometry-style signs.
  BodyPrimitive engine_static = BodyPrimitive::cylinder(
      0.064, 0.257, 1.505, Eigen::Vector3d(0.0, 0.124, 0.044));
  BodyPrimitive housing = BodyPrimitive::cylinder(
      0.089, 0.245, 1.348, Eigen::Vector3d(-0.02, 0.0, 0.025));
  ActuatorGeometry actuator;
  PassiveTrim trim;

  void validate() const;
  /// Static displaced volume: everything except the four pistons (m^3).
  double static_volume() const;
  /// Total mass including the four moving masses and trim ballast (kg).
  double total_mass() const;
};

/// Piston extensions (m), one per ActuatorIndex.
struct ActuatorState
{
  std::array<double, 4> extension = {0.0, 0.0, 0.0, 0.0};

  double& operator[](int i) { return extension[i]; }
  double operator[](int i) const { return extension[i]; }
  static ActuatorState uniform(double e)
  {
    return ActuatorState{{e, e, e, e}};
  }
  /// Throws std::domain_error naming the first actuator outside
  /// [0, stroke_max].
  void validate(const VehicleGeometry& geom) const;
};

struct MassProperties
{
  double mass = 0.0;
  /// Center of mass, body frame (m).
  Eigen::Vector3d com = Eigen::Vector3d::Zero();
  /// Inertia tensor about the center of mass (kg m^2).
  Eigen::Matrix3d inertia_com = Eigen::Matrix3d::Zero();
};

struct BuoyancyState
{
  /// Total displaced volume (m^3).
  double volume = 0.0;
  /// Center of buoyancy, body frame (m).
  Eigen::Vector3d cob = Eigen::Vector3d::Zero();
  /// Buoyant force magnitude rho * g * volume (N).
  double force = 0.0;
};

/// Total displaced volume at the given extensions (m^3).  Assumes full
/// submersion.
double displaced_volume(const VehicleGeometry& geom, const ActuatorState& ext);

/// Mass, center of mass and inertia with the piston moving masses at their
/// current extensions.  Extending a piston shifts its moving mass outward
/// by half the extension.
MassProperties mass_properties(const VehicleGeometry& geom,
                               const ActuatorState& ext);

/// Displaced volume, buoyant force and volume-weighted center of buoyancy.
BuoyancyState center_of_buoyancy(const VehicleGeometry& geom,
                                 const ActuatorState& ext,
                                 const EnvironmentParams& env);

/// Gravity plus buoyancy as a body-frame wrench (force, torque) about the
/// body origin.  attitude is the body-to-world rotation and must be unit
/// norm within 1e-6.  At identity attitude the force is
/// (0, 0, rho*g*V - g*m).
Eigen::Matrix<double, 6, 1> hydrostatic_wrench(const VehicleGeometry& geom,
                                               const ActuatorState& ext,
                                               const Eigen::Quaterniond& attitude,
                                               const EnvironmentParams& env);

/// Passive trim that makes the vehicle exactly neutral and torque free at
/// the given uniform extension: added_volume cancels the net weight and its
/// x location cancels the hydrostatic pitch moment.  The returned trim sits
/// at height z_trim with added_mass = 0.  Throws std::domain_error if the
/// vehicle displaces more than it weighs (no positive volume fixes that).
PassiveTrim neutralized_trim(const VehicleGeometry& geom,
                             double reference_extension,
                             const EnvironmentParams& env,
                             double z_trim = 0.08);
}  // namespace vbc

#endif  // VBC_VEHICLE_HPP_
