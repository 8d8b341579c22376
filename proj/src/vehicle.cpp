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

#include "vbc/vehicle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "vbc/rotations.hpp"

namespace vbc
{
const std::array<std::string, 4> kActuatorNames = {"FL", "BL", "BR", "FR"};

namespace
{
void require(bool ok, const std::string& msg)
{
  if (!ok)
    throw std::invalid_argument(msg);
}

// Point mass or homogeneous body contributing to the aggregates below.
struct MassItem
{
  double mass;
  Eigen::Vector3d pos;              // center of mass, body frame
  Eigen::Matrix3d inertia;          // about its own com; zero for points
};

struct VolumeItem
{
  double volume;
  Eigen::Vector3d centroid;
};

// Moving mass rides at half the extension beyond the mount.
Eigen::Vector3d mover_position(const ActuatorGeometry& a, int i, double ext)
{
  Eigen::Vector3d p = a.mount_position(i);
  p.x() += kActuatorSignX[i] * 0.5 * ext;
  return p;
}

// A piston of extension e spans [mount_x, mount_x + e] outward, so its
// displaced volume centroid sits half the extension beyond the mount.
Eigen::Vector3d piston_centroid(const ActuatorGeometry& a, int i, double ext)
{
  return mover_position(a, i, ext);
}

std::vector<MassItem> collect_masses(const VehicleGeometry& geom,
                                     const ActuatorState& ext)
{
  std::vector<MassItem> items;
  items.push_back({geom.plate.mass, geom.plate.com,
                   geom.plate.inertia_about_com()});
  for (double side : {+1.0, -1.0})
  {
    Eigen::Vector3d com = geom.engine_static.com;
    com.y() *= side;
    items.push_back({geom.engine_static.mass, com,
                     geom.engine_static.inertia_about_com()});
  }
  items.push_back({geom.housing.mass, geom.housing.com,
                   geom.housing.inertia_about_com()});
  for (int i = 0; i < 4; ++i)
  {
    items.push_back({geom.actuator.moving_mass,
                     mover_position(geom.actuator, i, ext[i]),
                     Eigen::Matrix3d::Zero()});
  }
  if (geom.trim.added_mass > 0.0)
    items.push_back({geom.trim.added_mass, geom.trim.location,
                     Eigen::Matrix3d::Zero()});
  return items;
}

std::vector<VolumeItem> collect_volumes(const VehicleGeometry& geom,
                                        const ActuatorState& ext)
{
  std::vector<VolumeItem> items;
  items.push_back({geom.plate.volume(), geom.plate.com});
  for (double side : {+1.0, -1.0})
  {
    Eigen::Vector3d c = geom.engine_static.com;
    c.y() *= side;
    items.push_back({geom.engine_static.volume(), c});
  }
  items.push_back({geom.housing.volume(), geom.housing.com});
  const double area = geom.actuator.piston_area();
  for (int i = 0; i < 4; ++i)
  {
    items.push_back({area * ext[i],
                     piston_centroid(geom.actuator, i, ext[i])});
  }
  if (geom.trim.added_volume > 0.0)
    items.push_back({geom.trim.added_volume, geom.trim.location});
  return items;
}
}  // namespace

BodyPrimitive BodyPrimitive::box(double length, double width,
                                 double thickness, double mass,
                                 const Eigen::Vector3d& com)
{
  BodyPrimitive p;
  p.kind = PrimitiveKind::kBox;
  p.length = length;
  p.width = width;
  p.thickness = thickness;
  p.mass = mass;
  p.com = com;
  return p;
}

BodyPrimitive BodyPrimitive::cylinder(double diameter, double length,
                                      double mass, const Eigen::Vector3d& com)
{
  BodyPrimitive p;
  p.kind = PrimitiveKind::kCylinder;
  p.diameter = diameter;
  p.cyl_length = length;
  p.mass = mass;
  p.com = com;
  return p;
}

double BodyPrimitive::volume() const
{
  if (kind == PrimitiveKind::kBox)
    return length * width * thickness;
  const double r = 0.5 * diameter;
  return M_PI * r * r * cyl_length;
}

Eigen::Matrix3d BodyPrimitive::inertia_about_com() const
{
  Eigen::Matrix3d inertia = Eigen::Matrix3d::Zero();
  if (kind == PrimitiveKind::kBox)
  {
    inertia(0, 0) = mass / 12.0 * (width * width + thickness * thickness);
    inertia(1, 1) = mass / 12.0 * (length * length + thickness * thickness);
    inertia(2, 2) = mass / 12.0 * (length * length + width * width);
  }
  else
  {
    // Axis along body x.
    const double r = 0.5 * diameter;
    inertia(0, 0) = 0.5 * mass * r * r;
    inertia(1, 1) = mass / 12.0 * (3.0 * r * r + cyl_length * cyl_length);
    inertia(2, 2) = inertia(1, 1);
  }
  return inertia;
}

void BodyPrimitive::validate(const std::string& label) const
{
  if (kind == PrimitiveKind::kBox)
  {
    require(length > 0.0 && width > 0.0 && thickness > 0.0,
            label + ": box dimensions must be positive");
  }
  else
  {
    require(diameter > 0.0 && cyl_length > 0.0,
            label + ": cylinder dimensions must be positive");
  }
  require(mass >= 0.0 && std::isfinite(mass),
          label + ": mass must be non-negative");
  require(com.allFinite(), label + ": com must be finite");
}

double ActuatorGeometry::piston_area() const
{
  return 0.25 * M_PI * piston_diameter * piston_diameter;
}

Eigen::Vector3d ActuatorGeometry::mount_position(int i) const
{
  return Eigen::Vector3d(kActuatorSignX[i] * mount.x(),
                         kActuatorSignY[i] * mount.y(), mount.z());
}

void ActuatorGeometry::validate() const
{
  require(piston_diameter > 0.0, "actuator: piston_diameter must be positive");
  require(stroke_max > 0.0, "actuator: stroke_max must be positive");
  require(mount.allFinite() && mount.x() > 0.0 && mount.y() > 0.0,
          "actuator: mount offsets x and y must be positive");
  require(moving_mass >= 0.0, "actuator: moving_mass must be non-negative");
}

void PassiveTrim::validate() const
{
  require(added_mass >= 0.0, "trim: added_mass must be non-negative");
  require(added_volume >= 0.0, "trim: added_volume must be non-negative");
  require(location.allFinite(), "trim: location must be finite");
}

void VehicleGeometry::validate() const
{
  plate.validate("plate");
  engine_static.validate("engine_static");
  housing.validate("housing");
  actuator.validate();
  trim.validate();
  require(total_mass() > 0.0, "vehicle: total mass must be positive");
}

double VehicleGeometry::static_volume() const
{
  return plate.volume() + 2.0 * engine_static.volume() + housing.volume() +
         trim.added_volume;
}

double VehicleGeometry::total_mass() const
{
  return plate.mass + 2.0 * engine_static.mass + housing.mass +
         4.0 * actuator.moving_mass + trim.added_mass;
}

void ActuatorState::validate(const VehicleGeometry& geom) const
{
  for (int i = 0; i < 4; ++i)
  {
    if (!(extension[i] >= 0.0) || !(extension[i] <= geom.actuator.stroke_max))
    {
      std::ostringstream msg;
      msg << "actuator " << kActuatorNames[i] << " extension " << extension[i]
          << " outside [0, " << geom.actuator.stroke_max << "]";
      throw std::domain_error(msg.str());
    }
  }
}

double displaced_volume(const VehicleGeometry& geom, const ActuatorState& ext)
{
  ext.validate(geom);
  double v = geom.static_volume();
  const double area = geom.actuator.piston_area();
  for (int i = 0; i < 4; ++i)
    v += area * ext[i];
  return v;
}

MassProperties mass_properties(const VehicleGeometry& geom,
                               const ActuatorState& ext)
{
  ext.validate(geom);
  MassProperties out;
  const auto items = collect_masses(geom, ext);
  for (const auto& it : items)
  {
    out.mass += it.mass;
    out.com += it.mass * it.pos;
  }
  if (!(out.mass > 0.0))
    throw std::domain_error("vehicle total mass is not positive");
  out.com /= out.mass;
  for (const auto& it : items)
  {
    const Eigen::Vector3d r = it.pos - out.com;
    out.inertia_com +=
        it.inertia + it.mass * (r.squaredNorm() * Eigen::Matrix3d::Identity() -
                                r * r.transpose());
  }
  return out;
}

BuoyancyState center_of_buoyancy(const VehicleGeometry& geom,
                                 const ActuatorState& ext,
                                 const EnvironmentParams& env)
{
  ext.validate(geom);
  BuoyancyState out;
  Eigen::Vector3d moment = Eigen::Vector3d::Zero();
  for (const auto& it : collect_volumes(geom, ext))
  {
    out.volume += it.volume;
    moment += it.volume * it.centroid;
  }
  if (!(out.volume > 0.0))
    throw std::domain_error("vehicle displaced volume is not positive");
  out.cob = moment / out.volume;
  out.force = env.rho * env.g * out.volume;
  return out;
}

Eigen::Matrix<double, 6, 1> hydrostatic_wrench(const VehicleGeometry& geom,
                                               const ActuatorState& ext,
                                               const Eigen::Quaterniond& attitude,
                                               const EnvironmentParams& env)
{
  if (std::abs(attitude.norm() - 1.0) > 1e-6)
    throw std::domain_error("hydrostatic_wrench: attitude is not unit norm");
  const MassProperties mp = mass_properties(geom, ext);
  const BuoyancyState bs = center_of_buoyancy(geom, ext, env);

  const Eigen::Matrix3d R = attitude.toRotationMatrix();
  // World-frame gravity points down, buoyancy up; rotate into the body.
  const Eigen::Vector3d f_gravity = R.transpose() *
      Eigen::Vector3d(0.0, 0.0, -env.g * mp.mass);
  const Eigen::Vector3d f_buoyancy = R.transpose() *
      Eigen::Vector3d(0.0, 0.0, bs.force);

  Eigen::Matrix<double, 6, 1> wrench;
  wrench.head<3>() = f_gravity + f_buoyancy;
  wrench.tail<3>() = mp.com.cross(f_gravity) + bs.cob.cross(f_buoyancy);
  return wrench;
}

PassiveTrim neutralized_trim(const VehicleGeometry& geom,
                             double reference_extension,
                             const EnvironmentParams& env,
                             double z_trim)
{
  VehicleGeometry bare = geom;
  bare.trim = PassiveTrim{};
  const ActuatorState ref = ActuatorState::uniform(reference_extension);

  const double mass = bare.total_mass();
  const double v_bare = displaced_volume(bare, ref);
  const double v_needed = mass / env.rho - v_bare;
  if (!(v_needed > 0.0))
  {
    throw std::domain_error(
        "neutralized_trim: vehicle already displaces more than it weighs; "
        "trim volume would be non-positive");
  }

  // Neutral plus zero pitch moment requires the combined centroid to sit
  // over the center of mass in x (y moments vanish by symmetry).
  const MassProperties mp = mass_properties(bare, ref);
  const BuoyancyState bs = center_of_buoyancy(bare, ref, env);
  const double v_total = bs.volume + v_needed;
  const double x_trim =
      (mp.com.x() * v_total - bs.cob.x() * bs.volume) / v_needed;

  PassiveTrim trim;
  trim.added_volume = v_needed;
  trim.location = Eigen::Vector3d(x_trim, 0.0, z_trim);
  return trim;
}
}  // namespace vbc
