#include "core/exo_mechanism.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace kneexo {

void validate(const RollingJointParams& params) {
  if (!(params.roller_diameter_mm >= 0.0)) {
    throw ValidationError({"joint.diameter_mm: must be >= 0 (0 = revolute)"});
  }
}

Transform2D rolling_joint_pose(const RollingJointParams& params, double phi_rad) {
  const double d = params.roller_diameter_mm;
  if (d == 0.0) return make_rotation(phi_rad);  // exact revolute limit

  const Vec2 thigh_center{0.0, 0.5 * d};
  const Vec2 calf_center = thigh_center + rotate(0.5 * phi_rad, Vec2{0.0, -d});
  // Calf body point (0, -D/2) (its roller center) must land on calf_center
  // while the body rotates by phi.
  const Vec2 translation = calf_center - rotate(phi_rad, Vec2{0.0, -0.5 * d});
  return {phi_rad, translation};
}

Vec2 rolling_joint_contact(const RollingJointParams& params, double phi_rad) {
  const double d = params.roller_diameter_mm;
  return Vec2{0.0, 0.5 * d} + rotate(0.5 * phi_rad, Vec2{0.0, -0.5 * d});
}

HingeTorques hinge_decompose(double tau_nm, const HingeAngles& angles) {
  const double delta = angles.alpha_rad - angles.beta_rad;
  if (!(std::abs(delta) <= kPi / 2.0 + 1e-12)) {
    fail(ErrorCode::domain, "hinge angle difference exceeds the 90 deg hard stops");
  }
  return {tau_nm * std::cos(delta), tau_nm * std::sin(delta)};
}

void validate(const TransmissionParams& params) {
  std::vector<std::string> violations;
  if (!(params.stage1_ratio > 0.0)) violations.push_back("transmission.i1: must be > 0");
  if (!(params.stage2_ratio >= 0.0)) violations.push_back("transmission.i2: must be >= 0");
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

double total_reduction(const TransmissionParams& params) {
  return params.stage1_ratio * (params.stage2_ratio + 1.0) / 2.0;
}

double output_torque(double motor_torque_nm, const TransmissionParams& params) {
  if (!std::isfinite(motor_torque_nm)) {
    fail(ErrorCode::invalid_argument, "motor torque must be finite");
  }
  return motor_torque_nm * total_reduction(params);
}

double inertia_about_point(std::span<const MassItem> items, Vec2 point_m) {
  if (items.empty()) {
    fail(ErrorCode::invalid_argument, "inertia_about_point: empty mass list");
  }
  double sum = 0.0;
  for (const auto& item : items) {
    const Vec2 r = item.position_m - point_m;
    sum += item.mass_kg * dot(r, r);
  }
  return sum;
}

Vec2 mass_centroid(std::span<const MassItem> items) {
  if (items.empty()) {
    fail(ErrorCode::invalid_argument, "mass_centroid: empty mass list");
  }
  double m = 0.0;
  Vec2 weighted{};
  for (const auto& item : items) {
    m += item.mass_kg;
    weighted = weighted + item.mass_kg * item.position_m;
  }
  return (1.0 / m) * weighted;
}

}  // namespace kneexo
