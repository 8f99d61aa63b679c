#pragma once

#include <span>

#include "core/geometry.hpp"

namespace kneexo {

// Exoskeleton knee joint: two equal rollers of diameter D in gear-constrained
// pure rolling. D = 0 collapses to a conventional revolute joint.
struct RollingJointParams {
  double roller_diameter_mm = 64.0;
};

void validate(const RollingJointParams& params);

// Pose of the calf-side roller frame relative to the thigh-side roller frame
// at joint angle phi. Both frames coincide at phi = 0 with the origin at the
// roller contact point; the thigh roller center sits at (0, +D/2) and the
// calf roller center at (0, -D/2). Gear meshing makes the line of centers
// turn by phi/2, i.e. each roller turns phi/2 about its own center; the
// instantaneous center is the rolling contact between the two circles.
Transform2D rolling_joint_pose(const RollingJointParams& params, double phi_rad);

// Rolling contact location (in thigh-side frame coordinates) at joint angle
// phi; diagnostic used by the ICR checks.
Vec2 rolling_joint_contact(const RollingJointParams& params, double phi_rad);

// Double-hinge mechanism between the proximal and distal calf frames:
// alpha is the hinged-linkage angle to the proximal frame, beta to the
// distal frame. Mechanical hard stops keep |alpha - beta| <= 90 deg.
struct HingeAngles {
  double alpha_rad = 0.0;
  double beta_rad = 0.0;
};

struct HingeTorques {
  double sagittal_nm;  // assistive torque about the knee axis
  double twist_nm;     // parasitic torque twisting the calf
};

// Splits a sagittal assistive torque across the double hinge:
//   sagittal = tau * cos(alpha - beta), twist = tau * sin(alpha - beta).
// Magnitude is preserved exactly.
HingeTorques hinge_decompose(double tau_nm, const HingeAngles& angles);

// Two-stage timing-belt transmission. Stage 2's output pulley is fixed on the
// calf frame, so its effective lever arm is (R2 + r2)/2 and the total ratio
// is i1 * (i2 + 1) / 2.
struct TransmissionParams {
  double stage1_ratio = 4.0;
  double stage2_ratio = 3.43;
};

void validate(const TransmissionParams& params);

double total_reduction(const TransmissionParams& params);
double output_torque(double motor_torque_nm, const TransmissionParams& params);

// Point mass in the sagittal plane, positioned relative to the human center
// of mass (meters).
struct MassItem {
  double mass_kg;
  Vec2 position_m;
};

// Sum of m_i * |pos_i - point|^2. Errors on an empty list.
double inertia_about_point(std::span<const MassItem> items, Vec2 point_m);

Vec2 mass_centroid(std::span<const MassItem> items);

}  // namespace kneexo
