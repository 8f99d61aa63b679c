#pragma once

#include <span>
#include <vector>

#include "core/geometry.hpp"

namespace kneexo {

// 1-DOF biological knee: the femoral condyle is an ellipse that rolls and
// slides along the flat tibial plateau (the x-axis of the tibia frame).
//
// The flexion angle theta splits in a fixed proportion set by the sliding
// ratio rho = rolling distance / sliding distance:
//
//   theta_roll = theta * rho / (1 + rho)   classic roulette (tangent contact,
//                                          no slip) of the ellipse on the line
//   theta_spin = theta / (1 + rho)         rotation about the current contact
//                                          point with no contact migration
//
// rho = 0 is pure sliding (the pose degenerates to a rotation about the
// reference contact point, a fixed condyle-surface point); rho = +inf is pure
// rolling. The ellipse circle case a == b needs no special handling.
//
// Frames: the femur frame coincides with the tibia frame at theta = 0, with
// the origin at the reference contact point. The condyle center sits at
// (0, semi_minor_b) in the femur frame. Flexion rolls the contact posteriorly
// (-x), reproducing femoral rollback.
struct KneeModelParams {
  // Repo defaults below are working assumptions for a mid-size adult condyle,
  // not measured values; every entry point accepts overrides.
  double semi_major_a_mm = 32.0;
  double semi_minor_b_mm = 25.0;
  double sliding_ratio = 2.0;  // rolling distance / sliding distance; 0 = pure
                               // slide, +inf sentinel = pure roll
  double theta_max_rad = deg_to_rad(120.0);
};

// Throws ErrorCode::validation listing every violated invariant.
void validate(const KneeModelParams& params);

// Contact bookkeeping at one flexion angle (used by the rolling/sliding
// split diagnostics and the tests' independent oracles).
struct KneeContactState {
  double contact_param;       // ellipse parameter of the contact point,
                              // unwrapped continuously from -pi/2 at theta = 0
  double surface_advance_mm;  // contact abscissa on the tibial plateau
                              // (signed; negative = posterior migration)
  double rolled_arc_mm;       // condyle arc length consumed by rolling
  double spin_angle_rad;      // orientation absorbed without contact migration
};

// Pose of the femur frame relative to the tibia frame at flexion theta.
// Requires 0 <= theta <= params.theta_max_rad (ErrorCode::domain otherwise).
Transform2D femur_pose(const KneeModelParams& params, double theta_rad);

KneeContactState knee_contact_state(const KneeModelParams& params, double theta_rad);

// Slip length accumulated between two flexion angles, integrated through the
// osculating-circle radius at the contact point. For finite rho > 0 this
// equals (rolled arc length) / rho.
double slid_distance(const KneeModelParams& params, double theta0_rad, double theta1_rad);

// Instantaneous center of rotation at each interior grid point, from central
// differences of the pose field. Grid must be strictly increasing, inside
// [0, theta_max], with at least 3 points.
std::vector<Vec2> icr_trajectory(const KneeModelParams& params, std::span<const double> thetas_rad);

// ICR of an arbitrary planar pose field by central differences; shared by
// icr_trajectory and the exo joint diagnostics.
Vec2 finite_difference_icr(const Transform2D& before, const Transform2D& at, const Transform2D& after,
                           double dtheta);

}  // namespace kneexo
