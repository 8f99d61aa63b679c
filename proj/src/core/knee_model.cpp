#include "core/knee_model.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/numerics.hpp"

namespace kneexo {

namespace {

constexpr double kThetaMaxLimit = deg_to_rad(150.0) + 1e-12;

double roll_fraction(double rho) {
  if (std::isinf(rho)) return 1.0;
  return rho / (1.0 + rho);
}

// Parametric speed of the ellipse (a cos t, b sin t).
double ellipse_speed(double a, double b, double t) {
  return std::hypot(a * std::sin(t), b * std::cos(t));
}

// Curvature radius of the ellipse at parameter t.
double curvature_radius(double a, double b, double t) {
  const double sigma = ellipse_speed(a, b, t);
  return sigma * sigma * sigma / (a * b);
}

// Contact parameter of the ellipse after rolling through orientation phi.
// Tangency with the plateau from above gives the support point in closed
// form; unwrapping keeps t continuous over the supported flexion range
// (t = -pi/2 at phi = 0, decreasing as the contact migrates posteriorly).
double contact_param_for_roll(double a, double b, double phi) {
  const double h = std::hypot(a * std::sin(phi), b * std::cos(phi));
  const double ct = -a * std::sin(phi) / h;
  const double st = -b * std::cos(phi) / h;
  double t = std::atan2(st, ct);
  if (t > 1e-12) t -= 2.0 * kPi;
  return t;
}

double rolled_arc(double a, double b, double t_contact) {
  // Contact parameter decreases from -pi/2 while rolling; arc is positive.
  return integrate([a, b](double t) { return ellipse_speed(a, b, t); }, t_contact, -kPi / 2.0,
                   1e-10);
}

void check_theta(const KneeModelParams& params, double theta) {
  if (!(theta >= 0.0 && theta <= params.theta_max_rad + 1e-12)) {
    fail(ErrorCode::domain, "flexion angle " + std::to_string(theta) +
                                " rad outside [0, theta_max]");
  }
}

}  // namespace

void validate(const KneeModelParams& params) {
  std::vector<std::string> violations;
  if (!(params.semi_minor_b_mm > 0.0)) {
    violations.push_back("knee.semi_minor_b_mm: must be > 0");
  }
  if (!(params.semi_major_a_mm >= params.semi_minor_b_mm)) {
    violations.push_back("knee.semi_major_a_mm: must be >= semi_minor_b_mm");
  }
  if (!(params.sliding_ratio >= 0.0)) {  // +inf passes
    violations.push_back("knee.sliding_ratio: must be >= 0 (inf = pure rolling)");
  }
  if (!(params.theta_max_rad > 0.0 && params.theta_max_rad <= kThetaMaxLimit)) {
    violations.push_back("knee.theta_max_deg: must be in (0, 150]");
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

KneeContactState knee_contact_state(const KneeModelParams& params, double theta_rad) {
  check_theta(params, theta_rad);
  const double a = params.semi_major_a_mm;
  const double b = params.semi_minor_b_mm;
  const double fr = roll_fraction(params.sliding_ratio);
  const double theta_roll = fr * theta_rad;

  KneeContactState s{};
  s.contact_param = contact_param_for_roll(a, b, theta_roll);
  s.rolled_arc_mm = rolled_arc(a, b, s.contact_param);
  s.surface_advance_mm = -s.rolled_arc_mm;
  s.spin_angle_rad = theta_rad - theta_roll;
  return s;
}

Transform2D femur_pose(const KneeModelParams& params, double theta_rad) {
  const KneeContactState s = knee_contact_state(params, theta_rad);
  const double a = params.semi_major_a_mm;
  const double b = params.semi_minor_b_mm;
  const double theta_roll = theta_rad - s.spin_angle_rad;

  // Rolled pose: the contact material point sits at (u, 0) with the body
  // rotated by theta_roll.
  const Vec2 contact_body{a * std::cos(s.contact_param),
                          b * std::sin(s.contact_param) + b};
  const Vec2 contact_world{s.surface_advance_mm, 0.0};
  const Vec2 t_roll = contact_world - rotate(theta_roll, contact_body);

  // Spin about the current contact point absorbs the sliding share.
  const Vec2 translation =
      rotate(s.spin_angle_rad, t_roll - contact_world) + contact_world;
  return {theta_rad, translation};
}

double slid_distance(const KneeModelParams& params, double theta0_rad, double theta1_rad) {
  check_theta(params, theta0_rad);
  check_theta(params, theta1_rad);
  if (std::isinf(params.sliding_ratio)) return 0.0;  // pure rolling
  const double a = params.semi_major_a_mm;
  const double b = params.semi_minor_b_mm;
  const double fr = roll_fraction(params.sliding_ratio);
  const double spin_share = 1.0 - fr;
  // ds_slip = r_curv(contact(theta)) * dtheta_spin, integrated over theta.
  return integrate(
      [&](double theta) {
        const double t = contact_param_for_roll(a, b, fr * theta);
        return curvature_radius(a, b, t) * spin_share;
      },
      theta0_rad, theta1_rad, 1e-10);
}

Vec2 finite_difference_icr(const Transform2D& before, const Transform2D& at, const Transform2D& after,
                           double dtheta) {
  const double omega = (after.angle - before.angle) / (2.0 * dtheta);
  if (std::abs(omega) < 1e-14) {
    fail(ErrorCode::singular, "ICR undefined: zero angular rate over the grid step");
  }
  const Vec2 v = (1.0 / (2.0 * dtheta)) * (after.translation - before.translation);
  return at.translation + (1.0 / omega) * rot90(v);
}

std::vector<Vec2> icr_trajectory(const KneeModelParams& params, std::span<const double> thetas_rad) {
  if (thetas_rad.size() < 3) {
    fail(ErrorCode::invalid_argument, "icr_trajectory needs at least 3 grid points");
  }
  for (std::size_t i = 0; i + 1 < thetas_rad.size(); ++i) {
    if (!(thetas_rad[i] < thetas_rad[i + 1])) {
      fail(ErrorCode::invalid_argument, "icr_trajectory grid must be strictly increasing");
    }
  }
  std::vector<Transform2D> poses;
  poses.reserve(thetas_rad.size());
  for (double theta : thetas_rad) poses.push_back(femur_pose(params, theta));

  std::vector<Vec2> icr;
  icr.reserve(thetas_rad.size() - 2);
  for (std::size_t i = 1; i + 1 < thetas_rad.size(); ++i) {
    const double h = 0.5 * (thetas_rad[i + 1] - thetas_rad[i - 1]);
    icr.push_back(finite_difference_icr(poses[i - 1], poses[i], poses[i + 1], h));
  }
  return icr;
}

}  // namespace kneexo
