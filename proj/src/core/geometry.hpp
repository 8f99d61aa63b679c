#pragma once

#include <cmath>

namespace kneexo {

constexpr double kPi = 3.141592653589793238462643383279502884;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 rot90(Vec2 a) { return {-a.y, a.x}; }

// Planar rigid pose: apply() rotates by `angle`, then translates.
//
// Frame convention used across the toolkit: right-handed sagittal frame with
// +x anterior and +y proximal along the tibia; knee flexion is a positive
// rotation. Angles are radians everywhere inside the library; degrees appear
// only at I/O boundaries. Translations are millimeters unless a signature
// says otherwise.
struct Transform2D {
  double angle = 0.0;
  Vec2 translation{};
};

inline Vec2 rotate(double angle, Vec2 p) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

inline Vec2 apply(const Transform2D& t, Vec2 p) {
  return rotate(t.angle, p) + t.translation;
}

// compose(a, b) applies b first, then a.
inline Transform2D compose(const Transform2D& a, const Transform2D& b) {
  return {a.angle + b.angle, apply(a, b.translation)};
}

inline Transform2D inverse(const Transform2D& t) {
  return {-t.angle, rotate(-t.angle, -t.translation)};
}

inline Transform2D make_rotation(double angle) { return {angle, {0.0, 0.0}}; }
inline Transform2D make_translation(Vec2 v) { return {0.0, v}; }

// Rotation by `angle` about a fixed world point.
inline Transform2D rotate_about(Vec2 pivot, double angle) {
  return {angle, pivot - rotate(angle, pivot)};
}

// Wraps to (-pi, pi].
double wrap_angle(double angle);

}  // namespace kneexo
