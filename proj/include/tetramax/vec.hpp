#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace tetramax {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 normalized(Vec2 a) { return a / norm(a); }
inline double angle_of(Vec2 a) { return std::atan2(a.y, a.x); }
inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

/// Wraps an angle into [0, period).
inline double wrap_angle(double a, double period = kTwoPi) {
  double r = std::fmod(a, period);
  if (r < 0) r += period;
  if (r >= period) r -= period;
  return r;
}

/// Smallest separation between two angles on a circle of the given period.
inline double cyclic_distance(double a, double b, double period = kTwoPi) {
  const double d = wrap_angle(a - b, period);
  return std::min(d, period - d);
}

/// Distance from point p to the closed segment [a, b].
inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return dist(p, a);
  double t = dot(p - a, ab) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, a + ab * t);
}

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, Vec3 v) { return v * s; }
constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline double dist(Vec3 a, Vec3 b) { return norm(a - b); }

/// Orientation-preserving planar isometry p -> R p + t.
struct Iso2 {
  double c = 1.0;  // cos of rotation
  double s = 0.0;  // sin of rotation
  Vec2 t{};

  static Iso2 rotation(double angle) { return {std::cos(angle), std::sin(angle), {}}; }

  Vec2 apply(Vec2 p) const { return {c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y}; }
  Vec2 rotate(Vec2 v) const { return {c * v.x - s * v.y, s * v.x + c * v.y}; }
  double angle() const { return std::atan2(s, c); }

  /// (this * o)(p) = this(o(p))
  Iso2 operator*(const Iso2& o) const {
    return {c * o.c - s * o.s, s * o.c + c * o.s, apply(o.t)};
  }

  Iso2 inverse() const {
    const Iso2 r{c, -s, {}};
    return {c, -s, -r.rotate(t)};
  }
};

}  // namespace tetramax
