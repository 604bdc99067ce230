#pragma once

#include <cmath>
#include <numbers>

namespace zonet::geom {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Planar point / vector. Unit length is one rhomb edge.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2& operator+=(const Point2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Point2& operator-=(const Point2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend constexpr Point2 operator+(Point2 a, const Point2& b) { return a += b; }
  friend constexpr Point2 operator-(Point2 a, const Point2& b) { return a -= b; }
  friend constexpr Point2 operator*(double s, const Point2& p) { return {s * p.x, s * p.y}; }
  friend constexpr Point2 operator*(const Point2& p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr Point2 operator-(const Point2& p) { return {-p.x, -p.y}; }
  friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

inline constexpr double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point2& p) { return std::hypot(p.x, p.y); }
inline double distance(const Point2& a, const Point2& b) { return norm(a - b); }
inline double polar_angle(const Point2& p) { return std::atan2(p.y, p.x); }
inline Point2 unit_at(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Counterclockwise rotation of `p` by `angle` about `pivot`.
inline Point2 rotate(const Point2& p, double angle, const Point2& pivot = {}) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Point2 d = p - pivot;
  return pivot + Point2{c * d.x - s * d.y, s * d.x + c * d.y};
}

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend constexpr Vec3 operator*(const Vec3& v, double s) { return s * v; }
  friend constexpr Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

inline constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// Angle between two nonzero vectors, stable for nearly parallel inputs.
inline double angle_between(const Vec3& a, const Vec3& b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }
inline double angle_between(const Point2& a, const Point2& b) {
  return std::atan2(std::abs(cross(a, b)), dot(a, b));
}

}  // namespace zonet::geom
