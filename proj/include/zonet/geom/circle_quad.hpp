#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonet/geom/angle.hpp"
#include "zonet/geom/vec.hpp"

namespace zonet::geom {

/// Convex quadrilateral with vertices in counterclockwise order. A zero-area
/// quad (the collapsed flat rhomb) must be flagged `degenerate`.
class ConvexQuad {
 public:
  static constexpr double kAreaTol = 1e-12;

  ConvexQuad() = default;

  explicit ConvexQuad(const std::array<Point2, 4>& v, bool degenerate = false) : v_(v), degenerate_(degenerate) {
    const double scale = std::max({1.0, norm(v[0]), norm(v[1]), norm(v[2]), norm(v[3])});
    const double tol = 1e-12 * scale * scale;
    for (int i = 0; i < 4; ++i) {
      const Point2 e0 = v[(i + 1) % 4] - v[i];
      const Point2 e1 = v[(i + 2) % 4] - v[(i + 1) % 4];
      if (cross(e0, e1) < -tol) {
        throw std::invalid_argument("ConvexQuad: vertices are not convex counterclockwise");
      }
    }
    const double a = area();
    if (!degenerate && a < kAreaTol * scale * scale) {
      throw std::invalid_argument("ConvexQuad: zero-area quad must be flagged degenerate");
    }
    if (degenerate && a > 1e-9 * scale * scale) {
      throw std::invalid_argument("ConvexQuad: quad flagged degenerate has positive area");
    }
  }

  const std::array<Point2, 4>& vertices() const { return v_; }
  const Point2& operator[](std::size_t i) const { return v_[i]; }
  bool degenerate() const { return degenerate_; }

  double area() const {
    double a = 0.0;
    for (int i = 0; i < 4; ++i) a += cross(v_[i], v_[(i + 1) % 4]);
    return 0.5 * a;
  }

  /// Closed-region membership with an absolute slack on the edge tests.
  bool contains(const Point2& p, double tol = 1e-13) const {
    for (int i = 0; i < 4; ++i) {
      const Point2 e = v_[(i + 1) % 4] - v_[i];
      const double len = norm(e);
      if (len == 0.0) continue;
      if (cross(e, p - v_[i]) / len < -tol) return false;
    }
    return true;
  }

  friend bool operator==(const ConvexQuad&, const ConvexQuad&) = default;

 private:
  std::array<Point2, 4> v_{};
  bool degenerate_ = false;
};

/// Result of intersecting a circle with a closed convex quad: arcs of positive
/// measure, plus isolated contact directions (tangency, vertex grazing, or
/// crossings of a degenerate quad).
struct CircleQuadArcs {
  AngularIntervalSet arcs;
  std::vector<double> touches;
};

namespace detail {

/// Parameters t in [0,1] where |a + t (b - a) - c| = r.
inline void segment_circle_params(const Point2& a, const Point2& b, const Point2& c, double r,
                                  std::vector<double>& out) {
  const Point2 d = b - a;
  const Point2 f = a - c;
  const double qa = dot(d, d);
  if (qa == 0.0) return;
  const double qb = 2.0 * dot(f, d);
  const double qc = dot(f, f) - r * r;
  double disc = qb * qb - 4.0 * qa * qc;
  const double scale = std::max(qb * qb, std::abs(4.0 * qa * qc));
  if (disc < 0.0) {
    if (disc > -1e-14 * scale) {
      disc = 0.0;
    } else {
      return;
    }
  }
  const double sq = std::sqrt(disc);
  // numerically stable root pair
  const double q = -0.5 * (qb + std::copysign(sq, qb));
  double t0, t1;
  if (q != 0.0) {
    t0 = q / qa;
    t1 = qc / q;
  } else {
    t0 = t1 = 0.0;
  }
  constexpr double slack = 1e-12;
  for (double t : {t0, t1}) {
    if (t >= -slack && t <= 1.0 + slack) out.push_back(std::clamp(t, 0.0, 1.0));
  }
}

}  // namespace detail

/// Directions phi with center + r (cos phi, sin phi) in the closed quad.
/// The circle is cut at its crossings with the quad boundary and each piece
/// is classified by its midpoint.
inline CircleQuadArcs circle_quad_arcs(const Point2& center, double r, const ConvexQuad& q) {
  if (!(r > 0.0)) throw std::invalid_argument("circle_quad_arcs: radius must be positive");
  CircleQuadArcs out;
  std::vector<double> angles;
  std::vector<double> params;
  for (int i = 0; i < 4; ++i) {
    const Point2& a = q[i];
    const Point2& b = q[(i + 1) % 4];
    params.clear();
    detail::segment_circle_params(a, b, center, r, params);
    for (double t : params) angles.push_back(normalize_angle(polar_angle(a + t * (b - a) - center)));
  }
  if (angles.empty()) {
    if (!q.degenerate() && q.contains(center + r * unit_at(0.0))) out.arcs = AngularIntervalSet::full();
    return out;
  }
  std::sort(angles.begin(), angles.end());
  // coincident crossings (vertex hits) collapse to one cut
  std::vector<double> cuts;
  for (double a : angles) {
    if (cuts.empty() || a - cuts.back() > 1e-13) cuts.push_back(a);
  }
  if (cuts.size() > 1 && cuts.front() + kTwoPi - cuts.back() <= 1e-13) cuts.pop_back();

  if (q.degenerate()) {
    out.touches = cuts;
    return out;
  }

  const std::size_t m = cuts.size();
  std::vector<AngularInterval> inside;
  std::vector<bool> used(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const double s = cuts[i];
    const double e = (i + 1 < m) ? cuts[i + 1] : cuts[0] + kTwoPi;
    const double mid = 0.5 * (s + e);
    if (q.contains(center + r * unit_at(mid))) {
      inside.push_back({s, e});
      used[i] = true;
      used[(i + 1) % m] = true;
    }
  }
  out.arcs = AngularIntervalSet::from_arcs(inside);
  for (std::size_t i = 0; i < m; ++i) {
    if (!used[i]) out.touches.push_back(cuts[i]);
  }
  return out;
}

}  // namespace zonet::geom
