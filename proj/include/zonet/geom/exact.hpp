#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "zonet/geom/vec.hpp"

namespace zonet::geom::exact {

// Coordinates are snapped to integer multiples of 2^-53 and all predicates
// run on those integers. With |x| < 2^8 a snapped coordinate needs 61 bits,
// a difference 62, and an orientation determinant at most 126 bits.
using Int = __int128;

inline constexpr int kSnapExponent = 53;
inline constexpr double kMaxCoordinate = 256.0;

struct IPoint {
  Int x = 0;
  Int y = 0;
  friend bool operator==(const IPoint&, const IPoint&) = default;
};

class NotSimpleError : public std::invalid_argument {
 public:
  NotSimpleError() : std::invalid_argument("not simple") {}
};

inline Int snap(double v) {
  if (!std::isfinite(v) || std::abs(v) >= kMaxCoordinate) {
    throw std::domain_error("exact: coordinate outside the snapping range");
  }
  return static_cast<Int>(std::llround(std::ldexp(v, kSnapExponent)));
}

inline IPoint snap(const Point2& p) { return {snap(p.x), snap(p.y)}; }

inline std::vector<IPoint> snap(std::span<const Point2> pts) {
  std::vector<IPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(snap(p));
  return out;
}

/// Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear.
inline int orient(const IPoint& a, const IPoint& b, const IPoint& c) {
  const Int det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (det > 0) - (det < 0);
}

/// Orientation of a simple polygon without straight vertices, read off at
/// its lexicographically smallest vertex (always strictly convex there).
inline int polygon_orientation(std::span<const IPoint> poly) {
  const std::size_t n = poly.size();
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (poly[i].x < poly[k].x || (poly[i].x == poly[k].x && poly[i].y < poly[k].y)) k = i;
  }
  return orient(poly[(k + n - 1) % n], poly[k], poly[(k + 1) % n]);
}

/// b lies within the bounding box of segment [a, c] (assumes collinearity).
inline bool on_segment_box(const IPoint& a, const IPoint& b, const IPoint& c) {
  return std::min(a.x, c.x) <= b.x && b.x <= std::max(a.x, c.x) && std::min(a.y, c.y) <= b.y &&
         b.y <= std::max(a.y, c.y);
}

/// Closed segments [p1,p2] and [q1,q2] share at least one point.
inline bool segments_intersect(const IPoint& p1, const IPoint& p2, const IPoint& q1, const IPoint& q2) {
  const int d1 = orient(q1, q2, p1);
  const int d2 = orient(q1, q2, p2);
  const int d3 = orient(p1, p2, q1);
  const int d4 = orient(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment_box(q1, p1, q2)) return true;
  if (d2 == 0 && on_segment_box(q1, p2, q2)) return true;
  if (d3 == 0 && on_segment_box(p1, q1, p2)) return true;
  if (d4 == 0 && on_segment_box(p1, q2, p2)) return true;
  return false;
}

/// Drops repeated vertices and vertices where the boundary runs straight on.
/// A vertex where the boundary folds back on itself is left in place so the
/// simplicity check rejects it.
inline std::vector<IPoint> clean_polygon(std::vector<IPoint> poly) {
  bool changed = true;
  while (changed && poly.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < poly.size() && poly.size() >= 3; ++i) {
      const std::size_t n = poly.size();
      const IPoint& prev = poly[(i + n - 1) % n];
      const IPoint& cur = poly[i];
      const IPoint& next = poly[(i + 1) % n];
      const bool dup = cur == next;
      const bool straight = orient(prev, cur, next) == 0 &&
                            ((cur.x - prev.x) * (next.x - cur.x) + (cur.y - prev.y) * (next.y - cur.y)) > 0;
      if (dup || straight) {
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return poly;
}

/// Simple closed polygon: no two edges meet except consecutive edges at
/// their shared vertex.
inline bool is_simple(std::span<const IPoint> poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const IPoint& a0 = poly[i];
    const IPoint& a1 = poly[(i + 1) % n];
    if (a0 == a1) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const IPoint& b0 = poly[j];
      const IPoint& b1 = poly[(j + 1) % n];
      const bool adjacent_next = (j == i + 1);
      const bool adjacent_prev = (i == 0 && j == n - 1);
      if (adjacent_next) {
        // share a1 == b0; overlap only if the turn is a full fold-back
        if (orient(a0, a1, b1) == 0 &&
            ((a1.x - a0.x) * (b1.x - b0.x) + (a1.y - a0.y) * (b1.y - b0.y)) < 0) {
          return false;
        }
        continue;
      }
      if (adjacent_prev) {
        if (orient(b0, b1, a1) == 0 &&
            ((b1.x - b0.x) * (a1.x - a0.x) + (b1.y - b0.y) * (a1.y - a0.y)) < 0) {
          return false;
        }
        continue;
      }
      if (segments_intersect(a0, a1, b0, b1)) return false;
    }
  }
  return true;
}

inline bool is_convex_ccw(std::span<const IPoint> poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) < 0) return false;
  }
  return true;
}

/// Closed triangle membership.
inline bool in_triangle(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& p) {
  return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
}

/// Ear-clipping triangulation of a simple counterclockwise polygon without
/// straight or repeated vertices.
inline std::vector<std::vector<IPoint>> triangulate(std::vector<IPoint> poly) {
  std::vector<std::vector<IPoint>> tris;
  while (poly.size() > 3) {
    const std::size_t n = poly.size();
    bool clipped = false;
    for (std::size_t i = 0; i < n; ++i) {
      const IPoint& a = poly[(i + n - 1) % n];
      const IPoint& b = poly[i];
      const IPoint& c = poly[(i + 1) % n];
      if (orient(a, b, c) <= 0) continue;
      bool ear = true;
      for (std::size_t k = 0; k < n && ear; ++k) {
        if (k == i || k == (i + 1) % n || k == (i + n - 1) % n) continue;
        const IPoint& p = poly[k];
        if (p == a || p == b || p == c) continue;
        if (in_triangle(a, b, c, p)) ear = false;
      }
      if (!ear) continue;
      tris.push_back({a, b, c});
      poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
      poly = clean_polygon(std::move(poly));
      clipped = true;
      break;
    }
    if (!clipped) throw NotSimpleError();
  }
  if (poly.size() == 3 && orient(poly[0], poly[1], poly[2]) > 0) tris.push_back(poly);
  return tris;
}

/// Convex pieces (counterclockwise, positive area) whose interiors and
/// shared diagonals make up the polygon interior. Empty for zero area.
inline std::vector<std::vector<IPoint>> convex_pieces(std::span<const IPoint> input) {
  std::vector<IPoint> poly = clean_polygon(std::vector<IPoint>(input.begin(), input.end()));
  if (poly.size() < 3) return {};
  if (!is_simple(poly)) throw NotSimpleError();
  const int o = polygon_orientation(poly);
  if (o == 0) return {};
  if (o < 0) std::reverse(poly.begin(), poly.end());
  if (is_convex_ccw(poly)) return {poly};
  return triangulate(std::move(poly));
}

/// Interiors of two convex counterclockwise polygons intersect iff no edge
/// line of either polygon weakly separates them.
inline bool convex_interiors_overlap(std::span<const IPoint> a, std::span<const IPoint> b) {
  auto separated_by_edge_of = [](std::span<const IPoint> p, std::span<const IPoint> q) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
      const IPoint& e0 = p[i];
      const IPoint& e1 = p[(i + 1) % n];
      bool all_outside = true;
      for (const auto& v : q) {
        if (orient(e0, e1, v) > 0) {
          all_outside = false;
          break;
        }
      }
      if (all_outside) return true;
    }
    return false;
  };
  return !separated_by_edge_of(a, b) && !separated_by_edge_of(b, a);
}

/// Exact test for a point strictly interior to both simple polygons.
/// Boundary contact alone does not count. Throws NotSimpleError for
/// self-intersecting input.
inline bool polygons_interior_overlap(std::span<const Point2> a, std::span<const Point2> b) {
  const auto pa = convex_pieces(snap(a));
  const auto pb = convex_pieces(snap(b));
  for (const auto& x : pa) {
    for (const auto& y : pb) {
      if (convex_interiors_overlap(x, y)) return true;
    }
  }
  return false;
}

}  // namespace zonet::geom::exact

namespace zonet::geom {
using exact::polygons_interior_overlap;
}
