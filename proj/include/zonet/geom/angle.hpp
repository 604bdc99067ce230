#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "zonet/geom/vec.hpp"

namespace zonet::geom {

/// Map an angle to [0, 2pi).
inline double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

/// Signed difference b - a reduced to (-pi, pi].
inline double angle_diff(double a, double b) {
  double d = std::remainder(b - a, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  return d;
}

/// Closed arc [start, end] on the unit circle. `start` lies in [0, 2pi) and
/// `end` in [start, start + 2pi], so an arc may run past 2pi (wrap through 0).
struct AngularInterval {
  double start = 0.0;
  double end = 0.0;

  double measure() const { return end - start; }
  friend bool operator==(const AngularInterval&, const AngularInterval&) = default;
};

inline constexpr double kIntervalMergeTol = 1e-12;

/// A union of arcs of a circle, kept in canonical form: sorted by start,
/// pairwise disjoint (gaps of at least the merge tolerance), and only the
/// last arc may wrap past 2pi. The full circle is the single arc [0, 2pi].
class AngularIntervalSet {
 public:
  AngularIntervalSet() = default;

  /// Builds a canonical set from arbitrary arcs given as (start, end) with
  /// end >= start; arcs longer than 2pi saturate to the full circle.
  static AngularIntervalSet from_arcs(std::span<const AngularInterval> arcs,
                                      double merge_tol = kIntervalMergeTol) {
    std::vector<AngularInterval> pieces;
    pieces.reserve(arcs.size() + 2);
    for (const auto& a : arcs) {
      const double len = a.end - a.start;
      if (!(len >= 0.0)) continue;
      if (len >= kTwoPi) {
        pieces.push_back({0.0, kTwoPi});
        continue;
      }
      const double s = normalize_angle(a.start);
      const double e = s + len;
      if (e > kTwoPi) {
        pieces.push_back({s, kTwoPi});
        pieces.push_back({0.0, e - kTwoPi});
      } else {
        pieces.push_back({s, e});
      }
    }
    AngularIntervalSet out;
    out.canonicalize(std::move(pieces), merge_tol);
    return out;
  }

  static AngularIntervalSet full() {
    AngularIntervalSet s;
    s.arcs_.push_back({0.0, kTwoPi});
    return s;
  }

  bool empty() const { return arcs_.empty(); }
  std::size_t size() const { return arcs_.size(); }
  bool connected() const { return arcs_.size() == 1; }
  bool is_full() const { return arcs_.size() == 1 && arcs_[0].measure() >= kTwoPi; }
  const std::vector<AngularInterval>& arcs() const { return arcs_; }

  double measure() const {
    double m = 0.0;
    for (const auto& a : arcs_) m += a.measure();
    return std::min(m, kTwoPi);
  }

  bool contains(double angle, double tol = 0.0) const {
    const double a = normalize_angle(angle);
    for (const auto& arc : arcs_) {
      if (a >= arc.start - tol && a <= arc.end + tol) return true;
      if (arc.end > kTwoPi && a + kTwoPi <= arc.end + tol) return true;
    }
    return false;
  }

  AngularIntervalSet unite(const AngularIntervalSet& other, double merge_tol = kIntervalMergeTol) const {
    std::vector<AngularInterval> all(arcs_);
    all.insert(all.end(), other.arcs_.begin(), other.arcs_.end());
    return from_arcs(all, merge_tol);
  }

  AngularIntervalSet rotated(double delta) const {
    std::vector<AngularInterval> moved;
    moved.reserve(arcs_.size());
    for (const auto& a : arcs_) moved.push_back({a.start + delta, a.end + delta});
    return from_arcs(moved, 0.0);
  }

  friend bool operator==(const AngularIntervalSet&, const AngularIntervalSet&) = default;

 private:
  void canonicalize(std::vector<AngularInterval> pieces, double tol) {
    arcs_.clear();
    if (pieces.empty()) return;
    std::sort(pieces.begin(), pieces.end(),
              [](const auto& a, const auto& b) { return a.start < b.start || (a.start == b.start && a.end < b.end); });
    std::vector<AngularInterval> merged;
    merged.push_back(pieces.front());
    for (std::size_t i = 1; i < pieces.size(); ++i) {
      auto& last = merged.back();
      const double gap = pieces[i].start - last.end;
      if (gap <= 0.0 || gap < tol) {
        last.end = std::max(last.end, pieces[i].end);
      } else {
        merged.push_back(pieces[i]);
      }
    }
    if (merged.size() == 1) {
      if (merged[0].measure() >= kTwoPi - tol) merged[0] = {0.0, kTwoPi};
      arcs_ = std::move(merged);
      return;
    }
    // join across 0
    const auto& first = merged.front();
    auto& last = merged.back();
    const double wrap_gap = first.start + kTwoPi - last.end;
    if (wrap_gap <= 0.0 || wrap_gap < tol) {
      last.end = std::max(last.end, first.end + kTwoPi);
      merged.erase(merged.begin());
      if (merged.size() == 1 && merged[0].measure() >= kTwoPi - tol) merged[0] = {0.0, kTwoPi};
    }
    arcs_ = std::move(merged);
  }

  std::vector<AngularInterval> arcs_;
};

/// Measure of the shortest single arc covering the whole set: 2pi minus the
/// largest gap between consecutive arcs. Empty set has no covering arc.
inline std::optional<double> shortest_covering_arc(const AngularIntervalSet& s) {
  const auto& arcs = s.arcs();
  if (arcs.empty()) return std::nullopt;
  if (arcs.size() == 1) return arcs[0].measure();
  double largest_gap = 0.0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const double next_start = (i + 1 < arcs.size()) ? arcs[i + 1].start : arcs[0].start + kTwoPi;
    largest_gap = std::max(largest_gap, next_start - arcs[i].end);
  }
  return std::clamp(kTwoPi - largest_gap, 0.0, kTwoPi);
}

/// Covering arc of a finite set of directions (isolated points on the circle).
inline std::optional<double> shortest_covering_arc(std::span<const double> angles) {
  if (angles.empty()) return std::nullopt;
  std::vector<double> a;
  a.reserve(angles.size());
  for (double x : angles) a.push_back(normalize_angle(x));
  std::sort(a.begin(), a.end());
  double largest_gap = a.front() + kTwoPi - a.back();
  for (std::size_t i = 1; i < a.size(); ++i) largest_gap = std::max(largest_gap, a[i] - a[i - 1]);
  return kTwoPi - largest_gap;
}

/// Covering arc of arcs plus isolated touch directions.
inline std::optional<double> shortest_covering_arc(const AngularIntervalSet& s, std::span<const double> points) {
  if (points.empty()) return shortest_covering_arc(s);
  std::vector<AngularInterval> arcs(s.arcs());
  for (double p : points) arcs.push_back({p, p});
  return shortest_covering_arc(AngularIntervalSet::from_arcs(arcs));
}

}  // namespace zonet::geom
