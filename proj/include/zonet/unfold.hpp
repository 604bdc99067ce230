#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zonet/geom/circle_quad.hpp"
#include "zonet/geom/vec.hpp"
#include "zonet/zonohedron.hpp"

namespace zonet {

using geom::ConvexQuad;
using geom::Point2;

/// Inclusive range of rhomb indices j (1-based, R_j); empty when first > last.
struct RhombRange {
  int first = 1;
  int last = 0;
  bool empty() const { return first > last; }
  bool contains(int j) const { return first <= j && j <= last; }
};

/// One zone developed in the plane. The left chain P_0..P_{n-1} starts at the
/// pole image o = P_0; the right chain is Q_j = P_j + e with e the image of the
/// zone-parallel edge. Rhomb R_j has corners P_{j-1}, P_j, Q_j, Q_{j-1}
/// (counterclockwise) and R_{n-1} ends at the south pole image Q_{n-1}.
class PlanarZone {
 public:
  PlanarZone() = default;

  PlanarZone(Params params, int index, double rotation, std::vector<Point2> left, std::vector<Point2> right)
      : params_(params), index_(index), rotation_(rotation) {
    const int n = params_.n;
    if (static_cast<int>(left.size()) != n || static_cast<int>(right.size()) != n) {
      throw std::invalid_argument("PlanarZone: chains must have n vertices");
    }
    vertices_ = std::move(left);
    vertices_.insert(vertices_.end(), right.begin(), right.end());
    rhombs_.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 1; j < n; ++j) {
      const bool flat = params_.theta == 0.0 && n % 2 == 0 && j == n / 2;
      rhombs_.emplace_back(std::array<Point2, 4>{P(j - 1), P(j), Q(j), Q(j - 1)}, flat);
    }
  }

  const Params& params() const { return params_; }
  int n() const { return params_.n; }
  int index() const { return index_; }
  double rotation() const { return rotation_; }
  double alpha() const { return pole_angle(params_); }
  const Point2& o() const { return vertices_.front(); }

  /// P_0..P_{n-1} then Q_0..Q_{n-1}.
  const std::vector<Point2>& vertices() const { return vertices_; }
  const Point2& P(int j) const { return vertices_.at(static_cast<std::size_t>(j)); }
  const Point2& Q(int j) const { return vertices_.at(static_cast<std::size_t>(params_.n + j)); }

  std::vector<int> left_chain() const {
    std::vector<int> ids;
    for (int j = 0; j < params_.n; ++j) ids.push_back(j);
    return ids;
  }
  std::vector<int> right_chain() const {
    std::vector<int> ids;
    for (int j = 0; j < params_.n; ++j) ids.push_back(params_.n + j);
    return ids;
  }

  const std::vector<ConvexQuad>& rhombs() const { return rhombs_; }
  const ConvexQuad& rhomb(int j) const { return rhombs_.at(static_cast<std::size_t>(j - 1)); }

  /// Z+ = R_1..R_{ceil(n/2)-1}; for odd n the zone splits into equal halves.
  RhombRange upper() const { return {1, (params_.n + 1) / 2 - 1}; }
  /// R_{n/2}, present for even n only.
  std::optional<int> middle() const {
    if (params_.n % 2 == 0) return params_.n / 2;
    return std::nullopt;
  }
  /// Z- = R_{floor(n/2)+1}..R_{n-1}.
  RhombRange lower() const { return {params_.n / 2 + 1, params_.n - 1}; }

  /// Zone boundary as a closed polygon: down the left chain, up the right.
  std::vector<Point2> outline() const {
    std::vector<Point2> poly;
    for (int j = 0; j < params_.n; ++j) poly.push_back(P(j));
    for (int j = params_.n - 1; j >= 0; --j) poly.push_back(Q(j));
    return poly;
  }

  /// Copy rotated rigidly about o by `angle`.
  PlanarZone rotated(double angle) const {
    const Point2 pivot = o();
    std::vector<Point2> l, r;
    for (int j = 0; j < params_.n; ++j) {
      l.push_back(j == 0 ? pivot : geom::rotate(P(j), angle, pivot));
      r.push_back(geom::rotate(Q(j), angle, pivot));
    }
    return PlanarZone(params_, index_, rotation_ + angle, std::move(l), std::move(r));
  }

 private:
  Params params_{};
  int index_ = 0;
  double rotation_ = 0.0;
  std::vector<Point2> vertices_;
  std::vector<ConvexQuad> rhombs_;
};

/// Largest distance between corresponding vertices. It bounds the Hausdorff
/// distance between the two zones.
inline double vertex_deviation(const PlanarZone& a, const PlanarZone& b) {
  if (a.n() != b.n()) throw std::invalid_argument("vertex_deviation: zones differ in n");
  double d = 0.0;
  for (std::size_t k = 0; k < a.vertices().size(); ++k) {
    d = std::max(d, geom::distance(a.vertices()[k], b.vertices()[k]));
  }
  return d;
}

/// Face-by-face isometric development of zone `zone_index` of a built solid,
/// in standard orientation: o at the origin, the zone-parallel edges along +x,
/// the zone hanging into y < 0.
inline PlanarZone develop_zone(const Zonohedron& z, int zone_index) {
  const int n = z.n();
  const int i = wrap_index(zone_index, n);
  const auto& V = z.vertices();
  std::vector<Point2> left(static_cast<std::size_t>(n));
  std::vector<Point2> right(static_cast<std::size_t>(n));

  // Shared edge of the current face in 3D (a -> b) and in the plane.
  Vec3 a3 = V[static_cast<std::size_t>(z.vertex_index(i, n))];
  Vec3 b3 = V[static_cast<std::size_t>(z.vertex_index(i + 1, n - 1))];
  Point2 a2{0.0, 0.0};
  Point2 b2{1.0, 0.0};
  Point2 behind{0.0, 1.0};  // a point on the side the strip came from
  left[0] = a2;
  right[0] = b2;

  for (int j = 1; j < n; ++j) {
    const Vec3 d3 = V[static_cast<std::size_t>(z.vertex_index(i, n - j))];
    const Vec3 edge = b3 - a3;
    const Vec3 side = d3 - a3;
    const double len = geom::norm(edge);
    const double along = geom::dot(edge, side) / len;
    const double across = geom::norm(geom::cross(edge, side)) / len;

    const Point2 e2 = (1.0 / geom::distance(a2, b2)) * (b2 - a2);
    Point2 nrm{e2.y, -e2.x};
    if (geom::dot(nrm, behind - a2) > 0.0) nrm = -nrm;
    const Point2 d2 = a2 + along * e2 + across * nrm;
    const Point2 c2 = d2 + (b2 - a2);

    left[static_cast<std::size_t>(j)] = d2;
    right[static_cast<std::size_t>(j)] = c2;
    behind = a2;
    a3 = d3;
    b3 = V[static_cast<std::size_t>(z.vertex_index(i + 1, n - j - 1))];
    a2 = d2;
    b2 = c2;
  }
  return PlanarZone(z.params(), i, 0.0, std::move(left), std::move(right));
}

namespace detail {

/// Coefficients (lowest degree first) of the n-th cyclotomic polynomial.
inline std::vector<long long> cyclotomic(int n) {
  std::vector<long long> num(static_cast<std::size_t>(n + 1), 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long long> den = cyclotomic(d);
    // exact division by a monic divisor
    const std::size_t dn = den.size() - 1;
    std::vector<long long> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
      const long long c = num[i];
      q[i - dn] = c;
      for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
    }
    num = std::move(q);
  }
  return num;
}

/// Edge directions of the closed-form development. Token (k, m) is the image
/// of the step-m left edge of net zone k, at angle k*alpha - gamma_m; m = 0
/// stands for the zone-parallel edge at angle k*alpha. Every vertex is a sum
/// of tokens, evaluated from a canonical form so that vertices shared between
/// zones come out bit-identical:
///  - theta > 0: tokens naming the same direction share one key and sums run
///    in sorted key order;
///  - theta = 0: all directions are n-th roots of unity, and the integer
///    combination is reduced modulo the cyclotomic polynomial first.
class DirectionTable {
 public:
  explicit DirectionTable(const Params& p) : p_(p), alpha_(pole_angle(p)) {
    if (p_.theta == 0.0) {
      phi_ = cyclotomic(p_.n);
      for (int k = 0; k < p_.n; ++k) roots_.push_back(geom::unit_at(geom::kTwoPi * k / p_.n));
    }
  }

  using Key = std::pair<int, int>;

  Key normalize(int k, int m) const {
    const int n = p_.n;
    if (p_.theta == 0.0) return {wrap_index(k - std::min(m, n - m), n), 0};
    if (m == 1 || m == n - 1) return {k - 1, 0};
    return {k, m};
  }

  Point2 sum(std::vector<Key> keys) {
    if (p_.theta == 0.0) return root_sum(keys);
    std::sort(keys.begin(), keys.end());
    Point2 s{0.0, 0.0};
    for (const auto& k : keys) s += direction(k);
    return s;
  }

 private:
  Point2 direction(const Key& key) {
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const double gamma = key.second == 0 ? 0.0 : rhomb_angle(p_, key.second);
    const Point2 d = geom::unit_at(key.first * alpha_ - gamma);
    cache_.emplace(key, d);
    return d;
  }

  Point2 root_sum(const std::vector<Key>& keys) const {
    const std::size_t n = static_cast<std::size_t>(p_.n);
    const std::size_t deg = phi_.size() - 1;
    std::vector<long long> c(n, 0);
    for (const auto& k : keys) ++c[static_cast<std::size_t>(k.first)];
    for (std::size_t i = n; i-- > deg;) {
      const long long lead = c[i];
      if (lead == 0) continue;
      for (std::size_t k = 0; k <= deg; ++k) c[i - deg + k] -= lead * phi_[k];
    }
    Point2 s{0.0, 0.0};
    for (std::size_t k = 0; k < deg; ++k) {
      if (c[k] != 0) s += static_cast<double>(c[k]) * roots_[k];
    }
    return s;
  }

  Params p_;
  double alpha_;
  std::vector<long long> phi_;
  std::vector<Point2> roots_;
  std::map<Key, Point2> cache_;
};

inline PlanarZone closed_form_zone(const Params& p, int k, DirectionTable& table) {
  const int n = p.n;
  std::vector<Point2> left, right;
  std::vector<DirectionTable::Key> keys;
  for (int j = 0; j < n; ++j) {
    if (j > 0) keys.push_back(table.normalize(k, j));
    left.push_back(table.sum(keys));
    auto with_e = keys;
    with_e.push_back(table.normalize(k, 0));
    right.push_back(table.sum(with_e));
  }
  return PlanarZone(p, k, k * pole_angle(p), std::move(left), std::move(right));
}

}  // namespace detail

/// Closed-form development of one zone in standard orientation. Valid for all
/// theta in [0, pi/2); at theta = 0 it is the S-shaped limit.
inline PlanarZone standard_zone(const Params& p) {
  const Params checked = Params::make(p.n, p.theta);
  detail::DirectionTable table(checked);
  return detail::closed_form_zone(checked, 0, table);
}

/// The theta = 0 zone: two mirrored half-regular-polygon chains.
inline PlanarZone theta_zero_zone(int n) { return standard_zone(Params::make(n, 0.0)); }

/// Full unfolding: zone k is the standard zone rotated by k*alpha about o.
struct Net {
  Params params;
  double alpha = 0.0;
  std::vector<PlanarZone> zones;
};

inline Net assemble_net(const Params& p) {
  const Params checked = Params::make(p.n, p.theta);
  detail::DirectionTable table(checked);
  Net net{checked, pole_angle(checked), {}};
  net.zones.reserve(static_cast<std::size_t>(checked.n));
  for (int k = 0; k < checked.n; ++k) net.zones.push_back(detail::closed_form_zone(checked, k, table));
  return net;
}

inline Net assemble_net(const Zonohedron& z) { return assemble_net(z.params()); }

/// Copy of `net` with zone i moved to rotation `angle` about o in place of i*alpha.
inline Net reposition_zone(const Net& net, int i, double angle) {
  Net out = net;
  auto& zone = out.zones.at(static_cast<std::size_t>(i));
  zone = zone.rotated(angle - zone.rotation());
  return out;
}

}  // namespace zonet
