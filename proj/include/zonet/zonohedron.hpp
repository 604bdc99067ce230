#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zonet/geom/vec.hpp"

namespace zonet {

using geom::Vec3;

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polar zonohedron parameters: n generators at polar elevation theta.
/// theta = 0 is the flat doubly covered n-gon; theta = pi/2 is excluded.
struct Params {
  int n = 3;
  double theta = 0.0;

  static Params make(int n, double theta) {
    if (n < 3) throw ParamError("n must be ≥ 3");
    if (!(theta >= 0.0) || !(theta < geom::kPi / 2)) throw ParamError("theta must lie in [0, pi/2)");
    return Params{n, theta};
  }

  friend bool operator==(const Params&, const Params&) = default;
};

inline int wrap_index(int i, int n) { return ((i % n) + n) % n; }

/// u_k = (cos(2 pi k/n) cos theta, sin(2 pi k/n) cos theta, sin theta).
inline std::vector<Vec3> generators(const Params& p) {
  std::vector<Vec3> u;
  u.reserve(static_cast<std::size_t>(p.n));
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  for (int k = 0; k < p.n; ++k) {
    const double phi = geom::kTwoPi * k / p.n;
    u.push_back({std::cos(phi) * c, std::sin(phi) * c, s});
  }
  return u;
}

/// Angle between generators at cyclic distance k, 1 <= k <= n-1:
/// acos(cos^2 theta cos(2 pi k/n) + sin^2 theta). gamma_1 is the pole angle alpha.
inline double rhomb_angle(const Params& p, int k) {
  if (k < 1 || k > p.n - 1) throw std::out_of_range("rhomb_angle: k must lie in [1, n-1]");
  // Half-angle form, accurate both for thin rhombs and near gamma = pi:
  // sin(gamma/2) = cos(theta) sin(pi k/n),
  // cos(gamma/2) = sqrt(cos^2(pi k/n) + sin^2(pi k/n) sin^2(theta)).
  const double sk = std::sin(geom::kPi * k / p.n);
  const double ck = std::cos(geom::kPi * k / p.n);
  return 2.0 * std::atan2(std::cos(p.theta) * sk, std::hypot(ck, sk * std::sin(p.theta)));
}

inline double pole_angle(const Params& p) { return rhomb_angle(p, 1); }

/// A rhomb face labelled by its zone and its step from the north pole.
/// Face (i, j) is spanned by generators u_i and u_{i-j}; step 1 touches the
/// north pole and step n-1 the south pole. Vertices run outward-oriented.
struct Face {
  std::array<int, 4> v{};
  int zone = 0;
  int step = 1;
  friend bool operator==(const Face&, const Face&) = default;
};

class Zonohedron {
 public:
  Zonohedron(Params params, std::vector<Vec3> generators, std::vector<Vec3> vertices, std::vector<Face> faces)
      : params_(params), generators_(std::move(generators)), vertices_(std::move(vertices)), faces_(std::move(faces)) {}

  const Params& params() const { return params_; }
  int n() const { return params_.n; }
  const std::vector<Vec3>& generators() const { return generators_; }
  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }

  /// Vertex holding the sum of `length` consecutive generators from `start`.
  /// Length 0 is the south pole (origin), length n the north pole.
  int vertex_index(int start, int length) const {
    const int n = params_.n;
    if (length <= 0) return 0;
    if (length >= n) return static_cast<int>(vertices_.size()) - 1;
    return 1 + wrap_index(start, n) * (n - 1) + (length - 1);
  }
  int south() const { return 0; }
  int north() const { return static_cast<int>(vertices_.size()) - 1; }

  int face_id(int zone, int step) const { return wrap_index(zone, params_.n) * (params_.n - 1) + (step - 1); }
  const Face& face(int zone, int step) const { return faces_.at(static_cast<std::size_t>(face_id(zone, step))); }

  /// Face ids of zone i ordered north to south.
  std::vector<int> zone(int i) const {
    std::vector<int> ids;
    for (int j = 1; j < params_.n; ++j) ids.push_back(face_id(i, j));
    return ids;
  }

  /// Undirected edges as sorted vertex pairs, deduplicated.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (const auto& f : faces_) {
      for (int k = 0; k < 4; ++k) {
        const int a = f.v[static_cast<std::size_t>(k)];
        const int b = f.v[static_cast<std::size_t>((k + 1) % 4)];
        e.emplace_back(std::min(a, b), std::max(a, b));
      }
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
  }

  /// Outward unit normal of face (zone, step), from its two generators.
  Vec3 face_normal(const Face& f) const {
    // u_a x u_b = 2 c sin(d/2) (-s cos m, -s sin m, c cos(d/2)) with d, m the
    // azimuth difference and mean; this form stays accurate for flat rhombs.
    const int n = params_.n;
    const double c = std::cos(params_.theta);
    const double s = std::sin(params_.theta);
    const double pa = geom::kTwoPi * f.zone / n;
    const double pb = geom::kTwoPi * (f.zone - f.step) / n;
    const double m = 0.5 * (pa + pb);
    const double half_d = 0.5 * (pb - pa);
    Vec3 nrm{-s * std::cos(m), -s * std::sin(m), c * std::cos(half_d)};
    nrm = (1.0 / geom::norm(nrm)) * nrm;
    const Vec3 centre = 0.5 * (vertices_[static_cast<std::size_t>(north())] + vertices_[0]);
    Vec3 fc{};
    for (int k : f.v) fc += 0.25 * vertices_[static_cast<std::size_t>(k)];
    if (geom::dot(nrm, fc - centre) < 0.0) nrm = -nrm;
    return nrm;
  }

 private:
  Params params_;
  std::vector<Vec3> generators_;
  std::vector<Vec3> vertices_;
  std::vector<Face> faces_;
};

/// Structural checks on a built solid. Every check carries its worst margin.
struct ZonohedronReport {
  bool unit_edges = false;
  bool planar_faces = false;
  bool closed_orientable = false;
  bool euler = false;
  bool centrally_symmetric = false;
  bool convex = false;
  double max_edge_deviation = 0.0;
  double max_nonplanarity = 0.0;
  double max_hull_violation = 0.0;
  double symmetry_residual = 0.0;

  bool ok() const { return unit_edges && planar_faces && closed_orientable && euler && centrally_symmetric && convex; }

  std::string first_failure() const {
    if (!unit_edges) return "unit_edges";
    if (!planar_faces) return "planar_faces";
    if (!closed_orientable) return "closed_orientable";
    if (!euler) return "euler";
    if (!centrally_symmetric) return "centrally_symmetric";
    if (!convex) return "convex";
    return {};
  }
};

inline constexpr double kStructureTol = 1e-10;

inline ZonohedronReport validate(const Zonohedron& z) {
  ZonohedronReport r;
  const auto& V = z.vertices();
  const auto& F = z.faces();

  for (const auto& f : F) {
    for (int k = 0; k < 4; ++k) {
      const Vec3& a = V[static_cast<std::size_t>(f.v[static_cast<std::size_t>(k)])];
      const Vec3& b = V[static_cast<std::size_t>(f.v[static_cast<std::size_t>((k + 1) % 4)])];
      r.max_edge_deviation = std::max(r.max_edge_deviation, std::abs(geom::distance(a, b) - 1.0));
    }
  }
  r.unit_edges = r.max_edge_deviation < kStructureTol;

  std::vector<Vec3> normals;
  normals.reserve(F.size());
  for (const auto& f : F) {
    const Vec3 nrm = z.face_normal(f);
    normals.push_back(nrm);
    Vec3 c{};
    for (int k : f.v) c += 0.25 * V[static_cast<std::size_t>(k)];
    for (int k : f.v) {
      r.max_nonplanarity = std::max(r.max_nonplanarity, std::abs(geom::dot(nrm, V[static_cast<std::size_t>(k)] - c)));
    }
  }
  r.planar_faces = r.max_nonplanarity < kStructureTol;

  std::map<std::pair<int, int>, int> directed;
  for (const auto& f : F) {
    for (int k = 0; k < 4; ++k) {
      ++directed[{f.v[static_cast<std::size_t>(k)], f.v[static_cast<std::size_t>((k + 1) % 4)]}];
    }
  }
  bool closed = true;
  for (const auto& [e, count] : directed) {
    if (count != 1) closed = false;
    auto rev = directed.find({e.second, e.first});
    if (rev == directed.end() || rev->second != 1) closed = false;
  }
  r.closed_orientable = closed;

  const long long nv = static_cast<long long>(V.size());
  const long long ne = static_cast<long long>(directed.size() / 2);
  const long long nf = static_cast<long long>(F.size());
  r.euler = (nv - ne + nf == 2);

  const Vec3 mirror = V[static_cast<std::size_t>(z.north())] + V[static_cast<std::size_t>(z.south())];
  for (const auto& v : V) {
    const Vec3 target = mirror - v;
    double best = 1e300;
    for (const auto& w : V) best = std::min(best, geom::distance(target, w));
    r.symmetry_residual = std::max(r.symmetry_residual, best);
  }
  r.centrally_symmetric = r.symmetry_residual < kStructureTol;

  double worst = -1e300;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const Vec3& a = V[static_cast<std::size_t>(F[i].v[0])];
    for (const auto& v : V) worst = std::max(worst, geom::dot(normals[i], v - a));
  }
  r.max_hull_violation = std::max(0.0, worst);
  r.convex = r.max_hull_violation < kStructureTol;
  return r;
}

/// Builds P(n, theta) for theta > 0 as the Minkowski sum of its generators.
/// Vertices are the sums of cyclically consecutive generator runs.
inline Zonohedron build(const Params& p) {
  const Params checked = Params::make(p.n, p.theta);
  if (checked.theta == 0.0) {
    throw ParamError("build: theta = 0 is the flat n-gon; use the planar construction");
  }
  const int n = checked.n;
  std::vector<Vec3> u = generators(checked);

  std::vector<Vec3> verts;
  verts.reserve(static_cast<std::size_t>(n * (n - 1) + 2));
  verts.push_back({0.0, 0.0, 0.0});
  for (int s = 0; s < n; ++s) {
    Vec3 acc{};
    for (int len = 1; len < n; ++len) {
      acc += u[static_cast<std::size_t>(wrap_index(s + len - 1, n))];
      verts.push_back(acc);
    }
  }
  Vec3 top{};
  for (const auto& g : u) top += g;
  verts.push_back(top);

  Zonohedron scaffold(checked, u, verts, {});
  std::vector<Face> faces;
  faces.reserve(static_cast<std::size_t>(n * (n - 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      const int a = scaffold.vertex_index(i, n - j + 1);
      const int b = scaffold.vertex_index(i + 1, n - j);
      const int c = scaffold.vertex_index(i + 1, n - j - 1);
      const int d = scaffold.vertex_index(i, n - j);
      Face f{{a, b, c, d}, i, j};
      const Vec3& A = verts[static_cast<std::size_t>(a)];
      const Vec3 geo_normal = geom::cross(verts[static_cast<std::size_t>(b)] - A, verts[static_cast<std::size_t>(d)] - A);
      if (geom::dot(geo_normal, scaffold.face_normal(f)) < 0.0) f.v = {a, d, c, b};
      faces.push_back(f);
    }
  }

  Zonohedron z(checked, std::move(u), std::move(verts), std::move(faces));
  const ZonohedronReport report = validate(z);
  if (!report.ok()) throw ConstructionError("build: check failed: " + report.first_failure());
  return z;
}

}  // namespace zonet
