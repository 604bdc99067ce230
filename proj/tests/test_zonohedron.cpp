#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "support.hpp"
#include "zonet/zonohedron.hpp"

using namespace zonet;
using geom::deg_to_rad;
using geom::kPi;
using geom::Vec3;

namespace {

Params P(int n, double deg) { return Params::make(n, deg_to_rad(deg)); }

/// Brute-force hull vertices of the Minkowski sum of segments [0, u_k]: a
/// subset sum is a vertex iff some direction picks exactly that subset. For
/// each pair of generators the candidate directions are perturbations of
/// their common normal; collect all distinct maximisers.
std::vector<Vec3> brute_hull_vertices(const std::vector<Vec3>& u) {
  const int n = static_cast<int>(u.size());
  std::vector<Vec3> dirs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Vec3 c = geom::cross(u[a], u[b]);
      if (geom::norm(c) < 1e-12) continue;
      const Vec3 e1 = (1.0 / geom::norm(u[a])) * u[a];
      const Vec3 e2 = (1.0 / geom::norm(u[b])) * u[b];
      for (double sgn : {1.0, -1.0}) {
        for (double s1 : {1.0, -1.0}) {
          for (double s2 : {1.0, -1.0}) dirs.push_back(sgn * c + 1e-6 * (s1 * e1 + s2 * e2));
        }
      }
    }
  }
  std::vector<Vec3> out;
  for (const auto& d : dirs) {
    Vec3 v{};
    for (const auto& g : u) {
      if (geom::dot(g, d) > 0.0) v += g;
    }
    bool seen = false;
    for (const auto& w : out) seen = seen || geom::distance(v, w) < 1e-9;
    if (!seen) out.push_back(v);
  }
  return out;
}

double support(const std::vector<Vec3>& pts, const Vec3& d) {
  double best = -1e300;
  for (const auto& p : pts) best = std::max(best, geom::dot(p, d));
  return best;
}

}  // namespace

TEST(Params, RejectsBadInput) {
  EXPECT_THROW(Params::make(2, 0.5), ParamError);
  EXPECT_THROW(Params::make(8, -0.1), ParamError);
  EXPECT_THROW(Params::make(8, kPi / 2), ParamError);
  EXPECT_THROW(Params::make(8, std::nan("")), ParamError);
  try {
    Params::make(2, 0.5);
  } catch (const ParamError& e) {
    EXPECT_STREQ(e.what(), "n must be ≥ 3");
  }
  EXPECT_NO_THROW(Params::make(3, 0.0));
}

TEST(Build, RejectsFlatCase) { EXPECT_THROW(build(Params::make(8, 0.0)), ParamError); }

TEST(Generators, UnitLengthCommonElevationEqualAzimuthSteps) {
  const Params p = P(7, 33.0);
  const auto u = generators(p);
  ASSERT_EQ(u.size(), 7u);
  for (int k = 0; k < 7; ++k) {
    EXPECT_NEAR(geom::norm(u[k]), 1.0, 1e-15);
    EXPECT_NEAR(u[k].z, std::sin(p.theta), 1e-15);
    EXPECT_NEAR(u[k].x, std::cos(p.theta) * std::cos(2 * kPi * k / 7), 1e-15);
    EXPECT_NEAR(u[k].y, std::cos(p.theta) * std::sin(2 * kPi * k / 7), 1e-15);
  }
}

TEST(RhombAngle, MatchesAcosOracle) {
  for (int n : {3, 5, 8, 16, 31}) {
    for (double deg : {0.5, 10.0, 45.0, 80.0}) {
      const Params p = P(n, deg);
      const auto u = generators(p);
      for (int k = 1; k < n; ++k) {
        const double c = std::cos(p.theta), s = std::sin(p.theta);
        const double oracle = std::acos(c * c * std::cos(2 * kPi * k / n) + s * s);
        EXPECT_NEAR(rhomb_angle(p, k), oracle, 1e-7) << n << " " << deg << " " << k;
        EXPECT_NEAR(rhomb_angle(p, k), geom::angle_between(u[0], u[k]), 1e-14);
      }
    }
  }
}

TEST(RhombAngle, OppositeGeneratorsAtEvenN) {
  // k = n/2: generators are mirror images across the axis, angle pi - 2 theta.
  for (double deg : {1.0, 20.0, 60.0}) {
    EXPECT_NEAR(rhomb_angle(P(16, deg), 8), kPi - 2 * deg_to_rad(deg), 1e-14);
  }
  EXPECT_THROW(rhomb_angle(P(8, 10), 0), std::out_of_range);
  EXPECT_THROW(rhomb_angle(P(8, 10), 8), std::out_of_range);
}

TEST(PoleAngle, Anchors) {
  EXPECT_NEAR(geom::rad_to_deg(pole_angle(P(16, 0.0))), 22.5, 1e-12);
  EXPECT_NEAR(geom::rad_to_deg(pole_angle(P(16, 20.0))), 21.126976322874537, 1e-9);
  EXPECT_NEAR(pole_angle(P(6, 0.0)), kPi / 3, 1e-15);
  // alpha decreases with theta.
  double prev = 1e9;
  for (double deg = 0; deg < 90; deg += 7.5) {
    const double a = pole_angle(P(12, deg));
    EXPECT_LT(a, prev);
    prev = a;
  }
}

TEST(Build, CountsAndEuler) {
  for (int n = 3; n <= 12; ++n) {
    const Zonohedron z = build(P(n, 35.0));
    const long long V = static_cast<long long>(z.vertices().size());
    const long long E = static_cast<long long>(z.edges().size());
    const long long F = static_cast<long long>(z.faces().size());
    EXPECT_EQ(V, n * (n - 1) + 2) << n;
    EXPECT_EQ(F, n * (n - 1)) << n;
    EXPECT_EQ(E, 2LL * n * (n - 1)) << n;
    EXPECT_EQ(V - E + F, 2) << n;
  }
}

TEST(Build, VerticesMatchBruteForceHull) {
  for (int n : {3, 4, 5, 7, 10}) {
    const Zonohedron z = build(P(n, 27.0));
    const auto hull = brute_hull_vertices(z.generators());
    ASSERT_EQ(hull.size(), z.vertices().size()) << n;
    for (const auto& h : hull) {
      double best = 1e300;
      for (const auto& v : z.vertices()) best = std::min(best, geom::distance(h, v));
      EXPECT_LT(best, 1e-12) << n;
    }
  }
}

TEST(Build, SupportFunctionMatchesGenerators) {
  // h(d) = sum over k of max(0, <u_k, d>) for a zonotope.
  auto g = zonet::testing::rng(11);
  std::normal_distribution<double> N(0.0, 1.0);
  for (int n : {3, 8, 13}) {
    const Zonohedron z = build(P(n, 42.0));
    for (int t = 0; t < 200; ++t) {
      const Vec3 d{N(g), N(g), N(g)};
      double h = 0.0;
      for (const auto& u : z.generators()) h += std::max(0.0, geom::dot(u, d));
      EXPECT_NEAR(support(z.vertices(), d), h, 1e-12);
    }
  }
}

TEST(Build, NEquals3IsAUnitRhombohedron) {
  const Zonohedron z = build(Params::make(3, std::atan(1.0 / std::sqrt(2.0))));
  // At tan(theta) = 1/sqrt 2 the three generators are orthonormal: a unit cube.
  const auto& u = z.generators();
  EXPECT_NEAR(geom::dot(u[0], u[1]), 0.0, 1e-15);
  EXPECT_NEAR(geom::dot(u[1], u[2]), 0.0, 1e-15);
  EXPECT_EQ(z.vertices().size(), 8u);
  EXPECT_EQ(z.faces().size(), 6u);
  EXPECT_NEAR(rhomb_angle(z.params(), 1), kPi / 2, 1e-15);
}

TEST(Validate, P8At50IsClean) {
  const Zonohedron z = build(P(8, 50.0));
  const auto r = validate(z);
  EXPECT_TRUE(r.ok()) << r.first_failure();
  EXPECT_LT(r.max_edge_deviation, 1e-14);
  EXPECT_LT(r.max_nonplanarity, 1e-14);
  EXPECT_LT(r.max_hull_violation, 1e-13);
  EXPECT_LT(r.symmetry_residual, 1e-13);
  EXPECT_EQ(r.first_failure(), "");
}

TEST(Validate, SmallThetaStaysConvexAndPlanar) {
  const auto r = validate(build(P(12, 0.5)));
  EXPECT_TRUE(r.ok()) << r.first_failure();
}

TEST(Validate, PerturbedVertexIsCaught) {
  const Zonohedron z = build(P(8, 50.0));
  auto verts = z.vertices();
  verts[10].z += 1e-6;
  const Zonohedron bad(z.params(), z.generators(), verts, z.faces());
  const auto r = validate(bad);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure(), "unit_edges");
  EXPECT_GT(r.max_nonplanarity, 1e-8);
}

TEST(Validate, DroppedFaceBreaksClosure) {
  const Zonohedron z = build(P(6, 30.0));
  auto faces = z.faces();
  faces.pop_back();
  const auto r = validate(Zonohedron(z.params(), z.generators(), z.vertices(), faces));
  EXPECT_FALSE(r.closed_orientable);
  EXPECT_FALSE(r.euler);
  EXPECT_EQ(r.first_failure(), "closed_orientable");
}

TEST(Faces, PoleCornerAngleIsAlpha) {
  const Params p = P(16, 20.0);
  const Zonohedron z = build(p);
  const Vec3& N = z.vertices()[static_cast<std::size_t>(z.north())];
  for (int i = 0; i < 16; ++i) {
    const Face& f = z.face(i, 1);
    const auto it = std::find(f.v.begin(), f.v.end(), z.north());
    ASSERT_NE(it, f.v.end());
    const int k = static_cast<int>(it - f.v.begin());
    const Vec3& a = z.vertices()[static_cast<std::size_t>(f.v[(k + 1) % 4])];
    const Vec3& b = z.vertices()[static_cast<std::size_t>(f.v[(k + 3) % 4])];
    EXPECT_NEAR(geom::angle_between(a - N, b - N), pole_angle(p), 1e-13);
  }
}

TEST(Faces, StepJFaceHasAngleGammaJ) {
  const Params p = P(9, 40.0);
  const Zonohedron z = build(p);
  for (int i = 0; i < 9; ++i) {
    for (int j = 1; j < 9; ++j) {
      const Face& f = z.face(i, j);
      const auto& V = z.vertices();
      const Vec3 e0 = V[static_cast<std::size_t>(f.v[1])] - V[static_cast<std::size_t>(f.v[0])];
      const Vec3 e1 = V[static_cast<std::size_t>(f.v[3])] - V[static_cast<std::size_t>(f.v[0])];
      const double ang = geom::angle_between(e0, e1);
      const double g = rhomb_angle(p, j);
      EXPECT_NEAR(std::min(ang, kPi - ang), std::min(g, kPi - g), 1e-13) << i << "," << j;
    }
  }
}

TEST(Faces, ZonesAreCongruentUnderRotation) {
  const Params p = P(10, 25.0);
  const Zonohedron z = build(p);
  const double a = 2 * kPi / 10;
  for (int i = 0; i < 10; ++i) {
    for (int j = 1; j < 10; ++j) {
      const Face& f0 = z.face(0, j);
      const Face& fi = z.face(i, j);
      for (int k = 0; k < 4; ++k) {
        const Vec3& v = z.vertices()[static_cast<std::size_t>(f0.v[k])];
        const Vec3 rot{std::cos(i * a) * v.x - std::sin(i * a) * v.y, std::sin(i * a) * v.x + std::cos(i * a) * v.y, v.z};
        EXPECT_LT(geom::distance(rot, z.vertices()[static_cast<std::size_t>(fi.v[k])]), 1e-12);
      }
    }
  }
}

TEST(Faces, EveryFaceInExactlyOneZoneAndZonesShareNoFace) {
  const Zonohedron z = build(P(7, 15.0));
  std::set<int> seen;
  for (int i = 0; i < 7; ++i) {
    for (int id : z.zone(i)) EXPECT_TRUE(seen.insert(id).second);
  }
  EXPECT_EQ(seen.size(), z.faces().size());
}

TEST(Shape, NearPolarIsACigar) {
  const Zonohedron z = build(P(10, 89.0));
  const Vec3& N = z.vertices()[static_cast<std::size_t>(z.north())];
  double radius = 0.0;
  for (const auto& v : z.vertices()) radius = std::max(radius, std::hypot(v.x - N.x / 2, v.y - N.y / 2));
  EXPECT_NEAR(N.z, 10 * std::sin(deg_to_rad(89.0)), 1e-12);
  EXPECT_LT(radius, 0.1 * N.z);
  EXPECT_TRUE(validate(z).ok());
}
