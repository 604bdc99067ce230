#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "zonet/crescent.hpp"
#include "zonet/verify.hpp"

using namespace zonet;
using geom::deg_to_rad;
using geom::kPi;

namespace {

Params P(int n, double deg) { return Params::make(n, deg_to_rad(deg)); }

/// Brute-force beta: sample the circle densely, keep directions inside some
/// rhomb, return the shortest arc covering them.
double sampled_beta(const PlanarZone& z, double r, int samples = 200000) {
  std::vector<double> hits;
  for (int k = 0; k < samples; ++k) {
    const double a = geom::kTwoPi * k / samples;
    const Point2 p = z.o() + r * geom::unit_at(a);
    for (const auto& q : z.rhombs()) {
      if (!q.degenerate() && q.contains(p, 0.0)) {
        hits.push_back(a);
        break;
      }
    }
  }
  return geom::shortest_covering_arc(std::span<const double>(hits)).value_or(0.0);
}

}  // namespace

// ---------------------------------------------------------------------------
// beta(r)

TEST(BetaOfR, UpperHalfAtThetaZeroSubtendsAlpha) {
  const PlanarZone z = theta_zero_zone(16);
  for (double r : radii_upper_only(z, 50)) {
    const BetaResult b = beta_of_r(z, r);
    ASSERT_TRUE(b.crosses()) << r;
    EXPECT_NEAR(*b.beta, z.alpha(), 1e-12) << r;
  }
}

TEST(BetaOfR, LowerHalfAtThetaZeroStaysBelowHalfAlpha) {
  for (int n : {5, 8, 16, 24}) {
    const PlanarZone z = theta_zero_zone(n);
    const auto rs = radii_lower_only(z, 100);
    ASSERT_FALSE(rs.empty()) << n;
    for (double r : rs) EXPECT_LT(*beta_of_r(z, r).beta, 0.5 * z.alpha()) << n << " " << r;
  }
}

TEST(BetaOfR, MatchesSampledOracle) {
  for (double deg : {0.0, 5.0, 20.0, 60.0}) {
    const PlanarZone z = standard_zone(P(12, deg));
    const auto [lo, hi] = radial_extent(z, {1, 11});
    for (double t : {0.13, 0.37, 0.61, 0.89}) {
      const double r = lo + t * (hi - lo);
      const BetaResult b = beta_of_r(z, r);
      ASSERT_TRUE(b.crosses());
      EXPECT_NEAR(*b.beta, sampled_beta(z, r), 1e-4) << deg << " " << r;
    }
  }
}

TEST(BetaOfR, DisconnectedArcsAppearAtSmallTheta) {
  const PlanarZone z = standard_zone(P(16, 1.0));
  const BetaProfile prof = beta_profile(z);
  EXPECT_GT(prof.disconnected, 0u);
  EXPECT_FALSE(prof.exceeded_when_disconnected);
  for (const auto& s : prof.samples) {
    if (!s.connected) {
      const BetaResult b = beta_of_r(z, s.r);
      EXPECT_GE(b.arcs.size(), 2u);
      break;
    }
  }
}

TEST(BetaOfR, NoCrossingOutsideTheZone) {
  const PlanarZone z = standard_zone(P(10, 30.0));
  const double far = radial_extent(z, {1, 9}).second;
  EXPECT_FALSE(beta_of_r(z, far * 1.5).crosses());
  EXPECT_FALSE(beta_of_r(z, far * 1.5).beta_closed.has_value());
}

TEST(BetaOfR, ClosedCoverIncludesTouches) {
  // At the corner radius of the collapsed rhomb only touch points lie beyond the arcs.
  const PlanarZone z = theta_zero_zone(16);
  const double r = geom::distance(z.o(), z.P(8));
  const BetaResult b = beta_of_r(z, r);
  ASSERT_TRUE(b.beta_closed.has_value());
  EXPECT_GE(*b.beta_closed, b.beta.value_or(0.0));
}

// ---------------------------------------------------------------------------
// Profile

TEST(Profile, SamplesSortedAndBoundedByAlpha) {
  for (int n : {3, 7, 16}) {
    for (double deg : {0.0, 10.0, 45.0, 85.0}) {
      const PlanarZone z = standard_zone(P(n, deg));
      const BetaProfile prof = beta_profile(z);
      ASSERT_FALSE(prof.empty());
      for (std::size_t k = 1; k < prof.samples.size(); ++k) EXPECT_LE(prof.samples[k - 1].r, prof.samples[k].r);
      EXPECT_LE(prof.max_beta, prof.alpha + kBetaTol) << n << " " << deg;
      EXPECT_TRUE(std::is_sorted(prof.events.begin(), prof.events.end()));
    }
  }
}

TEST(Profile, EventsIncludeVertexDistances) {
  const PlanarZone z = standard_zone(P(9, 25.0));
  const auto ev = critical_radii(z);
  for (const auto& v : z.vertices()) {
    const double d = geom::distance(z.o(), v);
    const bool found = std::any_of(ev.begin(), ev.end(), [&](double e) { return std::abs(e - d) <= 1e-12; });
    EXPECT_TRUE(found) << d;
  }
}

TEST(Profile, EqualityOnlyNearThePoleAtTwentyDegrees) {
  const PlanarZone z = standard_zone(P(16, 20.0));
  const BetaProfile prof = beta_profile(z);
  const double r1 = radial_extent(z, {1, 1}).second;
  EXPECT_NEAR(prof.max_beta, prof.alpha, 1e-12);
  for (const auto& s : prof.samples) {
    if (std::abs(s.beta - prof.alpha) < kBetaTol) EXPECT_LE(s.r, r1) << s.r;
  }
}

TEST(Profile, RejectsTooFewSamples) {
  EXPECT_THROW(beta_profile(standard_zone(P(8, 10.0)), 2), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Subtended angles

TEST(Subtended, FirstRhombSubtendsAlpha) {
  for (int n : {4, 9, 16, 24}) {
    for (double deg : {5.0, 20.0, 40.0, 80.0}) {
      const PlanarZone z = standard_zone(P(n, deg));
      const auto b = rhomb_subtended_angles(z);
      ASSERT_EQ(b.size(), static_cast<std::size_t>(n - 1));
      EXPECT_NEAR(b[0], z.alpha(), 1e-14) << n << " " << deg;
      for (std::size_t i = 1; i < b.size(); ++i) EXPECT_LT(b[i], z.alpha()) << n << " " << deg << " " << i + 1;
    }
  }
}

TEST(Subtended, LocalMinimumAtR12ForSixteenAtTwenty) {
  const auto b = rhomb_subtended_angles(standard_zone(P(16, 20.0)));
  // b[i-1] is beta_i.
  EXPECT_LT(b[11], b[10]);
  EXPECT_LT(b[11], b[12]);
  EXPECT_NEAR(geom::rad_to_deg(b[10]), 7.8718, 5e-4);
  EXPECT_NEAR(geom::rad_to_deg(b[11]), 7.4882, 5e-4);
  EXPECT_NEAR(geom::rad_to_deg(b[12]), 8.4923, 5e-4);
}

TEST(Subtended, LocalMinimumAtR18ForTwentyFourAtForty) {
  const auto b = rhomb_subtended_angles(standard_zone(P(24, 40.0)));
  EXPECT_LT(b[17], b[16]);
  EXPECT_LT(b[17], b[18]);
}

TEST(Subtended, ProfileNeverExceedsLargestRhombAngle) {
  for (double deg : {10.0, 20.0, 50.0}) {
    const PlanarZone z = standard_zone(P(16, deg));
    const auto b = rhomb_subtended_angles(z);
    EXPECT_LE(beta_profile(z).max_beta, *std::max_element(b.begin(), b.end()) + kBetaTol);
  }
}

// ---------------------------------------------------------------------------
// Diagonal perpendiculars

TEST(Diagonals, AllBelowThePoleAtTwentyDegrees) {
  const auto offs = diagonal_perpendicular_test(standard_zone(P(16, 20.0)));
  ASSERT_EQ(offs.size(), 14u);
  for (const auto& d : offs) EXPECT_LT(d.offset, 0.0) << d.rhomb;
}

TEST(Diagonals, UpperHalfPassesThroughThePoleAtThetaZero) {
  for (int n : {7, 16}) {
    const PlanarZone z = theta_zero_zone(n);
    for (const auto& d : diagonal_perpendicular_test(z)) {
      if (d.rhomb <= z.upper().last) EXPECT_NEAR(d.offset, 0.0, 1e-12) << n << " " << d.rhomb;
    }
  }
}

TEST(Diagonals, UpperHalfNearlyThroughThePoleAtTinyTheta) {
  const PlanarZone z = standard_zone(Params::make(16, 1e-8));
  for (const auto& d : diagonal_perpendicular_test(z)) {
    if (d.rhomb <= z.upper().last) EXPECT_LT(std::abs(d.offset), 1e-6) << d.rhomb;
  }
}

TEST(Diagonals, LowerHalfConvergesToTwiceCotangent) {
  // In unit-edge scale the lower-half bisectors meet the axis at -2 cot(pi/n).
  for (int n : {8, 16}) {
    const double target = -2.0 / std::tan(kPi / n);
    for (double t : {0.0, 1e-8}) {
      const PlanarZone z = standard_zone(Params::make(n, t));
      for (const auto& d : diagonal_perpendicular_test(z)) {
        if (d.rhomb >= z.lower().first) EXPECT_NEAR(d.offset, target, 1e-6) << n << " " << t << " " << d.rhomb;
      }
    }
  }
}

TEST(Diagonals, CentralRhombNearThetaZero) {
  // Degenerate at theta = 0 (bisector along the axis); -cot(pi/n) just above it.
  const double at_zero = diagonal_perpendicular_test(theta_zero_zone(16))[6].offset;
  const double above = diagonal_perpendicular_test(standard_zone(Params::make(16, 1e-8)))[6].offset;
  EXPECT_EQ(at_zero, 0.0);
  EXPECT_NEAR(above, -1.0 / std::tan(kPi / 16), 1e-6);
}

// ---------------------------------------------------------------------------
// Flat rhomb

TEST(FlatRhomb, ThetaZeroChordReachesTwo) {
  const FlatRhombReport r = flat_rhomb_check(theta_zero_zone(16));
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(r.rhomb, 8);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.corner_chord, 2.0, 1e-9);
  EXPECT_LE(r.max_chord, 2.0 + 1e-9);
  EXPECT_NEAR(r.central_angle, 0.0, 1e-12);
}

TEST(FlatRhomb, OneDegreeChordStaysBelowTwo) {
  const Params p = P(16, 1.0);
  const FlatRhombReport r = flat_rhomb_check(standard_zone(p));
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.max_chord, 2.0 - 1e-12);
  EXPECT_NEAR(r.central_angle, 2 * p.theta, 1e-12);
  EXPECT_NEAR(r.lift, std::sin(2 * p.theta), 1e-12);
  EXPECT_NEAR(r.lift_ratio, std::cos(p.theta), 1e-12);
  EXPECT_LT(r.lift, 2 * std::sin(p.theta));
}

TEST(FlatRhomb, NotApplicableForOddN) { EXPECT_FALSE(flat_rhomb_check(standard_zone(P(15, 10.0))).applicable); }

// ---------------------------------------------------------------------------
// Overlap oracle

TEST(OverlapOracle, AssembledNetsAreClean) {
  for (auto [n, deg] : {std::pair{8, 50.0}, std::pair{12, 0.5}, std::pair{16, 0.0}, std::pair{3, 70.0}}) {
    const OverlapReport r = net_overlap_oracle(assemble_net(P(n, deg)));
    EXPECT_TRUE(r.pass()) << n << " " << deg;
    EXPECT_GT(r.pairs_tested, 0u);
  }
}

TEST(OverlapOracle, CollapsedRhombsAreSkipped) {
  const OverlapReport r = net_overlap_oracle(assemble_net(P(16, 0.0)));
  EXPECT_EQ(r.rhombs, 16u * 14u);
}

TEST(OverlapOracle, RotatedZoneIsCaught) {
  const Net net = assemble_net(P(8, 50.0));
  const OverlapReport r = net_overlap_oracle(reposition_zone(net, 1, 0.9 * net.alpha));
  EXPECT_FALSE(r.pass());
  const bool involves_moved = std::all_of(r.overlaps.begin(), r.overlaps.end(),
                                          [](const OverlapPair& p) { return p.zone_a == 1 || p.zone_b == 1; });
  EXPECT_TRUE(involves_moved);
}

// ---------------------------------------------------------------------------
// Aggregate

TEST(RunVerification, SixteenAtTwentyPasses) {
  const VerificationReport r = run_verification(P(16, 20.0));
  EXPECT_TRUE(r.pass) << ::testing::PrintToString(r.failed());
  EXPECT_EQ(r.checks.at("upper_lemma").status, CheckStatus::skipped);
  EXPECT_EQ(r.checks.at("lower_lemma").status, CheckStatus::skipped);
  EXPECT_EQ(r.checks.at("diagonals").status, CheckStatus::pass);
  EXPECT_EQ(r.checks.at("flat_rhomb").status, CheckStatus::pass);
  EXPECT_EQ(r.checks.at("subtended").status, CheckStatus::pass);
  EXPECT_EQ(r.checks.at("net_overlap").status, CheckStatus::pass);
  EXPECT_EQ(r.overlap_pairs, 0u);
  EXPECT_EQ(r.checks.size(), check_names().size());
}

TEST(RunVerification, ThetaZeroRunsTheLemmas) {
  const VerificationReport even = run_verification(P(16, 0.0));
  EXPECT_TRUE(even.pass) << ::testing::PrintToString(even.failed());
  EXPECT_EQ(even.checks.at("upper_lemma").status, CheckStatus::pass);
  EXPECT_EQ(even.checks.at("lower_lemma").status, CheckStatus::pass);
  EXPECT_EQ(even.checks.at("subtended").status, CheckStatus::skipped);

  const VerificationReport odd = run_verification(P(15, 0.0));
  EXPECT_TRUE(odd.pass);
  EXPECT_EQ(odd.checks.at("flat_rhomb").status, CheckStatus::skipped);
}

TEST(RunVerification, IsDeterministic) {
  EXPECT_EQ(run_verification(P(11, 33.0)), run_verification(P(11, 33.0)));
}

TEST(RunVerification, PassesAtSmallTheta) {
  for (int n : {8, 16, 32}) {
    const VerificationReport r = run_verification(Params::make(n, 1e-4));
    EXPECT_TRUE(r.pass) << n << " " << ::testing::PrintToString(r.failed());
  }
}

TEST(RunVerification, ArcBoundsHoldAtResolutionLimit) {
  // At theta = 1e-8 the strict gaps are O(theta^2), below double resolution;
  // the non-strict arc bound and the flat rhomb chord are still decided.
  const VerificationReport r = run_verification(Params::make(16, 1e-8));
  EXPECT_EQ(r.checks.at("beta_le_alpha").status, CheckStatus::pass);
  EXPECT_EQ(r.checks.at("flat_rhomb").status, CheckStatus::pass);
}

// ---------------------------------------------------------------------------
// Crescent against the lower half-zone

TEST(CrescentBound, LowerHalfArcsAtThetaZeroStayWithinCrescentBeta) {
  // Literal statement: beta(r) over radii meeting Z- alone never exceeds the
  // crescent's beta for the same n.
  for (int n : {8, 16, 32}) {
    const PlanarZone z = theta_zero_zone(n);
    const double bound = crescent::CrescentParams::from_n(n).beta;
    double worst = 0.0;
    for (double r : radii_lower_only(z, 200)) worst = std::max(worst, beta_of_r(z, r).beta.value_or(0.0));
    EXPECT_LE(worst, bound + kBetaTol) << "n=" << n << " max beta/alpha " << worst / z.alpha() << " vs crescent "
                                       << bound / z.alpha();
  }
}
