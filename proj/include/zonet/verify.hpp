#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "zonet/geom/angle.hpp"
#include "zonet/geom/circle_quad.hpp"
#include "zonet/geom/exact.hpp"
#include "zonet/unfold.hpp"

namespace zonet {

inline constexpr double kBetaTol = 1e-9;
inline constexpr double kStrictMargin = 1e-12;

// ---------------------------------------------------------------------------
// beta(r)

/// Intersection of the circle of radius r about o with (part of) a zone.
/// `beta` is the covering arc of the positive-measure arcs; `beta_closed`
/// also covers isolated touch points.
struct BetaResult {
  std::optional<double> beta;
  std::optional<double> beta_closed;
  bool connected = false;
  geom::AngularIntervalSet arcs;
  std::vector<double> touches;

  bool crosses() const { return beta.has_value(); }
};

inline BetaResult beta_of_r(const PlanarZone& z, double r, RhombRange range) {
  BetaResult out;
  std::vector<geom::AngularInterval> pieces;
  std::vector<double> touches;
  for (int j = std::max(1, range.first); j <= std::min(z.n() - 1, range.last); ++j) {
    const auto hit = geom::circle_quad_arcs(z.o(), r, z.rhomb(j));
    for (const auto& a : hit.arcs.arcs()) pieces.push_back(a);
    touches.insert(touches.end(), hit.touches.begin(), hit.touches.end());
  }
  out.arcs = geom::AngularIntervalSet::from_arcs(pieces);
  for (double t : touches) {
    if (!out.arcs.contains(t, geom::kIntervalMergeTol)) out.touches.push_back(t);
  }
  std::sort(out.touches.begin(), out.touches.end());
  out.beta = geom::shortest_covering_arc(out.arcs);
  out.beta_closed = geom::shortest_covering_arc(out.arcs, out.touches);
  out.connected = out.arcs.connected();
  return out;
}

inline BetaResult beta_of_r(const PlanarZone& z, double r) { return beta_of_r(z, r, RhombRange{1, z.n() - 1}); }

/// Distance from p to the closed quad.
inline double distance_to_quad(const Point2& p, const ConvexQuad& q) {
  if (!q.degenerate() && q.contains(p, 0.0)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < 4; ++k) {
    const Point2& a = q[k];
    const Point2& b = q[(k + 1) % 4];
    const Point2 d = b - a;
    const double len2 = geom::dot(d, d);
    const double t = len2 > 0.0 ? std::clamp(geom::dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
    best = std::min(best, geom::distance(p, a + t * d));
  }
  return best;
}

inline double farthest_from(const Point2& p, const ConvexQuad& q) {
  double best = 0.0;
  for (const auto& v : q.vertices()) best = std::max(best, geom::distance(p, v));
  return best;
}

/// [nearest, farthest] distance from o over the rhombs in `range`.
inline std::pair<double, double> radial_extent(const PlanarZone& z, RhombRange range) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (int j = range.first; j <= range.last; ++j) {
    lo = std::min(lo, distance_to_quad(z.o(), z.rhomb(j)));
    hi = std::max(hi, farthest_from(z.o(), z.rhomb(j)));
  }
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// Event-based profile

struct BetaSample {
  double r = 0.0;
  double beta = 0.0;
  bool connected = true;
};

struct BetaProfile {
  double alpha = 0.0;
  std::vector<double> events;
  std::vector<BetaSample> samples;
  double max_beta = 0.0;
  double max_beta_r = 0.0;
  std::size_t disconnected = 0;
  /// beta > alpha seen on a disconnected arc (allowed without overlap).
  bool exceeded_when_disconnected = false;

  bool empty() const { return samples.empty(); }
};

/// Radii where the combinatorics of C(r) against the zone can change: every
/// vertex distance and every perpendicular foot inside an edge.
inline std::vector<double> critical_radii(const PlanarZone& z) {
  std::vector<double> ev;
  const Point2 o = z.o();
  for (const auto& v : z.vertices()) ev.push_back(geom::distance(o, v));
  for (const auto& q : z.rhombs()) {
    for (std::size_t k = 0; k < 4; ++k) {
      const Point2& a = q[k];
      const Point2& b = q[(k + 1) % 4];
      const Point2 d = b - a;
      const double len2 = geom::dot(d, d);
      if (len2 == 0.0) continue;
      const double t = geom::dot(o - a, d) / len2;
      if (t > 0.0 && t < 1.0) ev.push_back(geom::distance(o, a + t * d));
    }
  }
  std::sort(ev.begin(), ev.end());
  std::vector<double> out;
  for (double r : ev) {
    if (out.empty() || r - out.back() > 1e-12) out.push_back(r);
  }
  return out;
}

inline BetaProfile beta_profile(const PlanarZone& z, int samples_per_interval = 9) {
  if (samples_per_interval < 3) throw std::invalid_argument("beta_profile: samples_per_interval must be ≥ 3");
  constexpr double kEventOffset = 1e-9;
  BetaProfile prof;
  prof.alpha = z.alpha();
  prof.events = critical_radii(z);

  std::vector<double> radii;
  for (std::size_t k = 0; k + 1 < prof.events.size(); ++k) {
    const double a = prof.events[k];
    const double b = prof.events[k + 1];
    if (b - a > 2 * kEventOffset) {
      radii.push_back(a + kEventOffset);
      radii.push_back(b - kEventOffset);
    }
    for (int s = 1; s <= samples_per_interval; ++s) radii.push_back(a + (b - a) * s / (samples_per_interval + 1));
  }
  std::sort(radii.begin(), radii.end());

  for (double r : radii) {
    if (!(r > 0.0)) continue;
    const BetaResult res = beta_of_r(z, r);
    if (!res.crosses()) continue;
    prof.samples.push_back({r, *res.beta, res.connected});
    if (!res.connected) {
      ++prof.disconnected;
      if (*res.beta > prof.alpha + kBetaTol) prof.exceeded_when_disconnected = true;
    }
    if (prof.samples.size() == 1 || *res.beta > prof.max_beta) {
      prof.max_beta = *res.beta;
      prof.max_beta_r = r;
    }
  }
  return prof;
}

// ---------------------------------------------------------------------------
// Per-rhomb arguments

/// Angle subtended at o by each rhomb, beta_1..beta_{n-1}.
inline std::vector<double> rhomb_subtended_angles(const PlanarZone& z) {
  std::vector<double> out;
  const Point2 o = z.o();
  for (const auto& q : z.rhombs()) {
    if (!q.degenerate() && q.contains(o, -1e-13)) {
      out.push_back(geom::kTwoPi);
      continue;
    }
    std::vector<double> angles;
    for (const auto& v : q.vertices()) {
      if (geom::distance(o, v) > 1e-14) angles.push_back(geom::polar_angle(v - o));
    }
    out.push_back(geom::shortest_covering_arc(std::span<const double>(angles)).value_or(0.0));
  }
  return out;
}

struct DiagonalOffset {
  int rhomb = 0;
  double offset = 0.0;
};

/// For R_i, i >= 2: height, relative to o, where the perpendicular bisector of
/// the diagonal Q_{i-1} P_i meets the vertical line through o. Negative means
/// below o. Measured in the zone's own frame.
inline std::vector<DiagonalOffset> diagonal_perpendicular_test(const PlanarZone& z) {
  std::vector<DiagonalOffset> out;
  const Point2 o = z.o();
  const double back = -z.rotation();
  for (int i = 2; i < z.n(); ++i) {
    const Point2 b = geom::rotate(z.Q(i - 1), back, o) - o;
    const Point2 d = geom::rotate(z.P(i), back, o) - o;
    const Point2 m = 0.5 * (b + d);
    const Point2 dir = b - d;
    double y;
    if (std::abs(dir.y) > 1e-300) {
      y = m.y + m.x * dir.x / dir.y;
    } else {
      y = std::abs(m.x) < 1e-12 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back({i, y});
  }
  return out;
}

struct FlatRhombReport {
  bool applicable = false;
  int rhomb = 0;
  double central_angle = 0.0;
  double central_angle_error = 0.0;
  double max_chord = 0.0;
  double max_chord_r = 0.0;
  std::size_t radii_tested = 0;
  double corner_radius = 0.0;
  double corner_chord = 0.0;
  double lift = 0.0;
  double lift_expected = 0.0;
  double lift_ratio = 0.0;
  bool pass = false;
};

/// Chord of the covering arc, 2 r sin(beta/2).
inline double covering_chord(double r, double beta) { return 2.0 * r * std::sin(0.5 * std::min(beta, geom::kPi)); }

/// Checks on the central rhomb R_{n/2} (n even): its acute angle, the height
/// of its corner b over the opposite acute corner, and the chord of the
/// covering arc for circles crossing it.
inline FlatRhombReport flat_rhomb_check(const PlanarZone& z, int radii = 200) {
  FlatRhombReport rep;
  if (!z.middle()) return rep;
  rep.applicable = true;
  const int m = *z.middle();
  rep.rhomb = m;
  const double theta = z.params().theta;

  const Point2& a = z.P(m - 1);
  const Point2& b = z.Q(m - 1);
  const Point2& c = z.Q(m);
  const Point2& d = z.P(m);
  rep.central_angle = geom::angle_between(a - b, c - b);
  rep.central_angle_error = std::abs(rep.central_angle - 2.0 * theta);

  const Point2 e = b - a;
  rep.lift = geom::cross(e * (1.0 / geom::norm(e)), b - d);
  rep.lift_expected = std::sin(2.0 * theta);
  rep.lift_ratio = theta > 0.0 ? rep.lift / (2.0 * std::sin(theta)) : 0.0;

  const auto [lo, hi] = radial_extent(z, {m, m});
  std::vector<double> rs;
  for (int k = 0; k < radii; ++k) rs.push_back(lo + (hi - lo) * (k + 0.5) / radii);
  for (double ev : critical_radii(z)) {
    if (ev >= lo && ev <= hi) {
      rs.push_back(ev);
      if (ev - 1e-9 > lo) rs.push_back(ev - 1e-9);
      if (ev + 1e-9 < hi) rs.push_back(ev + 1e-9);
    }
  }
  std::sort(rs.begin(), rs.end());
  for (double r : rs) {
    const BetaResult res = beta_of_r(z, r);
    if (!res.beta_closed) continue;
    ++rep.radii_tested;
    const double chord = covering_chord(r, *res.beta_closed);
    if (chord > rep.max_chord) {
      rep.max_chord = chord;
      rep.max_chord_r = r;
    }
  }

  rep.corner_radius = geom::distance(z.o(), d);
  if (const BetaResult at = beta_of_r(z, rep.corner_radius); at.beta_closed) {
    rep.corner_chord = covering_chord(rep.corner_radius, *at.beta_closed);
  }

  const bool angle_ok = rep.central_angle_error < 1e-10;
  if (theta == 0.0) {
    rep.pass = angle_ok && std::abs(rep.corner_chord - 2.0) <= kBetaTol && rep.max_chord <= 2.0 + kBetaTol;
  } else {
    rep.pass = angle_ok && rep.max_chord < 2.0 - kStrictMargin && rep.lift > 0.0 &&
               std::abs(rep.lift - rep.lift_expected) < 1e-10;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Exact overlap oracle

struct OverlapPair {
  int zone_a = 0;
  int rhomb_a = 0;
  int zone_b = 0;
  int rhomb_b = 0;
  friend bool operator==(const OverlapPair&, const OverlapPair&) = default;
};

struct OverlapReport {
  std::size_t rhombs = 0;
  std::size_t pairs_tested = 0;
  std::vector<OverlapPair> overlaps;
  bool pass() const { return overlaps.empty(); }
};

/// Every pair of rhombs from different zones, tested exactly for a common
/// interior point. Collapsed (zero-area) rhombs have no interior and are skipped.
inline OverlapReport net_overlap_oracle(const Net& net) {
  struct Item {
    int zone;
    int rhomb;
    double xmin, xmax, ymin, ymax;
    std::vector<std::vector<geom::exact::IPoint>> pieces;
  };
  std::vector<Item> items;
  for (const auto& zone : net.zones) {
    for (int j = 1; j < zone.n(); ++j) {
      const ConvexQuad& q = zone.rhomb(j);
      if (q.degenerate()) continue;
      Item it{zone.index(), j, 1e300, -1e300, 1e300, -1e300, {}};
      for (const auto& v : q.vertices()) {
        it.xmin = std::min(it.xmin, v.x);
        it.xmax = std::max(it.xmax, v.x);
        it.ymin = std::min(it.ymin, v.y);
        it.ymax = std::max(it.ymax, v.y);
      }
      it.pieces = geom::exact::convex_pieces(geom::exact::snap(std::span<const Point2>(q.vertices())));
      items.push_back(std::move(it));
    }
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.xmin < b.xmin || (a.xmin == b.xmin && (a.zone < b.zone || (a.zone == b.zone && a.rhomb < b.rhomb)));
  });

  OverlapReport rep;
  rep.rhombs = items.size();
  constexpr double kBoxSlack = 1e-12;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item& a = items[i];
    for (std::size_t j = i + 1; j < items.size() && items[j].xmin <= a.xmax + kBoxSlack; ++j) {
      const Item& b = items[j];
      if (a.zone == b.zone) continue;
      if (b.ymin > a.ymax + kBoxSlack || a.ymin > b.ymax + kBoxSlack) continue;
      ++rep.pairs_tested;
      bool hit = false;
      for (const auto& pa : a.pieces) {
        for (const auto& pb : b.pieces) {
          if (geom::exact::convex_interiors_overlap(pa, pb)) {
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
      if (hit) {
        OverlapPair p{a.zone, a.rhomb, b.zone, b.rhomb};
        if (std::make_pair(p.zone_a, p.rhomb_a) > std::make_pair(p.zone_b, p.rhomb_b)) {
          std::swap(p.zone_a, p.zone_b);
          std::swap(p.rhomb_a, p.rhomb_b);
        }
        rep.overlaps.push_back(p);
      }
    }
  }
  std::sort(rep.overlaps.begin(), rep.overlaps.end(), [](const OverlapPair& x, const OverlapPair& y) {
    return std::tie(x.zone_a, x.rhomb_a, x.zone_b, x.rhomb_b) < std::tie(y.zone_a, y.rhomb_a, y.zone_b, y.rhomb_b);
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Aggregate report

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

/// `margin` is signed slack against the check's bound: >= 0 means satisfied
/// before tolerances.
struct CheckResult {
  CheckStatus status = CheckStatus::skipped;
  double margin = 0.0;
  std::string detail;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"beta_le_alpha", "upper_lemma", "lower_lemma", "diagonals",
                                              "flat_rhomb",    "net_overlap", "subtended"};
  return names;
}

struct VerificationReport {
  Params params;
  double alpha = 0.0;
  double max_beta = 0.0;
  double max_beta_r = 0.0;
  std::size_t samples = 0;
  std::size_t disconnected_samples = 0;
  bool beta_exceeds_alpha_disconnected = false;
  std::size_t overlap_pairs = 0;
  std::map<std::string, CheckResult> checks;
  bool pass = false;

  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (const auto& [name, c] : checks) {
      if (c.status == CheckStatus::fail) out.push_back(name);
    }
    return out;
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerificationConfig {
  int samples_per_interval = 9;
  int lemma_radii = 200;
  int flat_radii = 200;
};

namespace detail {

inline std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

inline CheckResult verdict(bool ok, double margin, std::string detail) {
  return {ok ? CheckStatus::pass : CheckStatus::fail, margin, std::move(detail)};
}

/// Evenly spread interior radii of (lo, hi).
inline std::vector<double> spread(double lo, double hi, int count) {
  std::vector<double> rs;
  for (int k = 0; k < count; ++k) rs.push_back(lo + (hi - lo) * (k + 0.5) / count);
  return rs;
}

}  // namespace detail

/// Radii (count of them) whose circles meet only the upper half Z+.
inline std::vector<double> radii_upper_only(const PlanarZone& z, int count) {
  RhombRange rest{z.upper().last + 1, z.n() - 1};
  const double limit = std::min(radial_extent(z, rest).first, radial_extent(z, z.upper()).second);
  return detail::spread(0.0, limit, count);
}

/// Radii whose circles meet only the lower half Z-.
inline std::vector<double> radii_lower_only(const PlanarZone& z, int count) {
  RhombRange rest{1, z.lower().first - 1};
  const auto [lo, hi] = radial_extent(z, z.lower());
  const double start = std::max(lo, radial_extent(z, rest).second);
  if (!(start < hi)) return {};
  return detail::spread(start, hi, count);
}

inline VerificationReport run_verification(const Params& p, const VerificationConfig& cfg = {}) {
  const Params params = Params::make(p.n, p.theta);
  const Net net = assemble_net(params);
  const PlanarZone& z = net.zones.front();
  const double alpha = net.alpha;
  const bool flat = params.theta == 0.0;

  VerificationReport rep;
  rep.params = params;
  rep.alpha = alpha;
  for (const auto& name : check_names()) rep.checks[name] = CheckResult{};

  const BetaProfile prof = beta_profile(z, cfg.samples_per_interval);
  rep.max_beta = prof.max_beta;
  rep.max_beta_r = prof.max_beta_r;
  rep.samples = prof.samples.size();
  rep.disconnected_samples = prof.disconnected;
  rep.beta_exceeds_alpha_disconnected = prof.exceeded_when_disconnected;
  rep.checks["beta_le_alpha"] = detail::verdict(prof.max_beta <= alpha + kBetaTol, alpha - prof.max_beta,
                                                detail::fmt("max beta %.17g at r = %.17g", prof.max_beta, prof.max_beta_r));

  if (flat && !z.upper().empty()) {
    double worst = 0.0;
    for (double r : radii_upper_only(z, cfg.lemma_radii)) {
      const BetaResult res = beta_of_r(z, r);
      worst = std::max(worst, res.beta ? std::abs(*res.beta - alpha) : geom::kTwoPi);
    }
    rep.checks["upper_lemma"] =
        detail::verdict(worst < kBetaTol, -worst, detail::fmt("max |beta - alpha| over Z+ radii %.3e", worst));
  }
  if (flat) {
    const auto rs = radii_lower_only(z, cfg.lemma_radii);
    double worst = -geom::kTwoPi;
    for (double r : rs) {
      const BetaResult res = beta_of_r(z, r);
      if (res.beta) worst = std::max(worst, *res.beta);
    }
    const double margin = 0.5 * alpha - worst;
    rep.checks["lower_lemma"] =
        rs.empty() ? detail::verdict(false, 0.0, "no radius meets Z- alone")
                   : detail::verdict(margin >= kStrictMargin, margin, detail::fmt("max beta/alpha over Z- radii %.17g", worst / alpha));
  }

  {
    const auto offs = diagonal_perpendicular_test(z);
    if (flat) {
      // Diagonals of Z+ and the collapsed rhomb aim through o.
      double worst = 0.0;
      bool any = false;
      for (const auto& d : offs) {
        if (d.rhomb > z.upper().last && d.rhomb != z.middle().value_or(-1)) continue;
        any = true;
        worst = std::max(worst, std::isnan(d.offset) ? 1e300 : std::abs(d.offset));
      }
      if (any) {
        rep.checks["diagonals"] =
            detail::verdict(worst < 1e-10, -worst, detail::fmt("max |offset| over Z+ diagonals %.3e", worst));
      }
    } else if (!offs.empty()) {
      double worst = -1e300;
      int at = 0;
      for (const auto& d : offs) {
        const double v = std::isnan(d.offset) ? 1e300 : d.offset;
        if (v > worst) {
          worst = v;
          at = d.rhomb;
        }
      }
      rep.checks["diagonals"] =
          detail::verdict(worst < 0.0, -worst, detail::fmt("highest offset %.6e at R_%g", worst, at));
    }
  }

  if (z.middle()) {
    const FlatRhombReport fr = flat_rhomb_check(z, cfg.flat_radii);
    char buf[200];
    std::snprintf(buf, sizeof buf, "max chord %.17g; corner chord %.17g; angle error %.3e; lift/(2 sin theta) %.6f",
                  fr.max_chord, fr.corner_chord, fr.central_angle_error, fr.lift_ratio);
    rep.checks["flat_rhomb"] = detail::verdict(fr.pass, 2.0 - fr.max_chord, buf);
  }

  {
    const OverlapReport ov = net_overlap_oracle(net);
    rep.overlap_pairs = ov.overlaps.size();
    rep.checks["net_overlap"] = detail::verdict(ov.pass(), -static_cast<double>(ov.overlaps.size()),
                                                detail::fmt("%.0f overlapping of %.0f tested pairs",
                                                            static_cast<double>(ov.overlaps.size()),
                                                            static_cast<double>(ov.pairs_tested)));
  }

  if (!flat) {
    const auto bi = rhomb_subtended_angles(z);
    double worst = 0.0;
    for (std::size_t i = 1; i < bi.size(); ++i) worst = std::max(worst, bi[i]);
    const double first_err = std::abs(bi.front() - alpha);
    const double cap = std::max(bi.front(), worst);
    const bool arcs_fit = prof.max_beta <= cap + kBetaTol;
    const double margin = alpha - worst;
    char buf[200];
    std::snprintf(buf, sizeof buf, "|beta_1 - alpha| %.3e; max beta_i (i>=2) %.17g; profile within max beta_i: %s",
                  first_err, worst, arcs_fit ? "yes" : "no");
    rep.checks["subtended"] = detail::verdict(first_err < kStrictMargin && margin >= kStrictMargin && arcs_fit, margin, buf);
  }

  rep.pass = true;
  for (const auto& [name, c] : rep.checks) {
    if (c.status == CheckStatus::fail) rep.pass = false;
  }
  return rep;
}

}  // namespace zonet
