#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zonet/geom/angle.hpp"
#include "zonet/geom/vec.hpp"

namespace zonet::crescent {

// Scale: the two circles bounding the crescent have unit radius and the
// rhomb side is L = 2 sin(alpha/2), with alpha = 2 pi / n and n real.

inline double side_from_n(double n) { return 2.0 * std::sin(geom::kPi / n); }
inline double n_from_side(double L) { return geom::kPi / std::asin(L / 2.0); }

/// tan(alpha) = L sqrt(4 - L^2) / (2 - L^2). Infinite at L = sqrt 2.
inline long double tan_alpha(long double L) {
  if (!(L > 0.0L) || !(L < 2.0L)) throw std::domain_error("tan_alpha: L must lie in (0, 2)");
  const long double den = 2.0L - L * L;
  if (den == 0.0L) return std::numeric_limits<long double>::infinity();
  return L * std::sqrt(4.0L - L * L) / den;
}

/// alpha in (0, pi) from L; the obtuse branch (L > sqrt 2, n < 4) included.
inline double alpha_from_L(double L) {
  if (!(L > 0.0) || !(L < 2.0)) throw std::domain_error("alpha_from_L: L must lie in (0, 2)");
  const long double l = L;
  return static_cast<double>(std::atan2(l * std::sqrt(4.0L - l * l), 2.0L - l * l));
}

namespace detail {

struct Fraction {
  long double num;
  long double den;
};

/// Numerator and denominator of the tan(beta) expression, radicals as written.
inline Fraction tan_beta_parts(long double L) {
  const long double L2 = L * L;
  const long double L4 = L2 * L2;
  const long double s = std::sqrt(4.0L - L2);
  const long double r = std::sqrt(L4 * (4.0L - L2));
  return {3.0L * (L4 - 4.0L * L2 - s * r), L * (9.0L * s * L2 - 36.0L * s + r)};
}

}  // namespace detail

inline long double tan_beta(long double L) {
  if (!(L > 0.0L) || !(L * L <= 3.0L + 1e-15L)) throw std::domain_error("tan_beta: L must lie in (0, sqrt 3]");
  const auto f = detail::tan_beta_parts(L);
  return f.num / f.den;
}

/// beta in (0, pi/2). Numerator and denominator are both negative on the
/// domain, so the quadrant is fixed by negating both.
inline double beta_from_L(double L) {
  if (!(L > 0.0) || !(L * L <= 3.0 + 1e-15)) throw std::domain_error("beta_from_L: L must lie in (0, sqrt 3]");
  const auto f = detail::tan_beta_parts(L);
  return static_cast<double>(std::atan2(-f.num, -f.den));
}

struct CrescentParams {
  double n = 3.0;
  double L = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  static CrescentParams from_n(double n) {
    if (!(n >= 3.0)) throw std::domain_error("crescent: n must be ≥ 3");
    const double L = side_from_n(n);
    return {n, L, alpha_from_L(L), beta_from_L(L)};
  }
  double ratio() const { return beta / alpha; }
};

/// The two unit circles, reflected so the crescent lies right of the vertical
/// through o. The outer one passes through one boundary chain of the lower
/// half-zone, the inner one through the other.
struct CrescentCircles {
  geom::Point2 outer;
  geom::Point2 inner;
  double h = 0.0;  // cos(alpha/2): chord-to-centre distance
};

inline CrescentCircles circles(double n) {
  const double L = side_from_n(n);
  const double h = std::cos(geom::kPi / n);
  return {{L / 2.0, -3.0 * h}, {-L / 2.0, -3.0 * h}, h};
}

/// Radii for which C(r) crosses the crescent: between the two points where
/// the circles meet, at distances 2h and 4h from o.
inline std::pair<double, double> crossing_radii(double n) {
  const double h = circles(n).h;
  return {2.0 * h, 4.0 * h};
}

/// Angle at o of C(r) inside the outer circle and outside the inner one,
/// from the circle-circle crossings of C(r) with both unit circles.
inline double crescent_arc(double n, double r) {
  if (!(r > 0.0)) throw std::domain_error("crescent_arc: r must be positive");
  const CrescentCircles cc = circles(n);
  std::vector<double> cuts;
  for (const geom::Point2& c : {cc.outer, cc.inner}) {
    const double d = geom::norm(c);
    const double k = (r * r + d * d - 1.0) / (2.0 * r * d);
    if (k > -1.0 && k < 1.0) {
      const double phi = geom::polar_angle(c);
      const double w = std::acos(k);
      cuts.push_back(geom::normalize_angle(phi - w));
      cuts.push_back(geom::normalize_angle(phi + w));
    }
  }
  auto in_crescent = [&](double a) {
    const geom::Point2 p = r * geom::unit_at(a);
    return geom::distance(p, cc.outer) <= 1.0 && geom::distance(p, cc.inner) >= 1.0;
  };
  if (cuts.empty()) return in_crescent(0.0) ? geom::kTwoPi : 0.0;
  std::sort(cuts.begin(), cuts.end());
  std::vector<geom::AngularInterval> arcs;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const double s = cuts[i];
    const double e = i + 1 < cuts.size() ? cuts[i + 1] : cuts[0] + geom::kTwoPi;
    if (e > s && in_crescent(0.5 * (s + e))) arcs.push_back({s, e});
  }
  return geom::AngularIntervalSet::from_arcs(arcs).measure();
}

/// Geometric beta: the crescent arc on the circle through the middle of the lune.
inline double crescent_beta_numeric(double n) {
  if (!(n >= 3.0)) throw std::domain_error("crescent: n must be ≥ 3");
  return crescent_arc(n, 3.0 * circles(n).h);
}

struct RatioRow {
  double n = 0.0;
  double L = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double ratio = 0.0;
};

/// `steps` rows with n log-spaced over [n_min, n_max], endpoints included.
inline std::vector<RatioRow> ratio_curve(double n_min, double n_max, int steps) {
  if (!(n_min >= 3.0) || !(n_max > n_min)) throw std::domain_error("ratio_curve: need 3 <= n_min < n_max");
  if (steps < 2) throw std::domain_error("ratio_curve: steps must be ≥ 2");
  std::vector<RatioRow> rows;
  const double a = std::log(n_min);
  const double b = std::log(n_max);
  for (int k = 0; k < steps; ++k) {
    const double n = k == 0 ? n_min : k == steps - 1 ? n_max : std::exp(a + (b - a) * k / (steps - 1));
    const CrescentParams c = CrescentParams::from_n(n);
    rows.push_back({n, c.L, c.alpha, c.beta, c.ratio()});
  }
  return rows;
}

}  // namespace zonet::crescent
