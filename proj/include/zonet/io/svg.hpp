#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "zonet/io/format.hpp"
#include "zonet/unfold.hpp"

namespace zonet::io {

struct SvgStyle {
  double scale = 100.0;  // user units per rhomb edge
  double margin = 0.05;  // fraction of the larger extent, each side
};

/// "#rrggbb" for hue in [0, 1) at fixed saturation and lightness.
inline std::string hue_color(double hue) {
  const double s = 0.75;
  const double l = 0.5;
  const double c = (1.0 - std::abs(2.0 * l - 1.0)) * s;
  const double hp = std::fmod(hue, 1.0) * 6.0;
  const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (hp < 1) r = c, g = x;
  else if (hp < 2) r = x, g = c;
  else if (hp < 3) g = c, b = x;
  else if (hp < 4) g = x, b = c;
  else if (hp < 5) r = x, b = c;
  else r = c, b = x;
  const double m = l - c / 2.0;
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround((r + m) * 255)),
                static_cast<int>(std::lround((g + m) * 255)), static_cast<int>(std::lround((b + m) * 255)));
  return buf;
}

/// SVG of the net (or of a single zone): one path per rhomb, zone i filled
/// with hue i/n, zone 0 outlined heavier, o marked. Collapsed rhombs are drawn
/// as line segments.
inline std::string to_svg(const Net& net, std::optional<int> only_zone = std::nullopt, const SvgStyle& style = {}) {
  const double k = style.scale;
  auto X = [&](const Point2& p) { return p.x * k; };
  auto Y = [&](const Point2& p) { return -p.y * k; };

  std::vector<const PlanarZone*> zones;
  for (const auto& z : net.zones) {
    if (!only_zone || z.index() == *only_zone) zones.push_back(&z);
  }
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto* z : zones) {
    for (const auto& v : z->vertices()) {
      xmin = std::min(xmin, X(v));
      xmax = std::max(xmax, X(v));
      ymin = std::min(ymin, Y(v));
      ymax = std::max(ymax, Y(v));
    }
  }
  const double pad = style.margin * std::max(xmax - xmin, ymax - ymin);
  const double vx = xmin - pad, vy = ymin - pad, vw = xmax - xmin + 2 * pad, vh = ymax - ymin + 2 * pad;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fixed6(vx) + " " + fixed6(vy) + " " +
         fixed6(vw) + " " + fixed6(vh) + "\">\n";
  const int n = net.params.n;
  for (const auto* z : zones) {
    const std::string color = hue_color(static_cast<double>(z->index()) / n);
    const std::string width = z->index() == 0 ? "2" : "1";
    out += "<g id=\"zone" + std::to_string(z->index()) + "\" fill=\"" + color +
           "\" fill-opacity=\"0.55\" stroke=\"#000000\" stroke-width=\"" + width + "\">\n";
    for (int j = 1; j < z->n(); ++j) {
      const ConvexQuad& q = z->rhomb(j);
      std::string d;
      if (q.degenerate()) {
        // the two extreme points of the collapsed quad
        std::size_t a = 0, b = 1;
        double best = -1;
        for (std::size_t s = 0; s < 4; ++s) {
          for (std::size_t t = s + 1; t < 4; ++t) {
            const double dd = geom::distance(q[s], q[t]);
            if (dd > best) best = dd, a = s, b = t;
          }
        }
        d = "M " + fixed6(X(q[a])) + " " + fixed6(Y(q[a])) + " L " + fixed6(X(q[b])) + " " + fixed6(Y(q[b]));
        out += "<path d=\"" + d + "\" stroke=\"" + color + "\" stroke-width=\"3\"/>\n";
        continue;
      }
      for (std::size_t s = 0; s < 4; ++s) {
        d += (s == 0 ? "M " : " L ") + fixed6(X(q[s])) + " " + fixed6(Y(q[s]));
      }
      out += "<path d=\"" + d + " Z\"/>\n";
    }
    out += "</g>\n";
  }
  const Point2 o = net.zones.front().o();
  out += "<circle cx=\"" + fixed6(X(o)) + "\" cy=\"" + fixed6(Y(o)) + "\" r=\"" + fixed6(0.04 * k) +
         "\" fill=\"#000000\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace zonet::io
