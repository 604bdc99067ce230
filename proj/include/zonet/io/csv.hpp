#pragma once

#include <string>
#include <vector>

#include "zonet/crescent.hpp"
#include "zonet/io/format.hpp"

namespace zonet::io {

inline std::string crescent_csv(const std::vector<crescent::RatioRow>& rows) {
  std::string out = "n,L,alpha_rad,beta_rad,ratio\n";
  for (const auto& r : rows) {
    out += num(r.n) + "," + num(r.L) + "," + num(r.alpha) + "," + num(r.beta) + "," + num(r.ratio) + "\n";
  }
  return out;
}

/// One row per rhomb: index i (1-based) and the angle it subtends at o.
inline std::string subtended_csv(const std::vector<double>& beta_rad) {
  std::string out = "i,beta_deg\n";
  for (std::size_t i = 0; i < beta_rad.size(); ++i) {
    out += std::to_string(i + 1) + "," + num(geom::rad_to_deg(beta_rad[i])) + "\n";
  }
  return out;
}

}  // namespace zonet::io
