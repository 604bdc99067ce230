#pragma once

#include <string>

#include "zonet/io/format.hpp"
#include "zonet/zonohedron.hpp"

namespace zonet::io {

/// Wavefront OBJ: "v x y z" lines, then one quad "f a b c d" per face
/// (1-indexed, outward winding) in (zone, step) order.
inline std::string to_obj(const Zonohedron& z) {
  std::string out = "# polar zonohedron n=" + std::to_string(z.n()) + " theta=" + num(z.params().theta) + "\n";
  for (const auto& v : z.vertices()) out += "v " + num(v.x) + " " + num(v.y) + " " + num(v.z) + "\n";
  for (const auto& f : z.faces()) {
    out += "f";
    for (int k : f.v) out += " " + std::to_string(k + 1);
    out += "\n";
  }
  return out;
}

}  // namespace zonet::io
