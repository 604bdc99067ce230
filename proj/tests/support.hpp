#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

namespace zonet::testing {

/// Seed for the sampling oracles: ZONET_SEED if set, else a fixed default.
inline std::uint64_t seed() {
  static const std::uint64_t s = [] {
    std::uint64_t v = 20261016;
    if (const char* env = std::getenv("ZONET_SEED")) v = std::strtoull(env, nullptr, 10);
    std::fprintf(stderr, "[zonet] sampling seed %llu\n", static_cast<unsigned long long>(v));
    return v;
  }();
  return s;
}

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

}  // namespace zonet::testing
