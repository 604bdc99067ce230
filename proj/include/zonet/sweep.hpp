#pragma once

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "zonet/io/format.hpp"
#include "zonet/verify.hpp"

namespace zonet {

struct SweepGrid {
  std::vector<int> ns;
  std::vector<double> thetas_deg;
};

/// n in 3..32; theta in {0, 0.5, 1, 2, 5, 10, 15, ..., 85, 89, 89.5} degrees.
inline SweepGrid default_grid() {
  SweepGrid g;
  for (int n = 3; n <= 32; ++n) g.ns.push_back(n);
  g.thetas_deg = {0.0, 0.5, 1.0, 2.0};
  for (int t = 5; t <= 85; t += 5) g.thetas_deg.push_back(t);
  g.thetas_deg.push_back(89.0);
  g.thetas_deg.push_back(89.5);
  return g;
}

struct SweepRow {
  int n = 0;
  double theta_deg = 0.0;
  double alpha_deg = 0.0;
  double max_beta_deg = 0.0;
  double margin_deg = 0.0;  // alpha - max beta
  std::size_t overlap_pairs = 0;
  bool pass = false;
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline SweepRow sweep_row(const VerificationReport& r, double theta_deg) {
  return {r.params.n, theta_deg, geom::rad_to_deg(r.alpha), geom::rad_to_deg(r.max_beta),
          geom::rad_to_deg(r.alpha) - geom::rad_to_deg(r.max_beta), r.overlap_pairs, r.pass};
}

/// Runs every grid cell on up to `jobs` threads (0 = hardware concurrency).
/// Rows come back sorted by (n, theta) whatever the scheduling.
inline std::vector<SweepRow> run_sweep(const SweepGrid& grid, int jobs = 0, const VerificationConfig& cfg = {}) {
  std::vector<int> ns = grid.ns;
  std::vector<double> ts = grid.thetas_deg;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (int n : ns) Params::make(n, 0.0);
  for (double t : ts) Params::make(3, geom::deg_to_rad(t));

  const std::size_t cells = ns.size() * ts.size();
  std::vector<SweepRow> rows(cells);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells; i = next++) {
      const int n = ns[i / ts.size()];
      const double t = ts[i % ts.size()];
      rows[i] = sweep_row(run_verification(Params::make(n, geom::deg_to_rad(t)), cfg), t);
    }
  };
  unsigned threads = jobs > 0 ? static_cast<unsigned>(jobs) : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cells, 1)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "n,theta_deg,alpha_deg,max_beta_deg,margin,overlap_pairs,pass\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + io::num(r.theta_deg) + "," + io::num(r.alpha_deg) + "," +
           io::num(r.max_beta_deg) + "," + io::num(r.margin_deg) + "," + std::to_string(r.overlap_pairs) + "," +
           (r.pass ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace zonet
