#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonet/io/csv.hpp"
#include "zonet/io/json.hpp"
#include "zonet/io/obj.hpp"
#include "zonet/io/svg.hpp"
#include "zonet/zonet.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "50" or "50deg" is degrees, "0.5rad" is radians. Returns radians.
double parse_theta(const std::string& text) {
  std::string s = text;
  bool radians = false;
  if (s.size() > 3 && s.compare(s.size() - 3, 3, "rad") == 0) {
    radians = true;
    s.resize(s.size() - 3);
  } else if (s.size() > 3 && s.compare(s.size() - 3, 3, "deg") == 0) {
    s.resize(s.size() - 3);
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("theta: cannot parse '" + text + "'");
  }
  if (used != s.size()) throw UsageError("theta: cannot parse '" + text + "'");
  return radians ? v : zonet::geom::deg_to_rad(v);
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("cannot parse list item '" + item + "'");
    }
  }
  return out;
}

zonet::Params make_params(int n, const std::string& theta) {
  try {
    return zonet::Params::make(n, parse_theta(theta));
  } catch (const zonet::ParamError& e) {
    throw UsageError(e.what());
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polar zonohedra: construction, zone unfolding and net verification"};
  app.require_subcommand(1);

  int n = 0;
  std::string theta = "0";
  std::string out_obj, out_json, out_svg, out_csv;
  int zone = -1;
  int samples = 9;
  int jobs = 0;
  int n_min = 3, n_max = 32;
  std::string thetas;
  double crescent_n_max = 1e4;
  int steps = 200;

  auto add_params = [&](CLI::App* c) {
    c->add_option("-n", n, "number of generators (n >= 3)")->required();
    c->add_option("--theta", theta, "polar angle; degrees, or radians with a 'rad' suffix")->required();
  };

  auto* build = app.add_subcommand("build", "construct P(n, theta) and write OBJ or JSON");
  add_params(build);
  build->add_option("--obj", out_obj, "OBJ output file ('-' for stdout)");
  build->add_option("--json", out_json, "JSON mesh output file");

  auto* net = app.add_subcommand("net", "write the unfolded net as SVG");
  add_params(net);
  net->add_option("--svg", out_svg, "SVG output file ('-' for stdout)");
  net->add_option("--zone", zone, "draw only this zone");

  auto* verify = app.add_subcommand("verify", "run every applicable check; exit 0 iff all pass");
  add_params(verify);
  verify->add_option("--json", out_json, "JSON report output file");
  verify->add_option("--samples", samples, "samples per event interval")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "verify a grid of (n, theta) and write CSV");
  sweep->add_option("--n-min", n_min, "smallest n")->capture_default_str();
  sweep->add_option("--n-max", n_max, "largest n")->capture_default_str();
  sweep->add_option("--thetas", thetas, "comma-separated theta list in degrees (default grid if omitted)");
  sweep->add_option("--jobs", jobs, "worker threads, 0 = all cores")->capture_default_str();
  sweep->add_option("--samples", samples, "samples per event interval")->capture_default_str();
  sweep->add_option("--csv", out_csv, "CSV output file ('-' for stdout)");

  auto* cres = app.add_subcommand("crescent", "ratio beta/alpha of the crescent bound as CSV");
  cres->add_option("--n-max", crescent_n_max, "largest n")->capture_default_str();
  cres->add_option("--steps", steps, "rows, log-spaced in n from 3")->capture_default_str();
  cres->add_option("--csv", out_csv, "CSV output file ('-' for stdout)");

  auto* sub = app.add_subcommand("subtended", "angle subtended at o by each rhomb, as CSV");
  add_params(sub);
  sub->add_option("--csv", out_csv, "CSV output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*build) {
      const zonet::Zonohedron z = zonet::build(make_params(n, theta));
      if (!out_json.empty()) emit(out_json, zonet::io::mesh_to_json(z).dump(1) + "\n");
      if (!out_obj.empty() || out_json.empty()) emit(out_obj, zonet::io::to_obj(z));
      return kExitPass;
    }
    if (*net) {
      const zonet::Params p = make_params(n, theta);
      if (zone >= p.n) throw UsageError("zone must lie in [0, n)");
      const zonet::Net nt = zonet::assemble_net(p);
      emit(out_svg, zonet::io::to_svg(nt, zone >= 0 ? std::optional<int>(zone) : std::nullopt));
      return kExitPass;
    }
    if (*verify) {
      if (samples < 3) throw UsageError("samples must be ≥ 3");
      const zonet::Params p = make_params(n, theta);
      zonet::VerificationConfig cfg;
      cfg.samples_per_interval = samples;
      const zonet::VerificationReport r = zonet::run_verification(p, cfg);
      if (!out_json.empty()) emit(out_json, zonet::io::report_to_json(r).dump(2) + "\n");
      std::printf("n=%d theta=%.17g deg alpha=%.17g deg max_beta=%.17g deg\n", p.n, zonet::geom::rad_to_deg(p.theta),
                  zonet::geom::rad_to_deg(r.alpha), zonet::geom::rad_to_deg(r.max_beta));
      if (r.disconnected_samples > 0) {
        std::printf("disconnected arcs at %zu of %zu sampled radii\n", r.disconnected_samples, r.samples);
      }
      for (const auto& [name, c] : r.checks) {
        std::printf("  %-14s %-7s %s\n", name.c_str(), zonet::to_string(c.status), c.detail.c_str());
      }
      std::printf("%s\n", r.pass ? "PASS" : "FAIL");
      for (const auto& name : r.failed()) std::fprintf(stderr, "failed check: %s\n", name.c_str());
      return r.pass ? kExitPass : kExitFail;
    }
    if (*sweep) {
      if (samples < 3) throw UsageError("samples must be ≥ 3");
      zonet::SweepGrid grid = zonet::default_grid();
      if (n_min < 3 || n_max < n_min) throw UsageError("need 3 ≤ n-min ≤ n-max");
      grid.ns.clear();
      for (int k = n_min; k <= n_max; ++k) grid.ns.push_back(k);
      if (!thetas.empty()) grid.thetas_deg = parse_list(thetas);
      for (double t : grid.thetas_deg) {
        if (!(t >= 0.0 && t < 90.0)) throw UsageError("theta must lie in [0, 90) degrees");
      }
      zonet::VerificationConfig cfg;
      cfg.samples_per_interval = samples;
      const auto rows = zonet::run_sweep(grid, jobs, cfg);
      emit(out_csv, zonet::sweep_csv(rows));
      bool all = true;
      for (const auto& r : rows) all = all && r.pass;
      return all ? kExitPass : kExitFail;
    }
    if (*cres) {
      if (!(crescent_n_max > 3.0)) throw UsageError("n-max must exceed 3");
      if (steps < 2) throw UsageError("steps must be ≥ 2");
      emit(out_csv, zonet::io::crescent_csv(zonet::crescent::ratio_curve(3.0, crescent_n_max, steps)));
      return kExitPass;
    }
    if (*sub) {
      const zonet::PlanarZone z = zonet::standard_zone(make_params(n, theta));
      emit(out_csv, zonet::io::subtended_csv(zonet::rhomb_subtended_angles(z)));
      return kExitPass;
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const zonet::ParamError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
  return kExitUsage;
}
