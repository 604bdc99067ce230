#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "zonet/verify.hpp"
#include "zonet/zonohedron.hpp"

namespace zonet::io {

inline constexpr int kSchemaVersion = 1;

using nlohmann::json;

inline json mesh_to_json(const Zonohedron& z) {
  json j;
  j["schema"] = kSchemaVersion;
  j["n"] = z.n();
  j["theta"] = z.params().theta;
  j["vertices"] = json::array();
  for (const auto& v : z.vertices()) j["vertices"].push_back({v.x, v.y, v.z});
  j["faces"] = json::array();
  for (const auto& f : z.faces()) j["faces"].push_back({{"v", f.v}, {"zone", f.zone}, {"step", f.step}});
  return j;
}

inline CheckStatus status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skipped") return CheckStatus::skipped;
  throw std::invalid_argument("unknown check status: " + s);
}

inline json report_to_json(const VerificationReport& r) {
  json j;
  j["schema"] = kSchemaVersion;
  j["n"] = r.params.n;
  j["theta"] = r.params.theta;
  j["theta_deg"] = geom::rad_to_deg(r.params.theta);
  j["alpha"] = r.alpha;
  j["max_beta"] = r.max_beta;
  j["max_beta_r"] = r.max_beta_r;
  j["samples"] = r.samples;
  j["disconnected_samples"] = r.disconnected_samples;
  j["beta_exceeds_alpha_disconnected"] = r.beta_exceeds_alpha_disconnected;
  j["overlap_pairs"] = r.overlap_pairs;
  j["pass"] = r.pass;
  json checks = json::object();
  for (const auto& [name, c] : r.checks) {
    checks[name] = {{"status", to_string(c.status)}, {"margin", c.margin}, {"detail", c.detail}};
  }
  j["checks"] = checks;
  return j;
}

inline VerificationReport report_from_json(const json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) throw std::invalid_argument("unsupported report schema");
  VerificationReport r;
  r.params = Params{j.at("n").get<int>(), j.at("theta").get<double>()};
  r.alpha = j.at("alpha").get<double>();
  r.max_beta = j.at("max_beta").get<double>();
  r.max_beta_r = j.at("max_beta_r").get<double>();
  r.samples = j.at("samples").get<std::size_t>();
  r.disconnected_samples = j.at("disconnected_samples").get<std::size_t>();
  r.beta_exceeds_alpha_disconnected = j.at("beta_exceeds_alpha_disconnected").get<bool>();
  r.overlap_pairs = j.at("overlap_pairs").get<std::size_t>();
  r.pass = j.at("pass").get<bool>();
  for (const auto& [name, c] : j.at("checks").items()) {
    r.checks[name] = CheckResult{status_from_string(c.at("status").get<std::string>()), c.at("margin").get<double>(),
                                 c.at("detail").get<std::string>()};
  }
  return r;
}

}  // namespace zonet::io
