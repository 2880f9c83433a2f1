#include "tat/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "tat/errors.hpp"
#include "tat/recon.hpp"

namespace tat {

using nlohmann::json;

namespace {

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw ConfigError(where + ": unknown key '" + it.key() + "'");
}

template <class T>
T get_or(const json& j, const char* key, T dflt) {
  if (!j.contains(key) || j.at(key).is_null()) return dflt;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

Vec3 vec3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw ConfigError(where + ": expected a 3-vector");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

double default_window(const AttenuationLaw& law, const Phantom& ph, double r0) {
  double rmax = 0.0;
  for (const auto& b : ph.balls) rmax = std::max(rmax, b.radius);
  return 2.0 * (r0 + rmax) / law.c0 + 5.0 * law.tau0;
}

std::uint64_t config_hash(const json& j) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

ExperimentConfig parse_config(const json& j) {
  only_keys(j, {"stages", "law", "pulse", "grid", "phantom", "detectors", "inverse", "recon", "outputs", "seed",
                "noise", "threads"},
            "config");
  ExperimentConfig c;
  c.raw = j;

  c.stages = get_or<std::vector<std::string>>(j, "stages", {"causality", "kernel", "forward", "invert", "recon"});
  for (const auto& s : c.stages)
    if (s != "causality" && s != "kernel" && s != "forward" && s != "invert" && s != "recon")
      throw ConfigError("config: unknown stage '" + s + "'");

  const json law = j.value("law", json::object());
  only_keys(law, {"kind", "gamma", "alpha0", "tau0"}, "law");
  const auto kind = law_kind_from_string(get_or<std::string>(law, "kind", "None"));
  if (kind == LawKind::None) {
    c.law = AttenuationLaw::none();
  } else {
    const double gamma = get_or<double>(law, "gamma", 1.5);
    const double tau0 = get_or<double>(law, "tau0", 0.01);
    if (kind == LawKind::CausalLaw) {
      if (!(tau0 > 0.0)) throw ConfigError("law: tau0 must be > 0");
      c.law = law.contains("alpha0") && !law["alpha0"].is_null()
                  ? AttenuationLaw::causal(gamma, law["alpha0"].get<double>(), tau0)
                  : AttenuationLaw::causal_tied(gamma, tau0);
    } else {
      c.law = law.contains("alpha0") && !law["alpha0"].is_null()
                  ? AttenuationLaw::power(gamma, law["alpha0"].get<double>())
                  : AttenuationLaw::power_matched(gamma, tau0);
    }
  }

  const json pulse = j.value("pulse", json::object());
  only_keys(pulse, {"kind", "t1"}, "pulse");
  c.pulse.kind = pulse_kind_from_string(get_or<std::string>(pulse, "kind", "Delta"));
  c.pulse.t1 = get_or<double>(pulse, "t1", 0.0);
  c.pulse.validate();

  const json ph = j.value("phantom", json::object());
  only_keys(ph, {"r0", "balls"}, "phantom");
  const double r0 = get_or<double>(ph, "r0", 1.0);
  if (!(r0 > 0.0)) throw ConfigError("phantom: r0 must be > 0");
  for (const auto& b : ph.value("balls", json::array())) {
    only_keys(b, {"center", "radius", "amplitude"}, "phantom.balls[]");
    c.phantom.balls.push_back({vec3(b.at("center"), "phantom.balls[].center"), get_or<double>(b, "radius", 0.0),
                               get_or<double>(b, "amplitude", 1.0)});
  }
  c.phantom.validate(r0);

  const json grid = j.value("grid", json::object());
  only_keys(grid, {"n", "T", "dt"}, "grid");
  const int n = get_or<int>(grid, "n", 1024);
  if (!is_pow2(n)) throw ConfigError("grid: n must be a power of two >= 2");
  double dt;
  if (grid.contains("dt")) {
    dt = grid["dt"].get<double>();
    if (grid.contains("T") && n * dt < grid["T"].get<double>() * (1 - 1e-12))
      throw ConfigError("grid: n * dt does not cover T");
  } else {
    const double T = get_or<double>(grid, "T", default_window(c.law, c.phantom, r0));
    if (!(T > 0.0)) throw ConfigError("grid: T must be > 0");
    dt = T / n;
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("grid: dt must be > 0");
  c.grid = TimeGrid(n, dt);

  const json det = j.value("detectors", json::object());
  only_keys(det, {"kind", "sphere_points", "directions", "normal", "count"}, "detectors");
  c.detectors.kind = detector_kind_from_string(get_or<std::string>(det, "kind", "point"));
  c.detectors.r0 = r0;
  if (c.detectors.kind == DetectorKind::LineArray) {
    const Vec3 nrm = det.contains("normal") ? vec3(det["normal"], "detectors.normal") : Vec3::UnitZ();
    if (!(nrm.norm() > 0.0)) throw ConfigError("detectors.normal must be nonzero");
    c.detectors = line_array(nrm, r0, get_or<int>(det, "count", 8));
  } else if (det.contains("directions")) {
    for (const auto& d : det["directions"]) {
      const Vec3 v = vec3(d, "detectors.directions[]");
      if (!(v.norm() > 0.0)) throw ConfigError("detectors: zero direction");
      c.detectors.directions.push_back(v.normalized());
    }
  } else {
    c.sphere_points = get_or<int>(det, "sphere_points", 590);
    bool known = false;
    for (int s : lebedev_sizes()) known = known || s == c.sphere_points;
    if (!known) throw ConfigError("detectors.sphere_points must be one of 110, 302, 590, 1202");
    const auto rule = lebedev(c.sphere_points);
    c.detectors.directions = rule.directions;
    c.detectors.weights = rule.weights;
  }
  c.detectors.r0 = r0;
  c.detectors.validate();

  const json inv = j.value("inverse", json::object());
  only_keys(inv, {"regularizer", "lambda", "threshold", "discrepancy"}, "inverse");
  c.inverse.reg.kind = reg_kind_from_string(get_or<std::string>(inv, "regularizer", "Tikhonov"));
  c.inverse.reg.lambda = get_or<double>(inv, "lambda", -1.0);
  c.inverse.reg.threshold = get_or<double>(inv, "threshold", 1e-8);
  c.inverse.reg.validate();
  c.inverse.discrepancy = get_or<bool>(inv, "discrepancy", true);

  const json rec = j.value("recon", json::object());
  only_keys(rec, {"a", "m"}, "recon");
  c.recon.a = get_or<double>(rec, "a", 0.4);
  c.recon.m = get_or<int>(rec, "m", 64);

  const json out = j.value("outputs", json::object());
  only_keys(out, {"directory", "formats", "kernels"}, "outputs");
  c.outputs.directory = get_or<std::string>(out, "directory", "out");
  if (out.contains("formats")) {
    c.outputs.csv = c.outputs.binary = false;
    for (const auto& f : out["formats"]) {
      const auto s = f.get<std::string>();
      if (s == "csv")
        c.outputs.csv = true;
      else if (s == "binary")
        c.outputs.binary = true;
      else
        throw ConfigError("outputs.formats: unknown format '" + s + "'");
    }
  }
  c.outputs.kernels = get_or<bool>(out, "kernels", false);

  c.seed = get_or<std::uint64_t>(j, "seed", 0);
  c.noise = get_or<double>(j, "noise", 0.0);
  if (!(c.noise >= 0.0)) throw ConfigError("noise must be >= 0");
  c.threads = get_or<int>(j, "threads", 0);
  if (c.threads < 0) throw ConfigError("threads must be >= 0");

  bool recon = false;
  for (const auto& s : c.stages) recon = recon || s == "recon";
  if (recon) {
    if (c.detectors.kind != DetectorKind::PointSphere || c.sphere_points == 0)
      throw ConfigError("recon stage requires point detectors from a sphere rule");
    if (r0 != 1.0) throw ConfigError("recon stage requires r0 = 1");
    VolumeGrid v;
    v.a = c.recon.a;
    v.m = c.recon.m;
    v.validate(r0);
    if (r0 + std::sqrt(3.0) * c.recon.a > c.grid.span())
      throw ConfigError("recon: time window too short for the volume extent");
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return parse_config(j);
}

}  // namespace tat
