#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "tat/config.hpp"
#include "tat/errors.hpp"
#include "tat/pipeline.hpp"

using nlohmann::json;

namespace {

struct Flags {
  std::string config;
  std::string out;
  int threads = -1;
  long long seed = -1;
  double noise = -1.0;
};

int run_verb(const std::string& verb, const Flags& fl) {
  json j = json::object();
  if (!fl.config.empty()) {
    std::ifstream f(fl.config);
    if (!f) throw tat::ConfigError("cannot open config " + fl.config);
    try {
      f >> j;
    } catch (const json::exception& e) {
      throw tat::ConfigError(std::string("config parse error: ") + e.what());
    }
  }
  if (!j.is_object()) throw tat::ConfigError("config: top level must be an object");
  if (verb != "pipeline") j["stages"] = json::array({verb});
  if (verb == "kernel") j["outputs"]["kernels"] = true;
  if (!fl.out.empty()) j["outputs"]["directory"] = fl.out;
  if (fl.threads >= 0) j["threads"] = fl.threads;
  if (fl.seed >= 0) j["seed"] = fl.seed;
  if (fl.noise >= 0.0) j["noise"] = fl.noise;

  const auto cfg = tat::parse_config(j);
  const auto r = tat::run_pipeline(cfg);
  for (const auto& e : r.manifest["errors"])
    std::fprintf(stderr, "error [%s] %s: %s\n", e["type"].get<std::string>().c_str(),
                 e["stage"].get<std::string>().c_str(), e["message"].get<std::string>().c_str());
  for (const auto& [stage, d] : r.manifest["diagnostics"].items()) std::printf("%s %s\n", stage.c_str(), d.dump().c_str());
  std::printf("manifest %s/manifest.json\n", cfg.outputs.directory.c_str());
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermoacoustic imaging in attenuating media: kernels, forward data, inversion, reconstruction"};
  app.require_subcommand(1, 1);
  Flags fl;
  const char* verbs[][2] = {{"causality", "negative-time energy of the attenuated propagator"},
                            {"kernel", "build and write the detector kernel"},
                            {"forward", "simulate attenuated detector data"},
                            {"invert", "recover projections from the simulated data"},
                            {"recon", "reconstruct the volume from recovered spherical projections"},
                            {"pipeline", "run the stages listed in the config"}};
  for (auto& v : verbs) {
    auto* sub = app.add_subcommand(v[0], v[1]);
    sub->add_option("--config", fl.config, "JSON experiment config")->check(CLI::ExistingFile);
    sub->add_option("--out", fl.out, "output directory (overrides outputs.directory)");
    sub->add_option("--threads", fl.threads, "OpenMP thread cap")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", fl.seed, "noise seed")->check(CLI::NonNegativeNumber);
    sub->add_option("--noise", fl.noise, "relative noise level (fraction of rms)")->check(CLI::NonNegativeNumber);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return run_verb(app.get_subcommands().front()->get_name(), fl);
  } catch (const tat::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const tat::NumericalGuardError& e) {
    std::fprintf(stderr, "numerical guard: %s\n", e.what());
    return 3;
  } catch (const json::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }
}
