#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <string>

#include "tat/config.hpp"
#include "tat/errors.hpp"
#include "tat/pipeline.hpp"

using namespace tat;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json reference() {
  json j;
  std::ifstream(fs::path(TAT_SOURCE_DIR) / "configs" / "reference.json") >> j;
  return j;
}

json small(const fs::path& out) {
  json j = reference();
  j["grid"] = {{"n", 256}, {"T", 2.0}};
  j["detectors"]["sphere_points"] = 110;
  j["recon"] = {{"a", 0.4}, {"m", 16}};
  j["outputs"]["directory"] = out.string();
  j["noise"] = 0.01;
  return j;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

int run_cli(const std::string& args) {
  const int rc = std::system((std::string(TAT_CLI) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("reference config parses") {
  const auto c = parse_config(reference());
  CHECK(c.law.kind == LawKind::CausalLaw);
  CHECK(c.law.alpha0 == doctest::Approx(2 * 0.01 / std::abs(std::cos(0.75 * 3.141592653589793))));
  CHECK(c.grid.n == 1024);
  CHECK(c.grid.dt == doctest::Approx(2.0 / 1024));
  CHECK(c.detectors.size() == 590);
  CHECK(c.stages.size() == 5);
}

TEST_CASE("defaults fill an empty config") {
  json j = json::object();
  j["stages"] = {"causality"};
  j["phantom"] = {{"balls", {{{"center", {0, 0, 0}}, {"radius", 0.2}}}}};
  const auto c = parse_config(j);
  CHECK(c.law.kind == LawKind::None);
  CHECK(c.grid.n * c.grid.dt == doctest::Approx(default_window(c.law, c.phantom, 1.0)));
}

TEST_CASE("validation rejects bad configs") {
  auto with = [](auto&& edit) {
    json j = reference();
    edit(j);
    return j;
  };
  CHECK_THROWS_AS(parse_config(with([](json& j) { j["colour"] = 1; })), ConfigError);
  CHECK_THROWS_AS(parse_config(with([](json& j) { j["law"]["beta"] = 1; })), ConfigError);
  CHECK_THROWS_AS(parse_config(with([](json& j) { j["law"]["gamma"] = 2.5; })), ConfigError);
  CHECK_THROWS_AS(parse_config(with([](json& j) { j["law"]["gamma"] = 1.0; })), ConfigError);
  CHECK_THROWS_AS(parse_config(with([](json& j) { j["law"]["tau0"] = -0.01; })), ConfigError);
  CHECK_THROWS_AS(parse_config(with([](json& j) { j["phantom"]["balls"][0]["center"] = {0.9, 0, 0}; })), ConfigError);
  CHECK_THROWS_AS(parse_config(with([](json& j) { j["grid"]["n"] = 1000; })), ConfigError);
  CHECK_THROWS_AS(parse_config(with([](json& j) { j["grid"] = {{"n", 64}, {"dt", 0.01}, {"T", 2.0}}; })), ConfigError);
  CHECK_THROWS_AS(parse_config(with([](json& j) { j["stages"] = {"plot"}; })), ConfigError);
  CHECK_THROWS_AS(parse_config(with([](json& j) { j["detectors"] = {{"kind", "planar"}, {"directions", {{0, 0, 1}}}}; })),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(with([](json& j) { j["recon"]["a"] = 0.7; })), ConfigError);
  CHECK_THROWS_AS(parse_config(with([](json& j) { j["outputs"]["formats"] = {"png"}; })), ConfigError);
  CHECK_THROWS_AS(parse_config(with([](json& j) { j["noise"] = -0.1; })), ConfigError);
}

TEST_CASE("config hash is stable and sensitive") {
  const json a = reference();
  json b = a;
  b["seed"] = 8;
  CHECK(config_hash(a) == config_hash(reference()));
  CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("causality-only run writes the manifest and report but no data") {
  const fs::path out = fs::temp_directory_path() / "tat_causality_only";
  fs::remove_all(out);
  json j = reference();
  j["stages"] = {"causality"};
  j["outputs"]["directory"] = out.string();
  const auto r = run_pipeline(parse_config(j));
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(out / "manifest.json"));
  CHECK(fs::exists(out / "causality.csv"));
  CHECK_FALSE(fs::exists(out / "data"));
  CHECK(r.manifest["diagnostics"]["causality"]["pass"] == true);
  fs::remove_all(out);
}

TEST_CASE("full pipeline produces every artifact and repeats byte for byte") {
  const fs::path a = fs::temp_directory_path() / "tat_run_a", b = fs::temp_directory_path() / "tat_run_b";
  fs::remove_all(a);
  fs::remove_all(b);
  auto ja = small(a), jb = small(b);
  ja["outputs"]["kernels"] = jb["outputs"]["kernels"] = true;
  const auto ra = run_pipeline(parse_config(ja));
  const auto rb = run_pipeline(parse_config(jb));
  REQUIRE(ra.exit_code == 0);
  for (const char* f : {"kernel.bin", "kernel.csv", "data/det_0000.csv", "recovered/det_0109.csv", "inversion.csv",
                        "volume.bin", "volume_slice.csv", "error_summary.csv", "alpha_curves.csv"}) {
    CAPTURE(f);
    REQUIRE(fs::exists(a / f));
    CHECK(slurp(a / f) == slurp(b / f));
  }
  CHECK(ra.manifest["errors"].empty());
  for (const char* s : {"causality", "kernel", "forward", "invert", "recon"}) CHECK(ra.manifest["timings"].contains(s));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("planar and line pipelines") {
  for (const char* kind : {"planar", "line"}) {
    const fs::path out = fs::temp_directory_path() / (std::string("tat_") + kind);
    fs::remove_all(out);
    json j = small(out);
    j["stages"] = {"forward", "invert"};
    j["detectors"] = kind == std::string("planar") ? json{{"kind", kind}, {"directions", {{0, 0, 1}, {1, 0, 0}}}}
                                                   : json{{"kind", kind}, {"normal", {0, 0, 1}}, {"count", 4}};
    const auto r = run_pipeline(parse_config(j));
    CHECK(r.exit_code == 0);
    CHECK(r.recovered.size() == (kind == std::string("planar") ? 2u : 4u));
    CHECK(r.manifest["diagnostics"]["invert"]["median_rel_l2"].get<double>() < 0.15);
    if (kind == std::string("planar")) CHECK(fs::exists(out / "radon_records.csv"));
    fs::remove_all(out);
  }
}

TEST_CASE("numerical guard failures are recorded in the manifest") {
  const fs::path out = fs::temp_directory_path() / "tat_guard";
  fs::remove_all(out);
  json j = small(out);
  j["stages"] = {"kernel"};
  j["law"] = {{"kind", "PowerLaw"}, {"gamma", 1.5}, {"tau0", 0.01}};
  const auto r = run_pipeline(parse_config(j));
  CHECK(r.exit_code == 3);
  REQUIRE(r.manifest["errors"].size() == 1);
  CHECK(r.manifest["errors"][0]["type"] == "numerical_guard");
  CHECK(fs::exists(out / "manifest.json"));
  fs::remove_all(out);
}

TEST_CASE("command line exit codes") {
  const fs::path dir = fs::temp_directory_path() / "tat_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto cfg = (fs::path(TAT_SOURCE_DIR) / "configs" / "reference.json").string();
  CHECK(run_cli("causality --config " + cfg + " --out " + (dir / "c").string()) == 0);
  CHECK(fs::exists(dir / "c" / "causality.csv"));

  std::ofstream(dir / "bad.json") << R"({"law": {"kind": "CausalLaw", "gamma": 3.0}})";
  CHECK(run_cli("causality --config " + (dir / "bad.json").string() + " --out " + (dir / "b").string()) == 2);
  std::ofstream(dir / "typo.json") << R"({"lawz": {}})";
  CHECK(run_cli("causality --config " + (dir / "typo.json").string()) == 2);
  CHECK(run_cli("frobnicate") == 2);

  std::ofstream(dir / "power.json") << R"({"law": {"kind": "PowerLaw", "gamma": 1.5, "tau0": 0.01},
    "grid": {"n": 256, "T": 2.0}, "phantom": {"balls": [{"center": [0, 0, 0], "radius": 0.25}]}})";
  CHECK(run_cli("kernel --config " + (dir / "power.json").string() + " --out " + (dir / "k").string()) == 3);
  fs::remove_all(dir);
}
