// Acceptance run: one PASS/FAIL line per criterion with the measured numbers. Exit status is the number of
// failing criteria.
#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <json.hpp>
#include <string>
#include <vector>

#include "tat/attenuation.hpp"
#include "tat/config.hpp"
#include "tat/errors.hpp"
#include "tat/forward.hpp"
#include "tat/inverse.hpp"
#include "tat/kernels.hpp"
#include "tat/pipeline.hpp"
#include "tat/recon.hpp"

namespace fs = std::filesystem;
using namespace tat;

namespace {

const double kTau0 = 0.01;
const Phantom kRef{{{Vec3(0.0, 0.0, 0.0), 0.25, 1.0}}};
const Phantom kOffCenter{{{Vec3(0.1, -0.05, 0.08), 0.25, 1.0}}};

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

Outcome causality_dichotomy() {
  Outcome o{true, ""};
  for (double g : {1.1, 1.5, 2.0}) {
    const auto causal = AttenuationLaw::causal_tied(g, kTau0);
    const auto power = AttenuationLaw::power_matched(g, kTau0);
    const TimeGrid grid(4096, reference_dt(causal, 1.0));
    const auto rc = causality_diagnostic(causal, 1.0, grid);
    const auto rp = causality_diagnostic(power, 1.0, grid);
    o.detail += "g=" + fmt("%.1f", g) + " causal " + fmt("%.2e", rc.neg_fraction) + " power " +
                fmt("%.2e", rp.neg_fraction) + "; ";
    o.pass = o.pass && rc.pass && !rp.pass && rp.neg_fraction >= 1e-2;
  }
  o.detail += "bounds causal <= 1e-6, power >= 1e-2";
  return o;
}

Outcome power_law_agreement(const fs::path& out) {
  const auto rows = alpha_curves(1.5, kTau0, 241, 1e-4, 1e2);
  double low_dev = 0.0, high_dev = 1e300;
  std::ofstream f(out / "alpha_curves.csv");
  f << "tau0_omega,re_alpha_causal,tau0_omega_pow_gamma\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", r.tau_omega, r.re_causal, r.power_curve);
    f << buf;
    const double dev = std::abs(r.re_causal - r.power_curve) / r.power_curve;
    if (r.tau_omega <= 1e-2) low_dev = std::max(low_dev, dev);
    if (r.tau_omega >= 1.0) high_dev = std::min(high_dev, dev);
  }
  return {low_dev <= 0.05 && high_dev > 0.20,
          "max rel dev for tau0 w <= 1e-2: " + fmt("%.2e", low_dev) + " (<= 0.05); min rel dev for tau0 w >= 1: " +
              fmt("%.3f", high_dev) + " (> 0.20)"};
}

Outcome degeneration() {
  const TimeGrid grid(1024, 2.0 / 1024);
  const auto m = m_matrix(AttenuationLaw::none(), grid);
  double total = 0.0, off = 0.0;
  for (int j = 0; j < grid.n; ++j)
    for (int i = 0; i < grid.n; ++i) {
      const double v2 = m.values(i, j) * m.values(i, j);
      total += v2;
      if (i != j) off += v2;
    }
  const double off_band = off / total;
  const auto npt = n_point_from(m, Pulse::delta());
  double worst = 0.0;
  for (const Vec3& x : {Vec3(0, 0, 1), Vec3(0.6, 0.0, 0.8), Vec3(-0.48, 0.6, -0.64)}) {
    const auto p = attenuated_point_data(npt, kRef, x);
    worst = std::max(worst, rel_l2(p.values, ideal_point_pressure(kRef, x, grid).values));
  }
  return {off_band <= 1e-3 && worst <= 0.01, "off-band energy " + fmt("%.2e", off_band) +
                                                 " (<= 1e-3); n_point vs ideal p0 worst rel L2 " + fmt("%.2e", worst) +
                                                 " (<= 0.01)"};
}

Outcome model_equivalence() {
  const TimeGrid grid(2048, 2.0 / 2048);
  const Phantom small{{{Vec3(0.05, 0.02, -0.03), 0.05, 1.0}}};
  const Vec3 x(0.48, 0.6, 0.64);
  Outcome o{true, ""};
  for (double g : {1.1, 1.5, 2.0}) {
    const auto law = AttenuationLaw::causal_tied(g, kTau0);
    const auto kern = attenuated_point_data(small, law, Pulse::delta(), x, grid);
    const auto green = green_forward(small, law, x, grid);
    const double e = rel_l2(kern.values, green.data.values);
    o.pass = o.pass && e <= 0.02;
    o.detail += "g=" + fmt("%.1f", g) + " rel L2 " + fmt("%.2e", e) + "; ";
  }
  o.detail += "bound 0.02";
  return o;
}

Outcome round_trip() {
  const TimeGrid grid(1024, 2.0 / 1024);
  const auto law = AttenuationLaw::causal_tied(1.5, kTau0);
  const auto m = m_matrix(law, grid);
  struct Case {
    const char* name;
    KernelMatrix k;
    std::function<std::vector<double>()> analytic;
  };
  const Vec3 nz = Vec3::UnitZ();
  const Vec3 xl(1.0, 0.0, 0.0);
  std::vector<Case> cases = {
      {"point", n_point_from(m, Pulse::delta()), [&] { return sample_spherical(kRef, Vec3(0.0, 0.6, 0.8), grid); }},
      {"planar", n_planar_from(m, Pulse::delta(), 1.0), [&] { return sample_planar(kRef, nz, 1.0, grid); }},
      {"line", n_line_from(m, Pulse::delta()), [&] { return sample_circular(kRef, nz, xl, grid); }},
  };
  Outcome o{true, ""};
  for (auto& c : cases) {
    const std::vector<double> q = c.analytic();
    const Eigen::VectorXd p = c.k.apply(Eigen::Map<const Eigen::VectorXd>(q.data(), q.size()));
    const Signal clean{"", c.name, grid, std::vector<double>(p.data(), p.data() + p.size())};
    const SvdFactor svd(c.k);
    const double e0 = rel_l2(svd.solve(clean, Regularizer::tikhonov(-1.0)).q.values, q);
    std::vector<double> errs;
    for (int seed = 1; seed <= 20; ++seed) {
      Signal noisy = clean;
      add_noise(noisy, 0.01, static_cast<std::uint64_t>(seed));
      const auto reg = discrepancy_select(svd, noisy, 0.01);
      errs.push_back(rel_l2(svd.solve(noisy, reg).q.values, q));
    }
    const double en = median(errs);
    o.pass = o.pass && e0 <= 0.02 && en <= 0.10;
    o.detail += std::string(c.name) + " noiseless " + fmt("%.2e", e0) + " noisy median " + fmt("%.3f", en) + "; ";
  }
  o.detail += "bounds 0.02 / 0.10";
  return o;
}

// Share of the squared error within two voxels of the ball surface, relative to |f|.
double surface_band_error(const VolumeGrid& v, const Phantom& ph) {
  const Ball& b = ph.balls.front();
  double band = 0.0, den = 0.0;
  for (int i = 0; i < v.m; ++i)
    for (int j = 0; j < v.m; ++j)
      for (int k = 0; k < v.m; ++k) {
        const Vec3 x = v.point(i, j, k);
        const double f = ph.value(x), e = v.values[v.index(i, j, k)] - f;
        den += f * f;
        if (std::abs((x - b.center).norm() - b.radius) < 2.0 * v.h()) band += e * e;
      }
  return std::sqrt(band / den);
}

Outcome reconstruction(const fs::path& out) {
  const TimeGrid grid(1024, 2.0 / 1024);
  const auto rule = lebedev(590);
  std::vector<Signal> analytic;
  for (const auto& d : rule.directions) analytic.push_back({"", "point", grid, sample_spherical(kOffCenter, d, grid)});
  const auto v0 = spherical_backprojection(rule, analytic, 0.4, 64);
  const auto e0 = volume_error(v0, kOffCenter);
  write_volume_binary(v0, (out / "recon_analytic.bin").string());
  write_volume_slice_csv(v0, 32, (out / "recon_analytic_slice.csv").string());

  const auto kern = n_point(AttenuationLaw::causal_tied(1.5, kTau0), Pulse::delta(), grid);
  const SvdFactor svd(kern);
  std::vector<Signal> recovered;
  for (const auto& s : analytic) {
    const Eigen::VectorXd p = kern.apply(s.vec());
    const Signal data{"", "point", grid, std::vector<double>(p.data(), p.data() + p.size())};
    recovered.push_back(svd.solve(data, Regularizer::tikhonov(-1.0)).q);
  }
  const auto v1 = spherical_backprojection(rule, recovered, 0.4, 64);
  const auto e1 = volume_error(v1, kOffCenter);
  write_volume_slice_csv(v1, 32, (out / "recon_dissipative_slice.csv").string());
  return {e0.rel_l2 <= 0.10 && e0.center_error <= 0.10 && e1.rel_l2 <= 0.15,
          "analytic rel L2 " + fmt("%.3f", e0.rel_l2) + " (<= 0.10; surface band alone " +
              fmt("%.3f", surface_band_error(v0, kOffCenter)) + "), center error " + fmt("%.3f", e0.center_error) +
              " (<= 0.10); dissipative rel L2 " + fmt("%.3f", e1.rel_l2) + " (<= 0.15), center error " +
              fmt("%.3f", e1.center_error)};
}

Outcome pulse_consistency() {
  const TimeGrid grid(1024, 2.0 / 1024);
  const auto law = AttenuationLaw::causal_tied(1.5, kTau0);
  const auto pulse = Pulse::raised_cosine(0.05);
  const Vec3 x(0.0, 0.6, 0.8);
  const auto m = m_matrix(law, grid);
  const auto delta = attenuated_point_data(n_point_from(m, Pulse::delta()), kRef, x);
  const auto shaped = attenuated_point_data(n_point_from(m, pulse), kRef, x);
  const double e = rel_l2(shaped.values, convolve_series(pulse, delta.values, grid));
  return {e <= 1e-3, "rel L2 " + fmt("%.2e", e) + " (<= 1e-3)"};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

Outcome determinism(const fs::path& out) {
  nlohmann::json j;
  std::ifstream(fs::path(TAT_SOURCE_DIR) / "configs" / "reference.json") >> j;
  j["detectors"]["sphere_points"] = 110;
  j["recon"]["m"] = 32;
  j["noise"] = 0.01;
  j["seed"] = 11;
  j["outputs"]["kernels"] = true;
  std::vector<fs::path> dirs = {out / "determinism_a", out / "determinism_b"};
  for (const auto& d : dirs) {
    fs::remove_all(d);
    j["outputs"]["directory"] = d.string();
    auto cfg = parse_config(j);
    cfg.raw["outputs"].erase("directory");  // the directory name is the only intended difference
    if (run_pipeline(cfg).exit_code != 0) return {false, "pipeline run failed"};
  }
  int files = 0, differ = 0;
  for (const auto& e : fs::recursive_directory_iterator(dirs[0])) {
    if (!e.is_regular_file()) continue;
    const auto rel = fs::relative(e.path(), dirs[0]);
    ++files;
    if (rel == "manifest.json") {
      auto a = nlohmann::json::parse(slurp(e.path())), b = nlohmann::json::parse(slurp(dirs[1] / rel));
      a.erase("timings");  // wall-clock timings are the one field expected to vary
      b.erase("timings");
      differ += a != b;
    } else {
      differ += slurp(e.path()) != slurp(dirs[1] / rel);
    }
  }
  return {files > 0 && differ == 0,
          std::to_string(files) + " files compared, " + std::to_string(differ) + " differ (manifest timings excluded)"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string out = "acceptance_out";
  std::vector<int> only;
  app.add_option("--out", out, "scratch and plot-data directory");
  app.add_option("--only", only, "run a subset of criteria");
  CLI11_PARSE(app, argc, argv);
  fs::create_directories(out);

  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    std::function<Outcome()> run;
  };
  const fs::path o = out;
  const std::vector<Criterion> all = {
      {1, "causality dichotomy", 10, causality_dichotomy},
      {2, "low-frequency power-law agreement", 1, [&] { return power_law_agreement(o); }},
      {3, "dissipation-free degeneration", 30, degeneration},
      {4, "kernel vs Green superposition", 300, model_equivalence},
      {5, "round-trip inversion", 600, round_trip},
      {6, "spherical reconstruction", 900, [&] { return reconstruction(o); }},
      {7, "pulse consistency", 60, pulse_consistency},
      {8, "determinism", 600, [&] { return determinism(o); }},
  };
  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double s = seconds_since(t0);
    const bool in_time = s < c.budget;
    const bool ok = r.pass && in_time;
    failed += !ok;
    std::printf("criterion %d %s: %s | %s | %.2f s (budget %.0f s)\n", c.id, c.name, ok ? "PASS" : "FAIL",
                r.detail.c_str(), s, c.budget);
    std::fflush(stdout);
  }
  return failed;
}
