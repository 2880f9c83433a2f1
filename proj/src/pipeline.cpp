#include "tat/pipeline.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "tat/errors.hpp"
#include "tat/inverse.hpp"

namespace tat {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string det_name(int d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "det_%04d", d);
  return buf;
}

std::uint64_t detector_seed(std::uint64_t seed, int d) {
  // splitmix64 step so neighbouring detectors get unrelated streams
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(d + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void write_series_csv(const std::string& path, const TimeGrid& g, const std::vector<std::pair<std::string, const std::vector<double>*>>& cols) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot write " + path);
  std::fputs("t", f);
  for (const auto& c : cols) std::fprintf(f, ",%s", c.first.c_str());
  std::fputc('\n', f);
  for (int i = 0; i < g.n; ++i) {
    std::fprintf(f, "%.17g", g.t(i));
    for (const auto& c : cols) std::fprintf(f, ",%.17g", (*c.second)[i]);
    std::fputc('\n', f);
  }
  std::fclose(f);
}

Signal analytic_projection(const ExperimentConfig& cfg, int d) {
  const auto& det = cfg.detectors;
  Signal s;
  s.detector_id = det_name(d);
  s.geometry = to_string(det.kind);
  s.grid = cfg.grid;
  switch (det.kind) {
    case DetectorKind::PointSphere: s.values = sample_spherical(cfg.phantom, det.position(d), cfg.grid); break;
    case DetectorKind::PlanarTangent: s.values = sample_planar(cfg.phantom, det.directions[d], det.r0, cfg.grid); break;
    case DetectorKind::LineArray: s.values = sample_circular(cfg.phantom, det.normal, det.position(d), cfg.grid); break;
  }
  return s;
}

Signal forward_data(const ExperimentConfig& cfg, const KernelMatrix& k, int d) {
  const auto& det = cfg.detectors;
  Signal s;
  switch (det.kind) {
    case DetectorKind::PointSphere: s = attenuated_point_data(k, cfg.phantom, det.position(d)); break;
    case DetectorKind::PlanarTangent: s = attenuated_planar_data(k, cfg.phantom, det.directions[d]); break;
    case DetectorKind::LineArray: s = attenuated_line_data(k, cfg.phantom, det.normal, det.position(d)); break;
  }
  s.detector_id = det_name(d);
  return s;
}

}  // namespace

KernelMatrix detector_kernel(const ExperimentConfig& cfg, const BuildOptions& opt) {
  switch (cfg.detectors.kind) {
    case DetectorKind::PointSphere: return n_point(cfg.law, cfg.pulse, cfg.grid, opt);
    case DetectorKind::PlanarTangent: return n_planar(cfg.law, cfg.pulse, cfg.grid, cfg.detectors.r0, opt);
    case DetectorKind::LineArray: return n_line(cfg.law, cfg.pulse, cfg.grid, opt);
  }
  throw ConfigError("unknown detector kind");
}

RunResult run_pipeline(const ExperimentConfig& cfg, bool write_files) {
  RunResult r;
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  const std::vector<std::string> order = {"causality", "kernel", "forward", "invert", "recon"};
  std::set<std::string> want(cfg.stages.begin(), cfg.stages.end());
  // dependencies: recon needs invert needs forward needs kernel
  if (want.count("recon")) want.insert("invert");
  if (want.count("invert")) want.insert("forward");
  if (want.count("forward")) want.insert("kernel");

  const fs::path out = cfg.outputs.directory;
  if (write_files) {
    fs::create_directories(out);
    if (want.count("forward")) fs::create_directories(out / "data");
    if (want.count("invert")) fs::create_directories(out / "recovered");
  }
  const bool csv = cfg.outputs.csv, bin = cfg.outputs.binary;

  json& m = r.manifest;
  m["tool"] = "tat";
  m["version"] = tool_version;
  m["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
               std::to_string(EIGEN_MINOR_VERSION);
  m["config_hash"] = hex64(config_hash(cfg.raw));
  m["config"] = cfg.raw;
  m["law"] = cfg.law.describe();
  m["pulse"] = cfg.pulse.describe();
  m["grid"] = {{"n", cfg.grid.n}, {"dt", cfg.grid.dt}};
  m["detectors"] = {{"kind", to_string(cfg.detectors.kind)}, {"count", cfg.detectors.size()}};
  m["stages"] = json::array();
  m["timings"] = json::object();
  m["diagnostics"] = json::object();
  m["errors"] = json::array();

  std::vector<std::pair<std::string, double>> summary;
  std::unique_ptr<SvdFactor> svd;
  const int nd = cfg.detectors.size();

  for (const auto& stage : order) {
    if (!want.count(stage)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    json diag;
    try {
      if (stage == "causality") {
        const TimeGrid ref(4096, reference_dt(cfg.law, cfg.detectors.r0));
        const auto rep = causality_diagnostic(cfg.law, cfg.detectors.r0, ref);
        r.causality = rep;
        diag = {{"distance", cfg.detectors.r0}, {"n", rep.n},           {"dt", rep.dt},
                {"neg_fraction", rep.neg_fraction}, {"max_imag_ratio", rep.max_imag_ratio},
                {"captured_energy", rep.captured_energy}, {"pass", rep.pass}};
        summary.push_back({"causality.neg_fraction", rep.neg_fraction});
        if (write_files) {
          std::FILE* f = std::fopen((out / "causality.csv").c_str(), "w");
          std::fprintf(f, "law,gamma,alpha0,tau0,distance,n,dt,neg_fraction,max_imag_ratio,captured_energy,pass\n");
          std::fprintf(f, "%s,%.17g,%.17g,%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g,%d\n", to_string(cfg.law.kind),
                       cfg.law.gamma, cfg.law.alpha0, cfg.law.tau0, cfg.detectors.r0, rep.n, rep.dt, rep.neg_fraction,
                       rep.max_imag_ratio, rep.captured_energy, rep.pass ? 1 : 0);
          std::fclose(f);
          if (cfg.law.kind == LawKind::CausalLaw) {
            f = std::fopen((out / "alpha_curves.csv").c_str(), "w");
            std::fprintf(f, "tau0_omega,re_alpha_causal,tau0_omega_pow_gamma\n");
            for (const auto& row : alpha_curves(cfg.law.gamma, cfg.law.tau0, 121))
              std::fprintf(f, "%.17g,%.17g,%.17g\n", row.tau_omega, row.re_causal, row.power_curve);
            std::fclose(f);
          }
        }
      } else if (stage == "kernel") {
        r.kernel = detector_kernel(cfg);
        diag = {{"kind", to_string(r.kernel->kind)},
                {"max_leak", r.kernel->max_leak},
                {"max_imag_ratio", r.kernel->max_imag_ratio},
                {"support_ok", r.kernel->support_ok()}};
        if (write_files && cfg.outputs.kernels) {
          if (bin) write_kernel_binary(*r.kernel, (out / "kernel.bin").string());
          if (csv) write_kernel_csv(*r.kernel, (out / "kernel.csv").string());
        }
      } else if (stage == "forward") {
        r.analytic.resize(nd);
        r.data.resize(nd);
        for (int d = 0; d < nd; ++d) {
          r.analytic[d] = analytic_projection(cfg, d);
          r.data[d] = forward_data(cfg, *r.kernel, d);
          if (cfg.noise > 0.0) add_noise(r.data[d], cfg.noise, detector_seed(cfg.seed, d));
        }
        diag = {{"detectors", nd}, {"noise", cfg.noise}, {"seed", cfg.seed}};
        if (write_files && csv)
          for (int d = 0; d < nd; ++d)
            write_series_csv((out / "data" / (det_name(d) + ".csv")).string(), cfg.grid,
                             {{"pressure", &r.data[d].values}});
      } else if (stage == "invert") {
        svd = std::make_unique<SvdFactor>(*r.kernel);
        r.recovered.resize(nd);
        r.lambdas.resize(nd);
        std::vector<double> errs(nd), resid(nd);
        const bool pick = cfg.noise > 0.0 && cfg.inverse.discrepancy && cfg.inverse.reg.kind == RegKind::Tikhonov;
        for (int d = 0; d < nd; ++d) {
          const Regularizer reg = pick ? discrepancy_select(*svd, r.data[d], cfg.noise) : cfg.inverse.reg;
          auto sol = svd->solve(r.data[d], reg);
          r.lambdas[d] = sol.reg.lambda;
          resid[d] = sol.residual_norm;
          r.recovered[d] = std::move(sol.q);
          r.recovered[d].detector_id = det_name(d);
          errs[d] = rel_l2(r.recovered[d].values, r.analytic[d].values);
        }
        auto med = [](std::vector<double> v) {
          std::sort(v.begin(), v.end());
          return v.empty() ? 0.0 : v[v.size() / 2];
        };
        diag = {{"sigma_max", svd->sigma_max()},
                {"regularizer", cfg.inverse.reg.describe()},
                {"discrepancy", pick},
                {"median_lambda", med(r.lambdas)},
                {"median_residual", med(resid)},
                {"median_rel_l2", med(errs)},
                {"max_rel_l2", nd ? *std::max_element(errs.begin(), errs.end()) : 0.0}};
        summary.push_back({"invert.median_rel_l2", med(errs)});
        summary.push_back({"invert.max_rel_l2", diag["max_rel_l2"].get<double>()});
        if (write_files && csv) {
          for (int d = 0; d < nd; ++d)
            write_series_csv((out / "recovered" / (det_name(d) + ".csv")).string(), cfg.grid,
                             {{"recovered", &r.recovered[d].values}, {"analytic", &r.analytic[d].values}});
          std::FILE* f = std::fopen((out / "inversion.csv").c_str(), "w");
          std::fprintf(f, "detector,lambda,residual_norm,rel_l2\n");
          for (int d = 0; d < nd; ++d)
            std::fprintf(f, "%s,%.17g,%.17g,%.17g\n", det_name(d).c_str(), r.lambdas[d], resid[d], errs[d]);
          std::fclose(f);
          if (cfg.detectors.kind == DetectorKind::PlanarTangent) {
            f = std::fopen((out / "radon_records.csv").c_str(), "w");
            std::fprintf(f, "nx,ny,nz,offset,value\n");
            for (const auto& rec : planar_projection_recovery(cfg.detectors.directions, r.recovered, cfg.detectors.r0))
              std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g\n", rec.normal.x(), rec.normal.y(), rec.normal.z(),
                           rec.offset, rec.value);
            std::fclose(f);
          }
        }
      } else if (stage == "recon") {
        const auto rule = lebedev(cfg.sphere_points);
        r.volume = spherical_backprojection(rule, r.recovered, cfg.recon.a, cfg.recon.m);
        const auto err = volume_error(*r.volume, cfg.phantom);
        diag = {{"a", cfg.recon.a},
                {"m", cfg.recon.m},
                {"rel_l2", err.rel_l2},
                {"center_value", err.center_value},
                {"center_error", err.center_error},
                {"outside_fraction", err.outside_fraction}};
        summary.push_back({"recon.rel_l2", err.rel_l2});
        summary.push_back({"recon.center_error", err.center_error});
        if (write_files) {
          if (bin) write_volume_binary(*r.volume, (out / "volume.bin").string());
          if (csv) write_volume_slice_csv(*r.volume, cfg.recon.m / 2, (out / "volume_slice.csv").string());
        }
      }
      m["stages"].push_back({{"name", stage}, {"status", "ok"}});
    } catch (const ConfigError& e) {
      m["stages"].push_back({{"name", stage}, {"status", "failed"}});
      m["errors"].push_back({{"stage", stage}, {"type", "config"}, {"message", e.what()}});
      r.exit_code = 2;
    } catch (const NumericalGuardError& e) {
      m["stages"].push_back({{"name", stage}, {"status", "failed"}});
      m["errors"].push_back({{"stage", stage}, {"type", "numerical_guard"}, {"message", e.what()}});
      r.exit_code = 3;
    } catch (const std::domain_error& e) {
      m["stages"].push_back({{"name", stage}, {"status", "failed"}});
      m["errors"].push_back({{"stage", stage}, {"type", "numerical_guard"}, {"message", e.what()}});
      r.exit_code = 3;
    }
    m["timings"][stage] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!diag.is_null()) m["diagnostics"][stage] = diag;
    if (r.exit_code != 0) break;
  }

  if (write_files) {
    if (!summary.empty() && csv) {
      std::FILE* f = std::fopen((out / "error_summary.csv").c_str(), "w");
      std::fprintf(f, "quantity,value\n");
      for (const auto& [k, v] : summary) std::fprintf(f, "%s,%.17g\n", k.c_str(), v);
      std::fclose(f);
    }
    std::ofstream(out / "manifest.json") << m.dump(2) << "\n";
  }
  return r;
}

}  // namespace tat
