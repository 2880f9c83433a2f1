#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "tat/config.hpp"
#include "tat/forward.hpp"
#include "tat/kernels.hpp"
#include "tat/recon.hpp"

namespace tat {

inline constexpr const char* tool_version = "1.0.0";

struct RunResult {
  nlohmann::json manifest;
  int exit_code = 0;  // 0 ok, 2 config error, 3 numerical guard
  std::optional<CausalityReport> causality;
  std::optional<KernelMatrix> kernel;
  std::vector<Signal> analytic;   // projections of the phantom per detector
  std::vector<Signal> data;       // pressures per detector (noisy when noise > 0)
  std::vector<Signal> recovered;  // inverted projections per detector
  std::vector<double> lambdas;
  std::optional<VolumeGrid> volume;
};

// Runs the requested stages (and whatever they depend on) in the order causality, kernel, forward, invert,
// recon. Writes into cfg.outputs.directory: manifest.json always; causality.csv and alpha_curves.csv; kernel.bin /
// kernel.csv when outputs.kernels; data/ and recovered/ per-detector CSVs; volume.bin and volume_slice.csv;
// error_summary.csv. Stage failures are recorded in the manifest and reflected in exit_code instead of
// propagating.
RunResult run_pipeline(const ExperimentConfig& cfg, bool write_files = true);

// Kernel for the configured detector kind.
KernelMatrix detector_kernel(const ExperimentConfig& cfg, const BuildOptions& opt = {});

}  // namespace tat
