#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "tat/attenuation.hpp"
#include "tat/grid.hpp"
#include "tat/inverse.hpp"
#include "tat/projections.hpp"
#include "tat/pulse.hpp"

namespace tat {

struct InverseConfig {
  Regularizer reg;
  bool discrepancy = true;  // select lambda by the discrepancy principle when noise > 0
};

struct ReconConfig {
  double a = 0.4;
  int m = 64;
};

struct OutputConfig {
  std::string directory = "out";
  bool csv = true;
  bool binary = true;
  bool kernels = false;  // write kernel matrices (large)
};

struct ExperimentConfig {
  std::vector<std::string> stages;  // subset of causality, kernel, forward, invert, recon
  AttenuationLaw law;
  Pulse pulse;
  TimeGrid grid;
  Phantom phantom;
  DetectorSet detectors;
  int sphere_points = 0;  // Lebedev rule size when the point detectors come from a sphere rule
  InverseConfig inverse;
  ReconConfig recon;
  OutputConfig outputs;
  std::uint64_t seed = 0;
  double noise = 0.0;  // relative to the rms of each data series
  int threads = 0;     // 0 keeps the OpenMP default

  nlohmann::json raw;  // normalized config, as echoed into the manifest
};

// Parses and validates; throws ConfigError on unknown keys, bad ranges, or inconsistent geometry.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

// T = 2 (r0 + max radius) / c0 + 5 tau0 when the grid block omits T and dt.
double default_window(const AttenuationLaw& law, const Phantom& ph, double r0);

// 64-bit FNV-1a of the canonical JSON dump.
std::uint64_t config_hash(const nlohmann::json& j);

}  // namespace tat
