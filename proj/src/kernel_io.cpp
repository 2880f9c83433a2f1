#include <cstdint>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tat/errors.hpp"
#include "tat/kernels.hpp"

namespace tat {

namespace {

nlohmann::json header_of(const KernelMatrix& k) {
  return {{"kind", to_string(k.kind)},
          {"n", k.grid.n},
          {"dt", k.grid.dt},
          {"law", to_string(k.law.kind)},
          {"gamma", k.law.gamma},
          {"alpha0", k.law.alpha0},
          {"tau0", k.law.tau0},
          {"c0", k.law.c0},
          {"pulse", to_string(k.pulse.kind)},
          {"t1", k.pulse.t1},
          {"r0", k.r0},
          {"lead", k.lead},
          {"causal_mask", k.causal_mask},
          {"max_leak", k.max_leak},
          {"max_imag_ratio", k.max_imag_ratio},
          {"weights", k.weights}};
}

KernelMatrix from_header(const nlohmann::json& h) {
  KernelMatrix k;
  k.kind = kernel_kind_from_string(h.at("kind").get<std::string>());
  k.grid = TimeGrid(h.at("n").get<int>(), h.at("dt").get<double>());
  k.law.kind = law_kind_from_string(h.at("law").get<std::string>());
  k.law.gamma = h.at("gamma").get<double>();
  k.law.alpha0 = h.at("alpha0").get<double>();
  k.law.tau0 = h.at("tau0").get<double>();
  k.law.c0 = h.at("c0").get<double>();
  k.pulse.kind = pulse_kind_from_string(h.at("pulse").get<std::string>());
  k.pulse.t1 = h.at("t1").get<double>();
  k.r0 = h.at("r0").get<double>();
  k.lead = h.at("lead").get<int>();
  k.causal_mask = h.at("causal_mask").get<bool>();
  k.max_leak = h.at("max_leak").get<double>();
  k.max_imag_ratio = h.at("max_imag_ratio").get<double>();
  k.weights = h.at("weights").get<std::vector<double>>();
  return k;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_kernel_csv(const KernelMatrix& k, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  f << "# " << header_of(k).dump() << "\n";
  const int n = k.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k.values.cols(); ++j) {
      if (j) f << ',';
      f << fmt17(k.values(i, j));
    }
    f << '\n';
  }
}

KernelMatrix read_kernel_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read " + path);
  std::string line;
  std::getline(f, line);
  if (line.rfind("# ", 0) != 0) throw ConfigError("kernel csv: missing header in " + path);
  KernelMatrix k = from_header(nlohmann::json::parse(line.substr(2)));
  const int n = k.grid.n;
  k.values.resize(n, n);
  for (int i = 0; i < n; ++i) {
    if (!std::getline(f, line)) throw ConfigError("kernel csv: truncated " + path);
    std::istringstream is(line);
    std::string cell;
    for (int j = 0; j < n; ++j) {
      if (!std::getline(is, cell, ',')) throw ConfigError("kernel csv: short row in " + path);
      k.values(i, j) = std::strtod(cell.c_str(), nullptr);
    }
  }
  return k;
}

void write_kernel_binary(const KernelMatrix& k, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  const std::string h = header_of(k).dump();
  const std::uint64_t len = h.size();
  f.write("TATK", 4);
  f.write(reinterpret_cast<const char*>(&len), sizeof len);
  f.write(h.data(), static_cast<std::streamsize>(len));
  // Row-major payload.
  const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = k.values;
  f.write(reinterpret_cast<const char*>(rm.data()), static_cast<std::streamsize>(rm.size() * sizeof(double)));
}

KernelMatrix read_kernel_binary(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read " + path);
  char magic[4];
  f.read(magic, 4);
  if (std::string(magic, 4) != "TATK") throw ConfigError("kernel binary: bad magic in " + path);
  std::uint64_t len = 0;
  f.read(reinterpret_cast<char*>(&len), sizeof len);
  std::string h(len, '\0');
  f.read(h.data(), static_cast<std::streamsize>(len));
  KernelMatrix k = from_header(nlohmann::json::parse(h));
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm(k.grid.n, k.grid.n);
  f.read(reinterpret_cast<char*>(rm.data()), static_cast<std::streamsize>(rm.size() * sizeof(double)));
  if (!f) throw ConfigError("kernel binary: truncated " + path);
  k.values = rm;
  return k;
}

}  // namespace tat
