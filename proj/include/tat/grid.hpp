#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace tat {

struct TimeGrid {
  int n = 0;
  double dt = 0.0;

  TimeGrid() = default;
  TimeGrid(int n_, double dt_) : n(n_), dt(dt_) {
    if (n < 2) throw std::invalid_argument("TimeGrid: n must be >= 2");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("TimeGrid: dt must be > 0");
  }

  double t(int i) const { return i * dt; }
  double span() const { return (n - 1) * dt; }
  std::vector<double> times() const {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = t(i);
    return v;
  }
  bool operator==(const TimeGrid& o) const { return n == o.n && dt == o.dt; }
};

// Frequencies in DFT layout: index l maps to l for l < n/2 and l - n otherwise.
struct FrequencyGrid {
  int n = 0;
  double domega = 0.0;

  FrequencyGrid() = default;
  FrequencyGrid(int n_, double dt) : n(n_), domega(2.0 * std::numbers::pi / (n_ * dt)) {
    if (n < 2 || (n & (n - 1)) != 0) throw std::invalid_argument("FrequencyGrid: n must be a power of two");
  }

  double omega(int l) const { return (l < n / 2 ? l : l - n) * domega; }
};

inline bool is_pow2(int n) { return n >= 2 && (n & (n - 1)) == 0; }

}  // namespace tat
