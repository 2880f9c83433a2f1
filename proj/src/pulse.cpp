#include "tat/pulse.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tat/errors.hpp"

namespace tat {

Pulse Pulse::raised_cosine(double t1) {
  Pulse p{PulseKind::RaisedCosine, t1};
  p.validate();
  return p;
}

void Pulse::validate() const {
  if (kind == PulseKind::RaisedCosine && (!(t1 > 0.0) || !std::isfinite(t1)))
    throw ConfigError("pulse: t1 must be > 0");
}

double Pulse::value(double t) const {
  if (kind == PulseKind::Delta) return 0.0;
  if (t <= 0.0 || t >= t1) return 0.0;
  return (1.0 - std::cos(2.0 * std::numbers::pi * t / t1)) / t1;
}

std::string Pulse::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << to_string(kind);
  if (kind == PulseKind::RaisedCosine) os << " t1=" << t1;
  return os.str();
}

const char* to_string(PulseKind k) { return k == PulseKind::Delta ? "Delta" : "RaisedCosine"; }

PulseKind pulse_kind_from_string(const std::string& s) {
  if (s == "Delta" || s == "delta") return PulseKind::Delta;
  if (s == "RaisedCosine" || s == "raised_cosine") return PulseKind::RaisedCosine;
  throw ConfigError("unknown pulse kind: " + s);
}

std::vector<double> convolve_series(const Pulse& p, const std::vector<double>& f, const TimeGrid& grid) {
  if (p.kind == PulseKind::Delta) return f;
  const int n = static_cast<int>(f.size());
  std::vector<double> taps;
  for (int m = 0; m < n && m * grid.dt < p.t1; ++m) taps.push_back(grid.dt * p.value(m * grid.dt));
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    const int mmax = std::min<int>(i, static_cast<int>(taps.size()) - 1);
    for (int m = 0; m <= mmax; ++m) s += taps[m] * f[i - m];
    out[i] = s;
  }
  return out;
}

}  // namespace tat
