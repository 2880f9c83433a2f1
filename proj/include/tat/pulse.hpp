#pragma once

#include <string>
#include <vector>

#include "tat/grid.hpp"

namespace tat {

enum class PulseKind { Delta, RaisedCosine };

struct Pulse {
  PulseKind kind = PulseKind::Delta;
  double t1 = 0.0;

  static Pulse delta() { return {}; }
  static Pulse raised_cosine(double t1);

  void validate() const;
  // I(t) = (1 - cos(2 pi t / t1)) / t1 on [0, t1], zero elsewhere. Delta has no pointwise value.
  double value(double t) const;
  std::string describe() const;
};

const char* to_string(PulseKind k);
PulseKind pulse_kind_from_string(const std::string& s);

// Discrete convolution (I * f)(t_i) = sum_{k <= i} dt I(t_i - t_k) f_k. I vanishes at both ends of its
// support, so this rectangle sum coincides with the trapezoid rule.
std::vector<double> convolve_series(const Pulse& p, const std::vector<double>& f, const TimeGrid& grid);

}  // namespace tat
