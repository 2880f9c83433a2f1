#pragma once

#include <cmath>
#include <numbers>

namespace tat::detail {

inline double trigamma(double z) {
  double acc = 0.0;
  while (z < 10.0) {
    acc += 1.0 / (z * z);
    z += 1.0;
  }
  const double z2 = z * z;
  return acc + 1.0 / z + 1.0 / (2.0 * z2) +
         1.0 / (6.0 * z2 * z) * (1.0 - 1.0 / (5.0 * z2) * (1.0 - 5.0 / (7.0 * z2) * (1.0 - 7.0 / (5.0 * z2))));
}

inline double sinc2(double x) {
  if (x == 0.0) return 1.0;
  const double s = std::sin(x) / x;
  return s * s;
}

// Weight of alias shell k for base frequency w0 under the hat projection sinc^2(w dt / 2). Shells
// |k| <= K carry their own sinc^2; k = +-(K+1) carries the closed-form sum of every shell beyond K on
// that side (sin^2 x / pi^2 times a trigamma value), so the weights over all rows sum to one.
inline double shell_weight(double w0, int k, int K, double dt) {
  using std::numbers::pi;
  const double x = w0 * dt / 2.0;
  if (k == K + 1) return std::sin(x) * std::sin(x) / (pi * pi) * trigamma(K + 1 + x / pi);
  if (k == -(K + 1)) return std::sin(x) * std::sin(x) / (pi * pi) * trigamma(K + 1 - x / pi);
  return sinc2((w0 + 2.0 * pi * k / dt) * dt / 2.0);
}

}  // namespace tat::detail
