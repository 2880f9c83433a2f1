#pragma once

#include <cmath>
#include <numbers>

#include "tat/attenuation.hpp"

namespace oracle {

// Hat-projected M(t_i, t'_j) by direct integration over omega:
// (1/pi) Re int_0^W (w / k) e^{i k t'} sinc^2(w dt / 2) e^{-i w t} dw, composite Simpson,
// W where e^{-Re alpha* t'} sinc^2 falls below 1e-15.
inline double m_entry(const tat::AttenuationLaw& law, const tat::TimeGrid& g, int i, int j) {
  const double t = g.t(i), tp = g.t(j), dt = g.dt;
  auto f = [&](double w) {
    const double x = 0.5 * w * dt;
    const double s2 = x == 0.0 ? 1.0 : std::pow(std::sin(x) / x, 2);
    const tat::cplx k = tat::wavenumber(law, w);
    const tat::cplx wk = tat::omega_over_k(law, w);
    return (wk * std::exp(tat::cplx(0.0, 1.0) * k * tp) * s2 * std::exp(tat::cplx(0.0, -w * t))).real();
  };
  double W = 10.0;
  while (std::exp(-tat::alpha_star(law, W).real() * tp) * 4.0 / std::pow(W * dt, 2) > 1e-15 && W < 1e7) W *= 1.25;
  const double h = 0.02;
  const long m = 2 * static_cast<long>(std::ceil(W / h / 2.0));
  double s = f(0.0) + f(m * h);
  for (long l = 1; l < m; ++l) s += (l % 2 ? 4.0 : 2.0) * f(l * h);
  return s * h / 3.0 / std::numbers::pi;
}

}  // namespace oracle
