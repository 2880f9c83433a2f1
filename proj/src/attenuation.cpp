#include "tat/attenuation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tat/errors.hpp"
#include "tat/fft.hpp"
#include "tat/quadrature.hpp"

namespace tat {

using std::numbers::pi;

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return cache.emplace(n, std::move(r)).first->second;
}

AttenuationLaw AttenuationLaw::none() { return {}; }

AttenuationLaw AttenuationLaw::power(double gamma, double alpha0) {
  AttenuationLaw l{LawKind::PowerLaw, gamma, alpha0, 0.0, 1.0};
  l.validate();
  return l;
}

AttenuationLaw AttenuationLaw::causal(double gamma, double alpha0, double tau0) {
  AttenuationLaw l{LawKind::CausalLaw, gamma, alpha0, tau0, 1.0};
  l.validate();
  return l;
}

AttenuationLaw AttenuationLaw::causal_tied(double gamma, double tau0) {
  return causal(gamma, 2.0 * tau0 / std::abs(std::cos(pi * gamma / 2.0)), tau0);
}

AttenuationLaw AttenuationLaw::power_matched(double gamma, double tau0) {
  return power(gamma, std::pow(tau0, gamma));
}

void AttenuationLaw::validate() const {
  if (!(c0 > 0.0)) throw ConfigError("attenuation law: c0 must be > 0");
  if (kind == LawKind::None) return;
  if (!(gamma > 1.0 && gamma <= 2.0)) throw ConfigError("attenuation law: gamma must lie in (1, 2]");
  if (!(alpha0 >= 0.0) || !std::isfinite(alpha0)) throw ConfigError("attenuation law: alpha0 must be >= 0");
  if (kind == LawKind::CausalLaw && (!(tau0 > 0.0) || !std::isfinite(tau0)))
    throw ConfigError("attenuation law: tau0 must be > 0");
}

std::string AttenuationLaw::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << to_string(kind) << " gamma=" << gamma << " alpha0=" << alpha0 << " tau0=" << tau0 << " c0=" << c0;
  return os.str();
}

const char* to_string(LawKind k) {
  switch (k) {
    case LawKind::None: return "None";
    case LawKind::PowerLaw: return "PowerLaw";
    case LawKind::CausalLaw: return "CausalLaw";
  }
  return "?";
}

LawKind law_kind_from_string(const std::string& s) {
  if (s == "None" || s == "none") return LawKind::None;
  if (s == "PowerLaw" || s == "power") return LawKind::PowerLaw;
  if (s == "CausalLaw" || s == "causal") return LawKind::CausalLaw;
  throw ConfigError("unknown attenuation law kind: " + s);
}

cplx complex_power(cplx w, double gamma) {
  if (w == cplx(0.0, 0.0)) throw std::domain_error("complex_power: w = 0");
  if (w.imag() == 0.0 && w.real() < 0.0) throw std::domain_error("complex_power: w on the branch cut");
  return std::exp(gamma * cplx(std::log(std::abs(w)), std::arg(w)));
}

cplx alpha_star(const AttenuationLaw& law, double omega) {
  if (law.kind == LawKind::None || omega == 0.0) return 0.0;
  const cplx miw(0.0, -omega);
  if (law.kind == LawKind::PowerLaw) return law.alpha0 / std::cos(pi * law.gamma / 2.0) * complex_power(miw, law.gamma);
  cplx s = std::sqrt(1.0 + complex_power(law.tau0 * miw, law.gamma - 1.0));
  if (s.real() < 0.0) s = -s;
  return law.alpha0 * miw / (law.c0 * s);
}

cplx wavenumber(const AttenuationLaw& law, double omega) {
  return cplx(0.0, 1.0) * alpha_star(law, omega) + omega / law.c0;
}

cplx omega_over_k(const AttenuationLaw& law, double omega) {
  if (omega == 0.0) {
    if (law.kind == LawKind::CausalLaw) return law.c0 / (1.0 + law.alpha0);
    return law.c0;
  }
  return omega / wavenumber(law, omega);
}

cplx k1_hat(const AttenuationLaw& law, double omega) {
  const cplx r = omega_over_k(law, omega) / law.c0;
  return r * r / std::sqrt(2.0 * pi);
}

namespace {

// (1/pi) int_0^inf exp(-2 Re alpha*(w) x) dw, on doubling intervals with Gauss-Legendre panels.
double parseval_energy(const AttenuationLaw& law, double x, double w_scale) {
  const auto& g = gauss_legendre(32);
  auto f = [&](double w) { return std::exp(-2.0 * alpha_star(law, w).real() * x); };
  double total = 0.0;
  double a = 0.0, b = w_scale * 1e-3;
  for (int panel = 0; panel < 200; ++panel) {
    double s = 0.0;
    for (size_t k = 0; k < g.x.size(); ++k) s += g.w[k] * f(0.5 * (a + b) + 0.5 * (b - a) * g.x[k]);
    s *= 0.5 * (b - a);
    total += s;
    if (panel > 10 && s < 1e-15 * total && f(b) < 1e-300) break;
    if (panel > 10 && s < 1e-16 * total) break;
    a = b;
    b *= 2.0;
  }
  return total / pi;
}

}  // namespace

CausalityReport causality_diagnostic(const AttenuationLaw& law, double distance, const TimeGrid& grid) {
  law.validate();
  if (!(distance > 0.0)) throw ConfigError("causality_diagnostic: distance must be > 0");
  FrequencyGrid fg(grid.n, grid.dt);
  const int n = grid.n;
  std::vector<cplx> buf(n);
  double discrete = 0.0;
  for (int l = 0; l < n; ++l) {
    const cplx e = std::exp(-alpha_star(law, fg.omega(l)) * distance);
    buf[l] = e / std::sqrt(2.0 * pi);
    discrete += std::norm(e);
  }
  discrete *= fg.domega / (2.0 * pi);
  // f(t_m) = (1/sqrt(2 pi)) sum f^(w) e^{-i w t} dw; negative m wraps to the upper half.
  Dft dft(n, -1);
  dft.execute(buf);
  double neg = 0.0, tot = 0.0, maxre = 0.0, maxim = 0.0;
  for (int m = 0; m < n; ++m) {
    const cplx v = buf[m] * fg.domega / std::sqrt(2.0 * pi);
    const double e = std::norm(v.real());
    tot += e;
    if (m >= n / 2) neg += e;
    maxre = std::max(maxre, std::abs(v.real()));
    maxim = std::max(maxim, std::abs(v.imag()));
  }
  CausalityReport r;
  r.n = n;
  r.dt = grid.dt;
  r.neg_fraction = tot > 0.0 ? neg / tot : 0.0;
  r.max_imag_ratio = maxre > 0.0 ? maxim / maxre : 0.0;
  if (law.kind != LawKind::None) {
    const double analytic = parseval_energy(law, distance, pi / grid.dt);
    r.captured_energy = discrete / analytic;
    r.resolved = r.captured_energy >= 0.99;
  }
  r.pass = r.resolved && r.neg_fraction <= tol_causality;
  if (!r.resolved) {
    std::ostringstream os;
    os << "causality_diagnostic: grid captures only " << r.captured_energy << " of the kernel energy";
    throw NumericalGuardError(os.str());
  }
  return r;
}

double reference_dt(const AttenuationLaw& law, double distance, double decay) {
  law.validate();
  if (law.kind == LawKind::None) return 1e-3;
  auto g = [&](double lw) { return alpha_star(law, std::exp(lw)).real() * distance - decay; };
  double lo = std::log(1e-12), hi = std::log(1e15);
  if (g(hi) < 0.0) throw NumericalGuardError("reference_dt: attenuation too weak to resolve");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return pi / std::exp(0.5 * (lo + hi));
}

std::vector<AlphaCurveRow> alpha_curves(double gamma, double tau0, int points, double lo, double hi) {
  const auto law = AttenuationLaw::causal_tied(gamma, tau0);
  std::vector<AlphaCurveRow> rows;
  rows.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double s = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / std::max(1, points - 1));
    rows.push_back({s, alpha_star(law, s / tau0).real(), std::pow(s, gamma)});
  }
  return rows;
}

}  // namespace tat
