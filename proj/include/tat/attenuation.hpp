#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tat/grid.hpp"

namespace tat {

using cplx = std::complex<double>;

enum class LawKind { None, PowerLaw, CausalLaw };

struct AttenuationLaw {
  LawKind kind = LawKind::None;
  double gamma = 0.0;
  double alpha0 = 0.0;
  double tau0 = 0.0;
  double c0 = 1.0;

  static AttenuationLaw none();
  static AttenuationLaw power(double gamma, double alpha0);
  static AttenuationLaw causal(double gamma, double alpha0, double tau0);
  // alpha0 = 2 c0 tau0 / |cos(pi gamma / 2)|, so that Re alpha* ~ |tau0 omega|^gamma at low frequency.
  static AttenuationLaw causal_tied(double gamma, double tau0);
  // Power law whose real part |omega|^gamma alpha0 equals |tau0 omega|^gamma.
  static AttenuationLaw power_matched(double gamma, double tau0);

  void validate() const;
  std::string describe() const;
};

const char* to_string(LawKind k);
LawKind law_kind_from_string(const std::string& s);

// exp(gamma (log r + i phi)), phi in (-pi, pi). Throws std::domain_error on the cut or at 0.
cplx complex_power(cplx w, double gamma);

cplx alpha_star(const AttenuationLaw& law, double omega);
cplx wavenumber(const AttenuationLaw& law, double omega);
// omega / k(omega), with the continuity limit at omega = 0.
cplx omega_over_k(const AttenuationLaw& law, double omega);
cplx k1_hat(const AttenuationLaw& law, double omega);

struct CausalityReport {
  double neg_fraction = 0.0;
  double max_imag_ratio = 0.0;
  double captured_energy = 1.0;  // discrete energy / analytic Parseval energy
  bool resolved = true;
  bool pass = false;
  int n = 0;
  double dt = 0.0;
};

inline constexpr double tol_causality = 1e-6;

// Throws NumericalGuardError when the grid captures less than 99% of the analytic energy.
CausalityReport causality_diagnostic(const AttenuationLaw& law, double distance, const TimeGrid& grid);

// Spacing for which Re alpha*(pi/dt) * distance reaches `decay` (default e^-20 at Nyquist).
double reference_dt(const AttenuationLaw& law, double distance, double decay = 20.0);

struct AlphaCurveRow {
  double tau_omega;
  double re_causal;
  double power_curve;  // |tau0 omega|^gamma
};
std::vector<AlphaCurveRow> alpha_curves(double gamma, double tau0, int points, double lo = 1e-4, double hi = 1e2);

}  // namespace tat
