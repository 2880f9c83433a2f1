#include <doctest.h>
#include <fftw3.h>

#include <cmath>
#include <numbers>

#include "tat/attenuation.hpp"
#include "tat/errors.hpp"
#include "tat/fft.hpp"

using namespace tat;
using std::numbers::pi;

TEST_CASE("complex power agrees with the real power and respects the cut") {
  CHECK(std::abs(complex_power({2.0, 0.0}, 1.5) - std::pow(2.0, 1.5)) < 1e-14);
  const cplx w(0.3, -0.7);
  CHECK(std::abs(complex_power(w, 1.3) - std::conj(complex_power(std::conj(w), 1.3))) < 1e-14);
  // (-i)^gamma = e^{-i pi gamma / 2}
  CHECK(std::abs(complex_power({0.0, -1.0}, 1.5) - std::polar(1.0, -0.75 * pi)) < 1e-14);
  CHECK_THROWS_AS(complex_power({-1.0, 0.0}, 1.5), std::domain_error);
  CHECK_THROWS_AS(complex_power({0.0, 0.0}, 1.5), std::domain_error);
}

TEST_CASE("alpha* vanishes at zero frequency and for the lossless law") {
  CHECK(alpha_star(AttenuationLaw::causal_tied(1.5, 0.01), 0.0) == cplx(0.0, 0.0));
  CHECK(alpha_star(AttenuationLaw::none(), 3.7) == cplx(0.0, 0.0));
  CHECK(wavenumber(AttenuationLaw::none(), 3.7) == cplx(3.7, 0.0));
}

TEST_CASE("alpha* has a nonnegative real part and Hermitian symmetry") {
  for (double g : {1.1, 1.5, 2.0}) {
    for (const auto& law : {AttenuationLaw::causal_tied(g, 0.01), AttenuationLaw::power_matched(g, 0.01)}) {
      for (double w = 1e-3; w < 1e5; w *= 1.7) {
        const cplx a = alpha_star(law, w);
        CHECK(a.real() >= 0.0);
        CHECK(std::abs(alpha_star(law, -w) - std::conj(a)) <= 1e-12 * std::abs(a));
      }
    }
  }
}

TEST_CASE("causal law real part: closed form against its binomial series") {
  // alpha* = alpha0 (-i w) sum_k binom(-1/2, k) z^k with z = (-i tau0 w)^(gamma-1), valid for |z| < 1.
  for (double g : {1.1, 1.5, 2.0}) {
    const auto law = AttenuationLaw::causal_tied(g, 0.01);
    for (double tw : {1e-4, 1e-3, 1e-2, 0.1}) {
      const double w = tw / law.tau0;
      const cplx z = std::pow(std::abs(tw), g - 1.0) * std::polar(1.0, -0.5 * pi * (g - 1.0));
      if (std::abs(z) > 0.9) continue;
      cplx sum = 0.0, term = 1.0;
      for (int k = 0; k < 400; ++k) {
        sum += term;
        term *= z * (-0.5 - k) / (k + 1.0);
      }
      const cplx series = law.alpha0 * cplx(0.0, -w) * sum;
      CHECK(std::abs(alpha_star(law, w) - series) <= 1e-10 * std::abs(series));
    }
  }
}

TEST_CASE("causal law low-frequency values (numpy evaluation, gamma 1.5, tau0 1e-6)") {
  const auto law = AttenuationLaw::causal_tied(1.5, 1e-6);
  CHECK(alpha_star(law, 1e2).real() == doctest::Approx(9.894558934237134e-07).epsilon(1e-10));
  CHECK(alpha_star(law, 1e4).real() == doctest::Approx(0.0009001407289049694).epsilon(1e-10));
  CHECK(alpha_star(law, 1e5).real() == doctest::Approx(0.02288828678987855).epsilon(1e-10));
  // The relative gap to |tau0 w|^1.5 grows like sqrt(tau0 w): about 1% at 1e-4, 10% at 1e-2.
  CHECK(std::abs(alpha_star(law, 1e2).real() / 1e-6 - 1.0) < 0.02);
  CHECK(std::abs(alpha_star(law, 1e3).real() / std::pow(1e-3, 1.5) - 1.0) < 0.05);
}

TEST_CASE("power law matches alpha0 |w|^gamma in its real part") {
  const auto law = AttenuationLaw::power(1.5, 0.2);
  for (double w : {0.1, 1.0, 10.0}) CHECK(alpha_star(law, w).real() == doctest::Approx(0.2 * std::pow(w, 1.5)));
}

TEST_CASE("omega/k continuity limit at zero frequency") {
  const auto law = AttenuationLaw::causal(1.5, 0.3, 0.01);
  CHECK(omega_over_k(law, 0.0).real() == doctest::Approx(1.0 / 1.3));
  CHECK(std::abs(omega_over_k(law, 1e-9) - omega_over_k(law, 0.0)) < 1e-3);
  CHECK(omega_over_k(AttenuationLaw::power_matched(1.5, 0.01), 0.0) == cplx(1.0, 0.0));
  CHECK(omega_over_k(AttenuationLaw::none(), 0.0) == cplx(1.0, 0.0));
}

TEST_CASE("law validation") {
  CHECK_THROWS_AS(AttenuationLaw::causal(1.0, 0.1, 0.01), ConfigError);
  CHECK_THROWS_AS(AttenuationLaw::causal(2.1, 0.1, 0.01), ConfigError);
  CHECK_THROWS_AS(AttenuationLaw::causal(1.5, 0.1, -0.01), ConfigError);
  CHECK_THROWS_AS(AttenuationLaw::power(1.5, -1.0), ConfigError);
  CHECK(law_kind_from_string(to_string(LawKind::CausalLaw)) == LawKind::CausalLaw);
}

TEST_CASE("DFT sign convention against a direct sum") {
  const int n = 16;
  std::vector<cplx> x(n), y(n);
  for (int j = 0; j < n; ++j) x[j] = cplx(std::sin(j + 0.3), std::cos(2.0 * j));
  Dft(n, -1).execute(x.data(), y.data());
  for (int k = 0; k < n; ++k) {
    cplx s = 0.0;
    for (int j = 0; j < n; ++j) s += x[j] * std::polar(1.0, -2.0 * pi * j * k / n);
    CHECK(std::abs(y[k] - s) < 1e-12);
  }
  CHECK(FFTW_FORWARD == -1);
}

TEST_CASE("reference spacing puts the Nyquist decay at the requested level") {
  const auto law = AttenuationLaw::causal_tied(1.5, 0.01);
  const double dt = reference_dt(law, 1.0, 20.0);
  CHECK(alpha_star(law, pi / dt).real() == doctest::Approx(20.0).epsilon(1e-8));
}

TEST_CASE("causality dichotomy on the reference grid") {
  for (double g : {1.1, 1.5, 2.0}) {
    const auto causal = AttenuationLaw::causal_tied(g, 0.01);
    const TimeGrid grid(4096, reference_dt(causal, 1.0));
    const auto rc = causality_diagnostic(causal, 1.0, grid);
    CHECK(rc.pass);
    CHECK(rc.neg_fraction <= tol_causality);
    CHECK(rc.captured_energy > 0.99);
    const auto rp = causality_diagnostic(AttenuationLaw::power_matched(g, 0.01), 1.0, grid);
    CHECK_FALSE(rp.pass);
    CHECK(rp.neg_fraction >= 1e-2);
  }
  const auto none = causality_diagnostic(AttenuationLaw::none(), 1.0, TimeGrid(1024, 1e-2));
  CHECK(none.pass);
}

TEST_CASE("causality guard rejects an under-resolved grid") {
  CHECK_THROWS_AS(causality_diagnostic(AttenuationLaw::causal_tied(1.5, 0.01), 1.0, TimeGrid(64, 0.1)),
                  NumericalGuardError);
  CHECK_THROWS_AS(causality_diagnostic(AttenuationLaw::causal_tied(1.5, 0.01), 0.0, TimeGrid(64, 0.1)), ConfigError);
}

TEST_CASE("attenuation curves approach the power law at low frequency and depart above tau0 w = 1") {
  const auto rows = alpha_curves(1.5, 0.01, 61, 1e-4, 1e2);
  REQUIRE(rows.size() == 61);
  double prev = 0.0;
  for (const auto& r : rows) {
    CHECK(r.re_causal > prev);
    prev = r.re_causal;
    const double dev = std::abs(r.re_causal - r.power_curve) / r.power_curve;
    if (r.tau_omega <= 2e-3) CHECK(dev <= 0.05);
    if (r.tau_omega >= 1.0) CHECK(dev > 0.2);
  }
}
