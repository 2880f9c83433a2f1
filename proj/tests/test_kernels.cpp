#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>

#include "shells_oracle.hpp"
#include "tat/errors.hpp"
#include "tat/forward.hpp"
#include "tat/kernels.hpp"

using namespace tat;
using std::numbers::pi;

namespace {

const auto kLaw = AttenuationLaw::causal_tied(1.5, 0.01);

Eigen::VectorXd smooth_bump(const TimeGrid& g, double a, double b) {
  Eigen::VectorXd q(g.n);
  for (int i = 0; i < g.n; ++i) {
    const double t = g.t(i);
    q[i] = t > a && t < b ? std::pow(std::sin(pi * (t - a) / (b - a)), 2) : 0.0;
  }
  return q;
}

}  // namespace

TEST_CASE("lossless M is the discrete delta") {
  const TimeGrid g(256, 2.0 / 256);
  const auto m = m_matrix(AttenuationLaw::none(), g);
  const Eigen::MatrixXd expect = Eigen::MatrixXd::Identity(g.n, g.n) / g.dt;
  CHECK((m.values - expect).cwiseAbs().maxCoeff() < 1e-9 / g.dt);
  CHECK(m.support_ok());
}

TEST_CASE("m_hat special values") {
  const double s = 1.0 / std::sqrt(2.0 * pi);
  CHECK(std::abs(m_hat(AttenuationLaw::none(), 2.3, 0.4) - s * std::polar(1.0, 2.3 * 0.4)) < 1e-14);
  const auto law = AttenuationLaw::causal(1.5, 0.3, 0.01);
  CHECK(std::abs(m_hat(law, 0.0, 0.0) - s / 1.3) < 1e-14);
  CHECK(std::abs(m_hat(kLaw, 1e4, 0.5)) < 1e-6 * std::abs(m_hat(kLaw, 1.0, 0.5)));
}

TEST_CASE("attenuated M: causal support, realness, bounded leak") {
  const TimeGrid g(512, 2.0 / 512);
  for (double gam : {1.1, 1.5, 2.0}) {
    const auto m = m_matrix(AttenuationLaw::causal_tied(gam, 0.01), g);
    CHECK(m.support_ok());
    for (int j = 0; j < g.n; ++j)
      for (int i = 0; i < j; ++i) REQUIRE(m.values(i, j) == 0.0);
    CHECK(m.max_leak < 1e-3);
    CHECK(m.max_imag_ratio < 1e-10);
  }
}

TEST_CASE("M entries against an independent direct frequency sum") {
  const TimeGrid g(256, 2.0 / 256);
  BuildOptions wide;
  wide.alias = 16;
  const auto m = m_matrix(kLaw, g, wide);
  const double scale = m.values.cwiseAbs().maxCoeff();
  for (auto [i, j] : {std::pair{60, 30}, std::pair{100, 90}, std::pair{200, 50}, std::pair{40, 40}}) {
    const double v = oracle::m_entry(kLaw, g, i, j);
    CHECK(std::abs(m.values(i, j) - v) <= 1e-6 * scale);
  }
  // Away from the source the folded tail is accurate; next to it the shell sum converges like 1/K.
  const auto md = m_matrix(kLaw, g);
  CHECK((md.values.rightCols(g.n - 64) - m.values.rightCols(g.n - 64)).cwiseAbs().maxCoeff() <= 1e-4 * scale);
  BuildOptions mid;
  mid.alias = 8;
  const auto mm = m_matrix(kLaw, g, mid);
  const double near4 = (md.values.leftCols(32) - m.values.leftCols(32)).cwiseAbs().maxCoeff();
  const double near8 = (mm.values.leftCols(32) - m.values.leftCols(32)).cwiseAbs().maxCoeff();
  CHECK(near8 < near4);
  CHECK(near4 <= 1e-2 * scale);
}

TEST_CASE("column integrals equal the zero-frequency value") {
  // sum_i dt M(t_i, t') ~ sqrt(2 pi) m_hat(0, t') = c0 / (1 + alpha0) for columns whose tail fits the window.
  const TimeGrid g(1024, 4.0 / 1024);
  const auto m = m_matrix(kLaw, g);
  for (int j : {32, 128, 256}) {
    const double s = m.values.col(j).sum() * g.dt;
    CHECK(s == doctest::Approx(1.0 / (1.0 + kLaw.alpha0)).epsilon(5e-3));
  }
}

TEST_CASE("serial and parallel kernel builds agree") {
  const TimeGrid g(256, 2.0 / 256);
  BuildOptions serial;
  serial.parallel = false;
  const auto a = m_matrix(kLaw, g, serial);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  const auto b = m_matrix(kLaw, g);
  const auto c = n_line(kLaw, Pulse::raised_cosine(0.05), g);
  omp_set_num_threads(saved);
  const auto d = n_line(kLaw, Pulse::raised_cosine(0.05), g, serial);
  CHECK((a.values - b.values).cwiseAbs().maxCoeff() <= 1e-12 * a.values.cwiseAbs().maxCoeff());
  CHECK((c.values - d.values).cwiseAbs().maxCoeff() <= 1e-12 * c.values.cwiseAbs().maxCoeff());
}

TEST_CASE("power law kernel trips the resolution guard") {
  CHECK_THROWS_AS(m_matrix(AttenuationLaw::power_matched(1.5, 0.01), TimeGrid(256, 2.0 / 256)), NumericalGuardError);
  CHECK_THROWS_AS(m_matrix(kLaw, TimeGrid(200, 0.01)), ConfigError);
}

TEST_CASE("pulse convolution") {
  const TimeGrid g(256, 2.0 / 256);
  const auto m = m_matrix(kLaw, g);
  CHECK(convolve_pulse(m, Pulse::delta()).values == m.values);
  const auto p = Pulse::raised_cosine(0.1);
  const auto c = convolve_pulse(m, p);
  CHECK(c.support_ok());
  // lossless M: rows become the sampled pulse
  const auto c0 = convolve_pulse(m_matrix(AttenuationLaw::none(), g), p);
  for (int j : {0, 17, 100})
    for (int i = j; i < std::min(g.n, j + 20); ++i)
      CHECK(c0.values(i, j) == doctest::Approx(p.value((i - j) * g.dt)).scale(1e-6));
  // direct summation
  const int i = 120, j = 60;
  double s = 0.0;
  for (int r = j; r <= i; ++r) s += g.dt * p.value((i - r) * g.dt) * m.values(r, j);
  CHECK(c.values(i, j) == doctest::Approx(s).epsilon(1e-12));
}

TEST_CASE("point kernel: support, zero first column, spectral cross-check") {
  const TimeGrid g(512, 2.0 / 512);
  const auto np = n_point(kLaw, Pulse::delta(), g);
  CHECK(np.support_ok());
  CHECK(np.values.col(0).cwiseAbs().maxCoeff() == 0.0);
  const auto ns = n_point_spectral(kLaw, Pulse::delta(), g);
  const Eigen::VectorXd q = smooth_bump(g, 0.4, 1.4);
  CHECK((np.apply(q) - ns.apply(q)).norm() <= 1e-2 * np.apply(q).norm());
}

TEST_CASE("lossless point kernel maps R_sp to p0") {
  const TimeGrid g(1024, 2.0 / 1024);
  const Phantom ph{{{Vec3::Zero(), 0.25, 1.0}}};
  const auto np = n_point(AttenuationLaw::none(), Pulse::delta(), g);
  const Vec3 x(0.0, 0.6, 0.8);
  const auto p = attenuated_point_data(np, ph, x);
  CHECK(rel_l2(p.values, ideal_point_pressure(ph, x, g).values) < 1e-2);
}

TEST_CASE("planar kernel is twice the pulse-convolved M") {
  const TimeGrid g(256, 2.0 / 256);
  const auto m = m_matrix(kLaw, g);
  const auto p = Pulse::raised_cosine(0.05);
  const auto np = n_planar_from(m, p, 1.0);
  CHECK((np.values - 2.0 * convolve_pulse(m, p).values).cwiseAbs().maxCoeff() == 0.0);
  CHECK(np.source_coordinate(10) == doctest::Approx(1.0 - 10 * g.dt));
  CHECK_THROWS_AS(n_planar_from(m, p, 0.0), ConfigError);
}

TEST_CASE("Abel product integration is exact for linear data") {
  const TimeGrid g(128, 1.0 / 128);
  const auto a = abel_matrix(g);
  for (int i = 1; i < g.n; i += 13) {
    const double s = g.t(i);
    double ones = 0.0, lin = 0.0;
    for (int k = 0; k <= i; ++k) {
      ones += a(i, k);
      lin += a(i, k) * g.t(k);
    }
    CHECK(ones == doctest::Approx(pi / 2.0).epsilon(1e-12));
    CHECK(lin == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("line kernel entries converge to the cosh-substitution quadrature") {
  double prev = 1.0;
  for (int n : {256, 512}) {
    const TimeGrid g(n, 2.0 / n);
    const auto nl = n_line(kLaw, Pulse::delta(), g);
    CHECK(nl.support_ok());
    const int i = static_cast<int>(std::lround(0.78 / g.dt)), j = static_cast<int>(std::lround(0.3125 / g.dt));
    const auto q = n_line_entry_quadrature(kLaw, g, i, j, 1e-4);
    CHECK(q.converged);
    CHECK(q.nodes >= 64);
    const double rel = std::abs(nl.values(i, j) - q.value) / std::abs(q.value);
    CHECK(rel < prev);
    prev = rel;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("lossless line kernel maps circular projections to the line pressure") {
  double prev = 1.0;
  const Phantom ph{{{Vec3::Zero(), 0.25, 1.0}}};
  for (int n : {512, 1024}) {
    const TimeGrid g(n, 2.0 / n);
    const auto nl = n_line(AttenuationLaw::none(), Pulse::delta(), g);
    const auto d = attenuated_line_data(nl, ph, Vec3::UnitZ(), Vec3(1.0, 0.0, 0.0));
    const double e = rel_l2(d.values, ideal_line_pressure(ph, Vec3::UnitZ(), Vec3(1.0, 0.0, 0.0), g).values);
    CHECK(e < prev);
    prev = e;
  }
  CHECK(prev < 1e-2);
}

TEST_CASE("smoothness: second differences scale like 1/dt^2 with a stable constant") {
  for (double gamma : {1.1, 1.5, 2.0}) {
    const auto law = AttenuationLaw::causal_tied(gamma, 0.01);
    double c_prev = 0.0, ratio_prev = 0.0;
    for (int n : {512, 1024, 2048}) {
      const TimeGrid g(n, 2.0 / n);
      const auto m = m_matrix(law, g);
      const int j = n / 4;
      double worst = 0.0;
      for (int i = j + 1; i < n - 1; ++i)
        worst = std::max(worst, std::abs(m.values(i + 1, j) - 2 * m.values(i, j) + m.values(i - 1, j)));
      const double c = worst * g.dt * g.dt;
      const double ratio = worst / m.values.col(j).cwiseAbs().maxCoeff();
      if (c_prev > 0.0) CHECK(c < c_prev);
      // a resolved smooth column loses half its relative curvature per refinement; a spike would not
      if (n == 2048) CHECK(ratio < 0.6 * ratio_prev);
      c_prev = c;
      ratio_prev = ratio;
    }
  }
}

TEST_CASE("kernel CSV and binary round trips") {
  const TimeGrid g(64, 2.0 / 64);
  auto k = n_point(kLaw, Pulse::raised_cosine(0.1), g);
  const auto dir = std::filesystem::temp_directory_path() / "tat_kernel_io";
  std::filesystem::create_directories(dir);
  write_kernel_csv(k, (dir / "k.csv").string());
  write_kernel_binary(k, (dir / "k.bin").string());
  for (const auto& r : {read_kernel_csv((dir / "k.csv").string()), read_kernel_binary((dir / "k.bin").string())}) {
    CHECK(r.kind == k.kind);
    CHECK(r.grid == k.grid);
    CHECK(r.values == k.values);
    CHECK(r.weights == k.weights);
    CHECK(r.lead == k.lead);
    CHECK(r.law.alpha0 == k.law.alpha0);
    CHECK(r.pulse.t1 == k.pulse.t1);
  }
  std::filesystem::remove_all(dir);
}
