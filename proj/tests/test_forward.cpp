#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <numbers>

#include "tat/errors.hpp"
#include "tat/forward.hpp"
#include "tat/pulse.hpp"

using namespace tat;
using std::numbers::pi;

namespace {

const auto kLaw = AttenuationLaw::causal_tied(1.5, 0.01);
const Phantom kRef{{{Vec3::Zero(), 0.25, 1.0}}};

double energy(const std::vector<double>& v, int from, int to) {
  double s = 0.0;
  for (int i = from; i < to; ++i) s += v[i] * v[i];
  return s;
}

}  // namespace

TEST_CASE("ideal point pressure is the derivative of R_sp / (4 pi t)") {
  const Phantom ph{{{Vec3(0.1, -0.05, 0.08), 0.25, 1.0}}};
  const Vec3 x(0.0, 0.6, 0.8);
  const TimeGrid g(1024, 2.0 / 1024);
  const auto p = ideal_point_pressure(ph, x, g);
  const double h = 1e-6;
  const double d = (x - ph.balls[0].center).norm();
  for (int i = 1; i < g.n; ++i) {
    const double t = g.t(i);
    if (std::abs(std::abs(d - t) - 0.25) < 2 * h) continue;
    const double fd = (spherical_projection(ph, x, t + h) / (4 * pi * (t + h)) -
                       spherical_projection(ph, x, t - h) / (4 * pi * (t - h))) /
                      (2 * h);
    CHECK(p.values[i] == doctest::Approx(fd).scale(1.0).epsilon(1e-6));
  }
  // kinks on the grid take the mean of the one-sided limits
  const auto pr = ideal_point_pressure(kRef, Vec3::UnitZ(), g);
  CHECK(pr.values[384] == doctest::Approx(0.5 * 0.25 / 2.0));
}

TEST_CASE("ideal line pressure integrates the point pressure along the line") {
  const Vec3 n = Vec3::UnitZ(), x(1.0, 0.0, 0.0);
  const TimeGrid g(256, 2.0 / 256);
  const auto pl = ideal_line_pressure(kRef, n, x, g);
  for (int i = 100; i < 200; i += 7) {
    // int p0(x + z n, t) dz with a fine midpoint rule
    const int m = 200000;
    const double L = 2.0, h = 2 * L / m;
    double s = 0.0;
    for (int k = 0; k < m; ++k) {
      const TimeGrid one(2, g.t(i) > 0 ? g.t(i) : 1.0);
      s += ideal_point_pressure(kRef, x + (-L + (k + 0.5) * h) * n, one).values[1] * h;
    }
    CHECK(pl.values[i] == doctest::Approx(s).epsilon(1e-3).scale(1e-6));
  }
}

TEST_CASE("attenuated data is causal for all detector types") {
  const TimeGrid g(512, 2.0 / 512);
  const auto m = m_matrix(kLaw, g);
  const auto point = attenuated_point_data(n_point_from(m, Pulse::delta()), kRef, Vec3::UnitZ());
  const auto planar = attenuated_planar_data(n_planar_from(m, Pulse::delta(), 1.0), kRef, Vec3::UnitZ());
  const auto line = attenuated_line_data(n_line_from(m, Pulse::delta()), kRef, Vec3::UnitZ(), Vec3(1, 0, 0));
  // first arrival (d - R) / c0 = 0.75 for every geometry here
  const int arrival = static_cast<int>(0.75 / g.dt) - 2;
  for (const auto* s : {&point, &planar, &line})
    CHECK(energy(s->values, 0, arrival) <= 1e-4 * energy(s->values, 0, g.n));
}

TEST_CASE("forward data is linear in the amplitude") {
  const TimeGrid g(256, 2.0 / 256);
  const auto np = n_point(kLaw, Pulse::delta(), g);
  Phantom a = kRef, b = kRef;
  b.balls[0].amplitude = 3.0;
  const auto pa = attenuated_point_data(np, a, Vec3::UnitZ());
  const auto pb = attenuated_point_data(np, b, Vec3::UnitZ());
  for (int i = 0; i < g.n; ++i) CHECK(pb.values[i] == doctest::Approx(3.0 * pa.values[i]).epsilon(1e-14));
}

TEST_CASE("raised cosine data equals delta data convolved with the pulse") {
  const TimeGrid g(512, 2.0 / 512);
  const auto p = Pulse::raised_cosine(0.05);
  const auto m = m_matrix(kLaw, g);
  const auto delta = attenuated_point_data(n_point_from(m, Pulse::delta()), kRef, Vec3::UnitZ());
  const auto shaped = attenuated_point_data(n_point_from(m, p), kRef, Vec3::UnitZ());
  CHECK(rel_l2(shaped.values, convolve_series(p, delta.values, g)) < 1e-3);
}

TEST_CASE("raised cosine pulse has unit integral and compact support") {
  const auto p = Pulse::raised_cosine(0.1);
  const int n = 10000;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += p.value((i + 0.5) * 0.1 / n) * 0.1 / n;
  CHECK(s == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(p.value(-0.01) == 0.0);
  CHECK(p.value(0.11) == 0.0);
  CHECK_THROWS_AS(Pulse::raised_cosine(0.0), ConfigError);
}

TEST_CASE("Green superposition matches the kernel model for a small ball") {
  const TimeGrid g(1024, 2.0 / 1024);
  const Phantom small{{{Vec3(0.05, 0.02, -0.03), 0.05, 1.0}}};
  const Vec3 x(0.48, 0.6, 0.64);
  const auto kern = attenuated_point_data(small, kLaw, Pulse::delta(), x, g);
  const auto green = green_forward(small, kLaw, x, g);
  CHECK(green.nodes <= 10000);
  CHECK(rel_l2(green.data.values, kern.values) < 0.02);
  // output vanishes before the first arrival
  const int arrival = static_cast<int>(((x - small.balls[0].center).norm() - 0.05) / g.dt) - 2;
  CHECK(energy(green.data.values, 0, arrival) <= 1e-4 * energy(green.data.values, 0, g.n));
}

TEST_CASE("Cartesian lattice converges toward the spherical product rule") {
  const TimeGrid g(512, 2.0 / 512);
  const Phantom small{{{Vec3(0.05, 0.02, -0.03), 0.05, 1.0}}};
  const Vec3 x(0.48, 0.6, 0.64);
  const auto ref = green_forward(small, kLaw, x, g).data.values;
  GreenOptions opt;
  opt.lattice = GreenLattice::Cartesian;
  opt.max_nodes = 1000;
  const double coarse = rel_l2(green_forward(small, kLaw, x, g, opt).data.values, ref);
  opt.max_nodes = 8000;
  const double fine = rel_l2(green_forward(small, kLaw, x, g, opt).data.values, ref);
  CHECK(fine < coarse);
}

TEST_CASE("Green superposition does not depend on the thread count") {
  const TimeGrid g(256, 2.0 / 256);
  const Phantom small{{{Vec3(0.0, 0.1, 0.0), 0.1, 1.0}}};
  GreenOptions opt;
  opt.max_nodes = 2000;
  opt.parallel = false;
  const auto a = green_forward(small, kLaw, Vec3::UnitX(), g, opt);
  opt.parallel = true;
  const int saved = omp_get_max_threads();
  omp_set_num_threads(3);
  const auto b = green_forward(small, kLaw, Vec3::UnitX(), g, opt);
  omp_set_num_threads(saved);
  CHECK(a.data.values == b.data.values);
}

TEST_CASE("empty phantom gives zero data") {
  const TimeGrid g(64, 0.05);
  const auto r = green_forward(Phantom{}, kLaw, Vec3::UnitZ(), g);
  for (double v : r.data.values) CHECK(v == 0.0);
}

TEST_CASE("noise is deterministic in the seed and scaled to the rms") {
  const TimeGrid g(4096, 1e-3);
  Signal s{"", "point", g, std::vector<double>(g.n)};
  for (int i = 0; i < g.n; ++i) s.values[i] = std::sin(0.01 * i);
  Signal a = s, b = s, c = s;
  add_noise(a, 0.01, 5);
  add_noise(b, 0.01, 5);
  add_noise(c, 0.01, 6);
  CHECK(a.values == b.values);
  CHECK(a.values != c.values);
  CHECK(rel_l2(a.values, s.values) == doctest::Approx(0.01).epsilon(0.05));
}
