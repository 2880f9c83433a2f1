#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tat/errors.hpp"
#include "tat/projections.hpp"
#include "tat/recon.hpp"

using namespace tat;
using std::numbers::pi;

namespace {

struct Estimate {
  double mean, se;
};

template <class F>
Estimate monte_carlo(int n, F&& sample) {
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = sample();
    s += v;
    s2 += v * v;
  }
  const double m = s / n;
  return {m, std::sqrt(std::max(0.0, s2 / n - m * m) / n)};
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Vec3 v(nd(rng), nd(rng), nd(rng));
  return v.normalized();
}

Phantom random_phantom(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.3, 0.3), r(0.1, 0.3), a(0.5, 2.0);
  Phantom ph;
  for (int b = 0; b < 2; ++b) ph.balls.push_back({Vec3(u(rng), u(rng), u(rng)), r(rng), a(rng)});
  return ph;
}

void orthonormal(const Vec3& n, Vec3& e1, Vec3& e2) {
  e1 = n.unitOrthogonal();
  e2 = n.cross(e1).normalized();
}

}  // namespace

TEST_CASE("closed-form special values") {
  const Phantom unit{{{Vec3::Zero(), 1.0, 1.0}}};
  CHECK(spherical_projection(unit, Vec3::Zero(), 0.5) == doctest::Approx(pi));
  CHECK(planar_projection(unit, Vec3::UnitZ(), 0.0) == doctest::Approx(pi));
  CHECK(line_integral(unit, Vec3::UnitZ(), Vec3(0.6, 0.0, 0.0)) == doctest::Approx(1.6));
  CHECK(line_integral(unit, Vec3::UnitZ(), Vec3(1.5, 0.0, 0.0)) == 0.0);
  CHECK(spherical_projection(unit, Vec3(3.0, 0.0, 0.0), 1.0) == 0.0);
  // concentric circle in the plane: the image is 2 sqrt(1 - t^2) everywhere on it
  const auto c = circular_projection(unit, Vec3::UnitZ(), Vec3::Zero(), 0.6);
  CHECK(c.value == doctest::Approx(2.0 * pi * 0.6 * 1.6).epsilon(1e-12));
}

TEST_CASE("Monte Carlo agreement over 20 randomized configurations") {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> ut(0.2, 1.4), us(-0.4, 0.4);
  const int N = 40000;
  for (int cfg = 0; cfg < 20; ++cfg) {
    const Phantom ph = random_phantom(rng);
    const Vec3 x = random_unit(rng);
    const Vec3 n = random_unit(rng);
    Vec3 e1, e2;
    orthonormal(n, e1, e2);
    const double t = ut(rng), s = us(rng);

    const auto sph = monte_carlo(N, [&] { return 4.0 * pi * t * t * ph.value(x + t * random_unit(rng)); });
    CHECK(std::abs(spherical_projection(ph, x, t) - sph.mean) <= 3.0 * sph.se + 1e-12);

    std::uniform_real_distribution<double> sq(-0.7, 0.7);
    const auto pl = monte_carlo(N, [&] { return 1.96 * ph.value(s * n + sq(rng) * e1 + sq(rng) * e2); });
    CHECK(std::abs(planar_projection(ph, n, s) - pl.mean) <= 3.0 * pl.se + 1e-12);

    const Vec3 p = 0.2 * e1 - 0.1 * e2;
    const auto li = monte_carlo(N, [&] { return 1.4 * ph.value(p + sq(rng) * n); });
    CHECK(std::abs(line_integral(ph, n, p) - li.mean) <= 3.0 * li.se + 1e-12);

    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    const Vec3 xc = 1.0 * e1;
    const double tc = 0.6 + 0.6 * (cfg % 5) / 4.0;
    const auto ci = monte_carlo(N, [&] {
      const double a = ang(rng);
      return 2.0 * pi * tc * line_integral(ph, n, xc + tc * (std::cos(a) * e1 + std::sin(a) * e2));
    });
    const auto cr = circular_projection(ph, n, xc, tc);
    CHECK(cr.converged);
    CHECK(std::abs(cr.value - ci.mean) <= 3.0 * ci.se + 1e-12);
  }
}

TEST_CASE("spherical projection integrates to the ball mass") {
  // int_0^inf R_sp(x, t) dt = amplitude * volume
  const Phantom ph{{{Vec3(0.1, 0.2, -0.1), 0.3, 2.0}}};
  const Vec3 x(0.0, 0.0, 1.0);
  const int n = 20000;
  const double h = 2.0 / n;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) s += (i == 0 || i == n ? 0.5 : 1.0) * spherical_projection(ph, x, i * h);
  CHECK(s * h == doctest::Approx(2.0 * 4.0 / 3.0 * pi * 0.027).epsilon(1e-6));
}

TEST_CASE("circular projection converges and reports its node count") {
  const Phantom ph{{{Vec3(0.1, -0.05, 0.08), 0.25, 1.0}}};
  const auto a = circular_projection(ph, Vec3::UnitZ(), Vec3(1.0, 0.0, 0.0), 0.9, 1e-2, 1e-10);
  const auto b = circular_projection(ph, Vec3::UnitZ(), Vec3(1.0, 0.0, 0.0), 0.9, 1e-2, 1e-6);
  CHECK(a.converged);
  CHECK(a.nodes >= b.nodes);
  CHECK(a.value == doctest::Approx(b.value).epsilon(1e-5));
}

TEST_CASE("phantom and detector validation") {
  const Phantom out{{{Vec3(0.8, 0.0, 0.0), 0.3, 1.0}}};
  CHECK_THROWS_AS(out.validate(1.0), ConfigError);
  const Phantom bad{{{Vec3::Zero(), -0.1, 1.0}}};
  CHECK_THROWS_AS(bad.validate(1.0), ConfigError);
  const auto la = line_array(Vec3(0.0, 1.0, 1.0), 1.0, 12);
  CHECK_NOTHROW(la.validate());
  for (int i = 0; i < la.size(); ++i) {
    CHECK(la.position(i).norm() == doctest::Approx(1.0));
    CHECK(std::abs(la.position(i).dot(la.normal)) < 1e-12);
  }
  DetectorSet empty;
  CHECK_THROWS_AS(empty.validate(), ConfigError);
  CHECK(detector_kind_from_string(to_string(DetectorKind::PlanarTangent)) == DetectorKind::PlanarTangent);
}

TEST_CASE("Lebedev rules integrate polynomials up to their degree") {
  const int sizes[] = {110, 302, 590, 1202};
  const int degrees[] = {17, 29, 41, 59};
  for (int s = 0; s < 4; ++s) {
    const auto r = lebedev(sizes[s]);
    REQUIRE(static_cast<int>(r.directions.size()) == sizes[s]);
    CHECK(r.degree == degrees[s]);
    double w = 0.0, x2 = 0.0, x2y2z2 = 0.0, z4 = 0.0, odd = 0.0;
    for (size_t i = 0; i < r.directions.size(); ++i) {
      const Vec3& d = r.directions[i];
      CHECK(d.norm() == doctest::Approx(1.0).epsilon(1e-14));
      w += r.weights[i];
      x2 += r.weights[i] * d.x() * d.x();
      x2y2z2 += r.weights[i] * d.x() * d.x() * d.y() * d.y() * d.z() * d.z();
      z4 += r.weights[i] * std::pow(d.z(), 4);
      odd += r.weights[i] * d.x() * d.y() * d.y() * d.z();
    }
    CHECK(w == doctest::Approx(4.0 * pi).epsilon(1e-13));
    CHECK(x2 == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-13));
    CHECK(z4 == doctest::Approx(4.0 * pi / 5.0).epsilon(1e-13));
    CHECK(x2y2z2 == doctest::Approx(4.0 * pi / 105.0).epsilon(1e-12));
    CHECK(std::abs(odd) < 1e-13);
  }
  CHECK_THROWS(lebedev(100));
}
