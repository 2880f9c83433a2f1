#include <doctest.h>
#include <Eigen/SVD>

#include <cmath>
#include <limits>

#include "tat/errors.hpp"
#include "tat/forward.hpp"
#include "tat/inverse.hpp"

using namespace tat;

namespace {

const auto kLaw = AttenuationLaw::causal_tied(1.5, 0.01);
const Phantom kRef{{{Vec3::Zero(), 0.25, 1.0}}};

Signal forward(const KernelMatrix& k, const std::vector<double>& q) {
  const Eigen::VectorXd p = k.apply(Eigen::Map<const Eigen::VectorXd>(q.data(), q.size()));
  return {"", "test", k.grid, std::vector<double>(p.data(), p.data() + p.size())};
}

}  // namespace

TEST_CASE("regularizer validation and naming") {
  CHECK_THROWS_AS(Regularizer::tsvd(0.0).validate(), ConfigError);
  CHECK_THROWS_AS(Regularizer::tsvd(1.0).validate(), ConfigError);
  CHECK_NOTHROW(Regularizer::tikhonov(-1.0).validate());
  CHECK(reg_kind_from_string(to_string(RegKind::TruncatedSVD)) == RegKind::TruncatedSVD);
  CHECK_THROWS_AS(reg_kind_from_string("ridge"), ConfigError);
}

TEST_CASE("forward substitution agrees with a dense LU solve") {
  const TimeGrid g(64, 2.0 / 64);
  const auto m = m_matrix(AttenuationLaw::causal_tied(2.0, 0.01), g);
  std::vector<double> q(g.n);
  for (int i = 0; i < g.n; ++i) q[i] = std::exp(-std::pow(g.t(i) - 1.0, 2) / 0.05);
  const Signal p = forward(m, q);
  const auto sol = solve_projection(m, p, Regularizer::none());
  const Eigen::MatrixXd a = m.quadrature_matrix();
  const Eigen::VectorXd lu = a.partialPivLu().solve(p.vec());
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const double cond = svd.singularValues()(0) / svd.singularValues()(g.n - 1);
  const double tol = 10.0 * cond * std::numeric_limits<double>::epsilon();
  CHECK((sol.q.vec() - lu).norm() <= tol * lu.norm());
  CHECK(rel_l2(sol.q.values, q) <= tol);
}

TEST_CASE("normal-equation Tikhonov agrees with the SVD filter") {
  const TimeGrid g(256, 2.0 / 256);
  const auto k = n_point(kLaw, Pulse::delta(), g);
  const Signal p = forward(k, sample_spherical(kRef, Vec3::UnitZ(), g));
  const SvdFactor svd(k);
  const double lambda = 1e-10 * svd.sigma_max() * svd.sigma_max();
  const auto a = solve_projection(k, p, Regularizer::tikhonov(lambda));
  const auto b = svd.solve(p, Regularizer::tikhonov(lambda));
  CHECK(rel_l2(a.q.values, b.q.values) < 1e-6);
  CHECK(sigma_max(k) == doctest::Approx(svd.sigma_max()).epsilon(1e-6));
}

TEST_CASE("Tikhonov residual grows and solution norm shrinks with lambda") {
  const TimeGrid g(256, 2.0 / 256);
  const auto k = n_point(kLaw, Pulse::delta(), g);
  Signal p = forward(k, sample_spherical(kRef, Vec3::UnitZ(), g));
  add_noise(p, 0.01, 3);
  const SvdFactor svd(k);
  const double s2 = svd.sigma_max() * svd.sigma_max();
  double prev_res = -1.0, prev_norm = 1e300;
  for (double rel = 1e-14; rel < 1.0; rel *= 10.0) {
    const auto sol = svd.solve(p, Regularizer::tikhonov(rel * s2));
    CHECK(sol.residual_norm >= prev_res * (1 - 1e-12));
    CHECK(sol.solution_norm <= prev_norm * (1 + 1e-12));
    prev_res = sol.residual_norm;
    prev_norm = sol.solution_norm;
  }
}

TEST_CASE("truncated SVD keeps fewer components as the threshold rises") {
  const TimeGrid g(128, 2.0 / 128);
  const auto k = n_point(kLaw, Pulse::delta(), g);
  const Signal p = forward(k, sample_spherical(kRef, Vec3::UnitZ(), g));
  const SvdFactor svd(k);
  double prev = 0.0;
  for (double th : {1e-1, 1e-3, 1e-6}) {
    const auto sol = solve_projection(k, p, Regularizer::tsvd(th));
    CHECK(sol.solution_norm >= prev);
    prev = sol.solution_norm;
  }
}

TEST_CASE("discrepancy principle hits the noise level") {
  const TimeGrid g(512, 2.0 / 512);
  const auto k = n_point(kLaw, Pulse::delta(), g);
  Signal p = forward(k, sample_spherical(kRef, Vec3::UnitZ(), g));
  add_noise(p, 0.01, 9);
  const SvdFactor svd(k);
  const auto reg = discrepancy_select(svd, p, 0.01);
  const auto sol = svd.solve(p, reg);
  CHECK(sol.residual_norm == doctest::Approx(0.01 * p.vec().norm()).epsilon(0.05));
  CHECK(reg.lambda == doctest::Approx(discrepancy_select(k, p, 0.01).lambda).epsilon(1e-6));
}

TEST_CASE("noiseless round trips for the three detector types") {
  const TimeGrid g(1024, 2.0 / 1024);
  const auto m = m_matrix(kLaw, g);
  const std::vector<double> qp = sample_spherical(kRef, Vec3::UnitZ(), g);
  const std::vector<double> ql = sample_planar(kRef, Vec3::UnitZ(), 1.0, g);
  const std::vector<double> qc = sample_circular(kRef, Vec3::UnitZ(), Vec3(1, 0, 0), g);
  const KernelMatrix kp = n_point_from(m, Pulse::delta()), kl = n_planar_from(m, Pulse::delta(), 1.0),
                     kc = n_line_from(m, Pulse::delta());
  CHECK(rel_l2(solve_projection(kp, forward(kp, qp), Regularizer::tikhonov(-1.0)).q.values, qp) < 0.02);
  CHECK(rel_l2(solve_projection(kl, forward(kl, ql), Regularizer::tikhonov(-1.0)).q.values, ql) < 0.02);
  CHECK(rel_l2(solve_projection(kc, forward(kc, qc), Regularizer::tikhonov(-1.0)).q.values, qc) < 0.02);
}

TEST_CASE("deattenuation recovers the ideal pressure") {
  const TimeGrid g(512, 2.0 / 512);
  const auto p0 = ideal_point_pressure(kRef, Vec3::UnitZ(), g);
  const auto im = convolve_pulse(m_matrix(kLaw, g), Pulse::delta());
  const Signal p = forward(im, p0.values);
  const auto sol = deattenuate(p, kLaw, Pulse::delta(), Regularizer::tikhonov(-1.0));
  CHECK(rel_l2(sol.q.values, p0.values) < 0.05);
}

TEST_CASE("shape mismatch is a configuration error") {
  const TimeGrid g(64, 2.0 / 64);
  const auto k = m_matrix(kLaw, g);
  const Signal bad{"", "x", TimeGrid(32, 0.1), std::vector<double>(32, 1.0)};
  CHECK_THROWS_AS(solve_projection(k, bad, Regularizer::tikhonov(1.0)), ConfigError);
}
