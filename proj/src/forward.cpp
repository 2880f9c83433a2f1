#include "tat/forward.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "tat/errors.hpp"
#include "shells.hpp"
#include "tat/fft.hpp"
#include "tat/quadrature.hpp"
#include "tat/recon.hpp"

namespace tat {

using std::numbers::pi;
using detail::shell_weight;

std::vector<double> sample_spherical(const Phantom& ph, const Vec3& x, const TimeGrid& grid) {
  std::vector<double> v(grid.n);
  for (int i = 0; i < grid.n; ++i) v[i] = spherical_projection(ph, x, grid.t(i));
  return v;
}

std::vector<double> sample_planar(const Phantom& ph, const Vec3& n, double r0, const TimeGrid& grid) {
  std::vector<double> v(grid.n);
  for (int i = 0; i < grid.n; ++i) v[i] = planar_projection(ph, n, r0 - grid.t(i));
  return v;
}

std::vector<double> sample_circular(const Phantom& ph, const Vec3& n, const Vec3& x, const TimeGrid& grid) {
  std::vector<double> v(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const auto r = circular_projection(ph, n, x, grid.t(i), grid.dt);
    if (!r.converged) throw NumericalGuardError("circular_projection did not converge");
    v[i] = r.value;
  }
  return v;
}

PressureSignal ideal_point_pressure(const Phantom& ph, const Vec3& x, const TimeGrid& grid) {
  PressureSignal s{"", "point", grid, std::vector<double>(grid.n, 0.0)};
  for (const auto& b : ph.balls) {
    const double d = (x - b.center).norm();
    const double R = b.radius;
    for (int i = 0; i < grid.n; ++i) {
      const double t = grid.t(i);
      double v = 0.0;
      if (t + d < R) {
        v = 1.0;
      } else if (d > 0.0) {
        const double gap = std::abs(d - t);
        if (gap < R)
          v = (d - t) / (2.0 * d);
        else if (gap == R)
          v = (d - t) / (4.0 * d);
      } else if (t == R) {
        v = 0.5;
      }
      s.values[i] += b.amplitude * v;
    }
  }
  return s;
}

PressureSignal ideal_line_pressure(const Phantom& ph, const Vec3& n, const Vec3& x, const TimeGrid& grid) {
  PressureSignal s{"", "line", grid, std::vector<double>(grid.n, 0.0)};
  for (const auto& b : ph.balls) {
    const Vec3 r = b.center - x;
    const double rho = std::sqrt(std::max(0.0, r.squaredNorm() - std::pow(r.dot(n), 2)));
    if (!(rho > 0.0)) throw ConfigError("ideal_line_pressure: line passes through a ball center");
    const double R = b.radius;
    auto prim = [&](double d, double t) {
      const double z = std::sqrt(std::max(0.0, d * d - rho * rho));
      return z - t * std::asinh(z / rho);
    };
    for (int i = 0; i < grid.n; ++i) {
      const double t = grid.t(i);
      const double da = std::max(rho, t - R), db = t + R;
      if (db <= da) continue;
      s.values[i] += b.amplitude * (prim(db, t) - prim(da, t));
    }
  }
  return s;
}

namespace {

PressureSignal apply_kernel(const KernelMatrix& k, const std::vector<double>& q, const char* geometry) {
  const Eigen::VectorXd p = k.apply(Eigen::Map<const Eigen::VectorXd>(q.data(), q.size()));
  return {"", geometry, k.grid, std::vector<double>(p.data(), p.data() + p.size())};
}

}  // namespace

PressureSignal attenuated_point_data(const KernelMatrix& npoint, const Phantom& ph, const Vec3& x) {
  if (npoint.kind != KernelKind::Point) throw ConfigError("attenuated_point_data: expects a point kernel");
  return apply_kernel(npoint, sample_spherical(ph, x, npoint.grid), "point");
}

PressureSignal attenuated_point_data(const Phantom& ph, const AttenuationLaw& law, const Pulse& pulse, const Vec3& x,
                                     const TimeGrid& grid, const BuildOptions& opt) {
  return attenuated_point_data(n_point(law, pulse, grid, opt), ph, x);
}

PressureSignal attenuated_planar_data(const KernelMatrix& nplanar, const Phantom& ph, const Vec3& n) {
  if (nplanar.kind != KernelKind::Planar) throw ConfigError("attenuated_planar_data: expects a planar kernel");
  return apply_kernel(nplanar, sample_planar(ph, n, nplanar.r0, nplanar.grid), "planar");
}

PressureSignal attenuated_planar_data(const Phantom& ph, const AttenuationLaw& law, const Pulse& pulse, const Vec3& n,
                                      double r0, const TimeGrid& grid, const BuildOptions& opt) {
  return attenuated_planar_data(n_planar(law, pulse, grid, r0, opt), ph, n);
}

PressureSignal attenuated_line_data(const KernelMatrix& nline, const Phantom& ph, const Vec3& n, const Vec3& x) {
  if (nline.kind != KernelKind::Line) throw ConfigError("attenuated_line_data: expects a line kernel");
  return apply_kernel(nline, sample_circular(ph, n, x, nline.grid), "line");
}

PressureSignal attenuated_line_data(const Phantom& ph, const AttenuationLaw& law, const Pulse& pulse, const Vec3& n,
                                    const Vec3& x, const TimeGrid& grid, const BuildOptions& opt) {
  return attenuated_line_data(n_line(law, pulse, grid, opt), ph, n, x);
}

namespace {

struct Node {
  double r;
  double mass;
};

// Spherical product rule with nr radial nodes and a Lebedev rule of `points` directions per ball.
std::vector<Node> product_rule(const Phantom& ph, const Vec3& x, int nr, int points) {
  const auto& gl = gauss_legendre(nr);
  const auto sph = lebedev(points);
  std::vector<Node> nodes;
  for (const auto& b : ph.balls) {
    for (int a = 0; a < nr; ++a) {
      const double r = 0.5 * b.radius * (gl.x[a] + 1.0);
      const double wr = 0.5 * b.radius * gl.w[a] * r * r;
      for (size_t d = 0; d < sph.directions.size(); ++d)
        nodes.push_back({(b.center + r * sph.directions[d] - x).norm(), b.amplitude * wr * sph.weights[d]});
    }
  }
  return nodes;
}

// Largest min(angular degree, radial degree) that fits the node budget.
std::pair<int, int> product_size(int nballs, int max_nodes) {
  const int budget = max_nodes / std::max(1, nballs);
  const int sizes[] = {110, 302, 590, 1202};
  const int degrees[] = {17, 29, 41, 59};
  int best_nr = 0, best_p = 0, best_deg = -1;
  for (int s = 0; s < 4; ++s) {
    const int nr = budget / sizes[s];
    if (nr < 1) continue;
    const int deg = std::min(degrees[s], 2 * nr - 1);
    if (deg > best_deg) best_deg = deg, best_nr = nr, best_p = sizes[s];
  }
  if (best_deg < 0) throw ConfigError("green_forward: node budget too small for a spherical rule");
  return {best_nr, best_p};
}

std::vector<Node> lattice(const Phantom& ph, const Vec3& x, double h) {
  std::vector<Node> nodes;
  for (const auto& b : ph.balls) {
    const int m = static_cast<int>(std::floor(b.radius / h));
    const double cell = h * h * h * b.amplitude;
    for (int i = -m; i <= m; ++i)
      for (int j = -m; j <= m; ++j)
        for (int k = -m; k <= m; ++k) {
          const Vec3 off(i * h, j * h, k * h);
          if (off.norm() >= b.radius) continue;
          nodes.push_back({(b.center + off - x).norm(), cell});
        }
  }
  return nodes;
}



PressureSignal green_sum(const std::vector<Node>& nodes, const AttenuationLaw& law, const TimeGrid& grid,
                         const GreenOptions& opt) {
  const int n = grid.n, nw = 2 * n, K = opt.alias;
  const double dt = grid.dt;
  const FrequencyGrid fg(nw, dt);
  double rmin = 1e300;
  for (const auto& nd : nodes) rmin = std::min(rmin, nd.r);
  if (!(rmin > 0.0)) throw ConfigError("green_forward: detector inside the phantom lattice");

  // Kept (frequency bin, shell) pairs with their weights; shells beyond K are folded as in the kernel synthesis.
  struct Term {
    int l;
    double w;
    cplx coef;
    cplx a;
  };
  std::vector<Term> terms;
  for (int l = 0; l < nw; ++l) {
    const double w0 = fg.omega(l);
    for (int k = -(K + 1); k <= K + 1; ++k) {
      const double w = w0 + 2.0 * pi * k / dt;
      const double weight = shell_weight(w0, k, K, dt);
      const cplx a = alpha_star(law, w);
      if (weight * std::exp(-a.real() * rmin) * (1.0 + std::abs(w)) < 1e-18) continue;
      terms.push_back({l, w, weight * cplx(0.0, -w) / (4.0 * pi), a});
    }
  }
  // Fixed node blocks summed in order: the result does not depend on the thread count.
  const int nblocks = 64;
  const int nn = static_cast<int>(nodes.size());
  std::vector<std::vector<cplx>> partial(nblocks, std::vector<cplx>(terms.size()));
#pragma omp parallel for schedule(dynamic, 1) if (opt.parallel)
  for (int bidx = 0; bidx < nblocks; ++bidx) {
    auto& acc = partial[bidx];
    const int i0 = static_cast<int>(static_cast<long>(nn) * bidx / nblocks);
    const int i1 = static_cast<int>(static_cast<long>(nn) * (bidx + 1) / nblocks);
    for (int i = i0; i < i1; ++i) {
      const double r = nodes[i].r, m = nodes[i].mass / r;
      for (size_t t = 0; t < terms.size(); ++t) {
        const cplx e = std::exp(cplx(-terms[t].a.real() * r, terms[t].w * r - terms[t].a.imag() * r));
        acc[t] += m * e;
      }
    }
  }
  std::vector<cplx> spec(nw, cplx(0.0, 0.0));
  for (int bidx = 0; bidx < nblocks; ++bidx)
    for (size_t t = 0; t < terms.size(); ++t) spec[terms[t].l] += terms[t].coef * partial[bidx][t];
  spec[nw / 2] = spec[nw / 2].real();
  Dft dft(nw, -1);
  dft.execute(spec);
  PressureSignal s{"", "point", grid, std::vector<double>(n)};
  for (int i = 0; i < n; ++i) s.values[i] = spec[i].real() * fg.domega / (2.0 * pi);
  return s;
}

}  // namespace

GreenResult green_forward(const Phantom& ph, const AttenuationLaw& law, const Vec3& x, const TimeGrid& grid,
                          const GreenOptions& opt) {
  law.validate();
  if (ph.balls.empty()) return {{"", "point", grid, std::vector<double>(grid.n, 0.0)}, 0, 0.0, -1.0, false};
  GreenResult res;
  if (opt.lattice == GreenLattice::Spherical) {
    const auto [nr, points] = product_size(static_cast<int>(ph.balls.size()), opt.max_nodes);
    const auto nodes = product_rule(ph, x, nr, points);
    res.data = green_sum(nodes, law, grid, opt);
    res.nodes = static_cast<int>(nodes.size());
    double rmax = 0.0;
    for (const auto& b : ph.balls) rmax = std::max(rmax, b.radius);
    res.spacing = rmax / nr;
    if (opt.check_refinement) {
      const int next = points == 1202 ? 1202 : points == 590 ? 1202 : points == 302 ? 590 : 302;
      const auto fine = green_sum(product_rule(ph, x, 2 * nr, next), law, grid, opt);
      res.refinement_change = rel_l2(res.data.values, fine.values);
      res.lattice_warning = res.refinement_change > 0.02;
    }
    return res;
  }
  double vol = 0.0;
  for (const auto& b : ph.balls) vol += 4.0 / 3.0 * pi * std::pow(b.radius, 3);
  double h = std::cbrt(vol / opt.max_nodes);
  std::vector<Node> nodes = lattice(ph, x, h);
  while (static_cast<int>(nodes.size()) > opt.max_nodes) {
    h *= 1.01;
    nodes = lattice(ph, x, h);
  }
  res.data = green_sum(nodes, law, grid, opt);
  res.nodes = static_cast<int>(nodes.size());
  res.spacing = h;
  if (opt.check_refinement) {
    const auto fine = green_sum(lattice(ph, x, h / 2.0), law, grid, opt);
    res.refinement_change = rel_l2(res.data.values, fine.values);
    res.lattice_warning = res.refinement_change > 0.02;
  }
  return res;
}

void add_noise(Signal& s, double rel, std::uint64_t seed) {
  if (rel <= 0.0) return;
  double ss = 0.0;
  for (double v : s.values) ss += v * v;
  const double sigma = rel * std::sqrt(ss / std::max<size_t>(1, s.values.size()));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (double& v : s.values) v += sigma * nd(rng);
}

double rel_l2(const std::vector<double>& a, const std::vector<double>& ref) {
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < ref.size(); ++i) {
    num += (a[i] - ref[i]) * (a[i] - ref[i]);
    den += ref[i] * ref[i];
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace tat
