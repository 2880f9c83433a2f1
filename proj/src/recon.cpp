#include "tat/recon.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "tat/errors.hpp"

namespace tat {

using std::numbers::pi;

void VolumeGrid::validate(double r0) const {
  if (m < 8) throw ConfigError("volume: m must be >= 8");
  if (!(a > 0.0) || std::sqrt(3.0) * a >= r0) throw ConfigError("volume: cube must lie inside the detector sphere");
}

namespace {

// d/dt [R_sp / (4 pi t)] by centered differences, one-sided at the ends.
std::vector<double> pressure_from_projection(const ProjectionSignal& p) {
  const int n = p.grid.n;
  const double dt = p.grid.dt;
  std::vector<double> u(n), g(n);
  for (int i = 0; i < n; ++i) u[i] = i == 0 ? 0.0 : p.values[i] / (4.0 * pi * i * dt);
  g[0] = (u[1] - u[0]) / dt;
  for (int i = 1; i < n - 1; ++i) g[i] = (u[i + 1] - u[i - 1]) / (2.0 * dt);
  g[n - 1] = (u[n - 1] - u[n - 2]) / dt;
  return g;
}

}  // namespace

VolumeGrid spherical_backprojection(const SphereRule& rule, const std::vector<ProjectionSignal>& projections,
                                    double a, int m, const BackprojectionOptions& opt) {
  if (projections.size() != rule.directions.size())
    throw ConfigError("spherical_backprojection: projection count does not match the sphere rule");
  VolumeGrid vol;
  vol.a = a;
  vol.m = m;
  vol.validate(1.0);
  if (rule.degree > 0 && rule.degree < 17)
    std::fprintf(stderr, "warning: sphere rule degree %d is low for backprojection\n", rule.degree);
  const int nd = static_cast<int>(projections.size());
  std::vector<std::vector<double>> g(nd);
  double tmax = 1e300;
  for (int d = 0; d < nd; ++d) {
    g[d] = pressure_from_projection(projections[d]);
    tmax = std::min(tmax, projections[d].grid.span());
  }
  // Farthest node from any detector on the unit sphere.
  if (1.0 + std::sqrt(3.0) * a > tmax)
    throw ConfigError("spherical_backprojection: time grid too short for the volume (interpolation out of range)");

  const size_t total = static_cast<size_t>(m) * m * m;
  std::vector<double> fx(total), fy(total), fz(total);
#pragma omp parallel for schedule(static) if (opt.parallel)
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const Vec3 x = vol.point(i, j, k);
        double sx = 0.0, sy = 0.0, sz = 0.0;
        for (int d = 0; d < nd; ++d) {
          const Vec3& nvec = rule.directions[d];
          const double r = (nvec - x).norm();
          const double dt = projections[d].grid.dt;
          const double pos = r / dt;
          const int i0 = static_cast<int>(pos);
          const double f = pos - i0;
          const double val = (1.0 - f) * g[d][i0] + f * g[d][i0 + 1];
          const double w = rule.weights[d] * val;
          sx += w * nvec.x();
          sy += w * nvec.y();
          sz += w * nvec.z();
        }
        const size_t id = vol.index(i, j, k);
        fx[id] = sx;
        fy[id] = sy;
        fz[id] = sz;
      }

  const double h = vol.h();
  auto diff = [&](const std::vector<double>& f, int i, int j, int k, int axis) {
    int c[3] = {i, j, k};
    const int ci = c[axis];
    int lo[3] = {i, j, k}, hi[3] = {i, j, k};
    double den;
    if (ci == 0) {
      hi[axis] = 1;
      den = h;
    } else if (ci == m - 1) {
      lo[axis] = m - 2;
      den = h;
    } else {
      lo[axis] = ci - 1;
      hi[axis] = ci + 1;
      den = 2.0 * h;
    }
    return (f[vol.index(hi[0], hi[1], hi[2])] - f[vol.index(lo[0], lo[1], lo[2])]) / den;
  };
  vol.values.assign(total, 0.0);
#pragma omp parallel for schedule(static) if (opt.parallel)
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        vol.values[vol.index(i, j, k)] =
            (diff(fx, i, j, k, 0) + diff(fy, i, j, k, 1) + diff(fz, i, j, k, 2)) / (2.0 * pi);
  return vol;
}

std::vector<RadonRecord> planar_projection_recovery(const std::vector<Vec3>& normals,
                                                    const std::vector<ProjectionSignal>& solutions, double r0) {
  if (normals.size() != solutions.size()) throw ConfigError("planar_projection_recovery: size mismatch");
  std::vector<RadonRecord> out;
  for (size_t d = 0; d < normals.size(); ++d) {
    const auto& s = solutions[d];
    for (int j = 0; j < s.grid.n; ++j) out.push_back({normals[d], r0 - s.grid.t(j), s.values[j]});
  }
  return out;
}

VolumeError volume_error(const VolumeGrid& v, const Phantom& ph) {
  VolumeError e;
  double num = 0.0, den = 0.0, total = 0.0, outside = 0.0;
  const double h = v.h();
  for (int i = 0; i < v.m; ++i)
    for (int j = 0; j < v.m; ++j)
      for (int k = 0; k < v.m; ++k) {
        const Vec3 x = v.point(i, j, k);
        const double ref = ph.value(x);
        const double val = v.values[v.index(i, j, k)];
        num += (val - ref) * (val - ref);
        den += ref * ref;
        total += val * val;
        bool near = false;
        for (const auto& b : ph.balls)
          if ((x - b.center).norm() < b.radius + 3.0 * h) near = true;
        if (!near) outside += val * val;
      }
  e.rel_l2 = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
  e.outside_fraction = total > 0.0 ? outside / total : 0.0;
  if (!ph.balls.empty()) {
    const Vec3 c = ph.balls[0].center;
    double pos[3];
    int base[3];
    for (int a = 0; a < 3; ++a) {
      pos[a] = (c[a] + v.a) / h;
      base[a] = std::min(v.m - 2, std::max(0, static_cast<int>(std::floor(pos[a]))));
      pos[a] -= base[a];
    }
    double s = 0.0;
    for (int di = 0; di < 2; ++di)
      for (int dj = 0; dj < 2; ++dj)
        for (int dk = 0; dk < 2; ++dk)
          s += (di ? pos[0] : 1 - pos[0]) * (dj ? pos[1] : 1 - pos[1]) * (dk ? pos[2] : 1 - pos[2]) *
               v.values[v.index(base[0] + di, base[1] + dj, base[2] + dk)];
    e.center_value = s;
    e.center_error = std::abs(s - ph.balls[0].amplitude) / std::abs(ph.balls[0].amplitude);
  }
  return e;
}

void write_volume_binary(const VolumeGrid& v, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f.write("TATV", 4);
  const std::int64_t m = v.m;
  f.write(reinterpret_cast<const char*>(&v.a), sizeof v.a);
  f.write(reinterpret_cast<const char*>(&m), sizeof m);
  f.write(reinterpret_cast<const char*>(v.values.data()), static_cast<std::streamsize>(v.values.size() * sizeof(double)));
}

void write_volume_slice_csv(const VolumeGrid& v, int k, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  f << "x,y,z,value\n";
  char buf[128];
  for (int i = 0; i < v.m; ++i)
    for (int j = 0; j < v.m; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", v.coord(i), v.coord(j), v.coord(k),
                    v.values[v.index(i, j, k)]);
      f << buf;
    }
}

}  // namespace tat
