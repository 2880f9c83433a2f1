#include "tat/projections.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tat/errors.hpp"

namespace tat {

using std::numbers::pi;

void Phantom::validate(double r0) const {
  for (size_t i = 0; i < balls.size(); ++i) {
    const auto& b = balls[i];
    if (!(b.radius > 0.0) || !std::isfinite(b.radius)) throw ConfigError("phantom: ball radius must be > 0");
    if (!b.center.allFinite() || !std::isfinite(b.amplitude)) throw ConfigError("phantom: non-finite ball");
    if (b.center.norm() + b.radius >= r0) {
      std::ostringstream os;
      os << "phantom: ball " << i << " is not inside the detector ball of radius " << r0;
      throw ConfigError(os.str());
    }
  }
}

double Phantom::value(const Vec3& x) const {
  double v = 0.0;
  for (const auto& b : balls)
    if ((x - b.center).norm() < b.radius) v += b.amplitude;
  return v;
}

double Phantom::max_extent() const {
  double e = 0.0;
  for (const auto& b : balls) e = std::max(e, b.center.norm() + b.radius);
  return e;
}

double spherical_projection(const Phantom& ph, const Vec3& x, double t) {
  if (t < 0.0) return 0.0;
  double s = 0.0;
  for (const auto& b : ph.balls) {
    const double d = (x - b.center).norm();
    const double R = b.radius;
    if (t + d <= R)
      s += b.amplitude * 4.0 * pi * t * t;
    else if (d > 0.0 && std::abs(d - t) <= R)
      s += b.amplitude * pi * t * (R * R - (d - t) * (d - t)) / d;
  }
  return s;
}

double planar_projection(const Phantom& ph, const Vec3& n, double s) {
  double v = 0.0;
  for (const auto& b : ph.balls) {
    const double h = s - b.center.dot(n);
    v += b.amplitude * pi * std::max(0.0, b.radius * b.radius - h * h);
  }
  return v;
}

double line_integral(const Phantom& ph, const Vec3& n, const Vec3& x) {
  double v = 0.0;
  for (const auto& b : ph.balls) {
    const Vec3 r = b.center - x;
    const double rho2 = std::max(0.0, r.squaredNorm() - std::pow(r.dot(n), 2));
    v += b.amplitude * 2.0 * std::sqrt(std::max(0.0, b.radius * b.radius - rho2));
  }
  return v;
}

namespace {

// int_{-theta0}^{theta0} sqrt(cos(theta) - cos(theta0)) dtheta, trapezoid in phi with theta = theta0 sin(phi).
double arc_integral(double theta0, int nodes) {
  const double h = pi / nodes;
  double s = 0.0;
  for (int k = 1; k < nodes; ++k) {
    const double phi = -pi / 2 + k * h;
    const double th = theta0 * std::sin(phi);
    const double diff = 2.0 * std::sin(0.5 * (theta0 + th)) * std::sin(0.5 * (theta0 - th));
    s += std::sqrt(std::max(0.0, diff)) * theta0 * std::cos(phi);
  }
  return s * h;
}

}  // namespace

CircleResult circular_projection(const Phantom& ph, const Vec3& n, const Vec3& x, double t, double dt,
                                 double rel_tol) {
  CircleResult res;
  if (t <= 0.0) return res;
  const int n0 = std::max(16, static_cast<int>(std::ceil(t / dt)));
  for (const auto& b : ph.balls) {
    const Vec3 cp = b.center - b.center.dot(n) * n;
    const double D = (cp - x).norm();
    const double R = b.radius;
    double v = 0.0;
    if (D == 0.0 || D + t <= R || std::abs(D - t) >= R) {
      // Circle entirely inside or outside the disk, or concentric.
      if (D == 0.0) {
        v = t < R ? 2.0 * pi * t * 2.0 * std::sqrt(R * R - t * t) : 0.0;
      } else if (D + t <= R) {
        // Smooth periodic integrand: trapezoid converges geometrically.
        auto full = [&](int m) {
          double s = 0.0;
          for (int k = 0; k < m; ++k) {
            const double th = 2.0 * pi * k / m;
            const double rho2 = D * D + t * t - 2.0 * D * t * std::cos(th);
            s += 2.0 * std::sqrt(std::max(0.0, R * R - rho2));
          }
          return s * t * 2.0 * pi / m;
        };
        int m = n0;
        double prev = full(m);
        for (;;) {
          m *= 2;
          const double cur = full(m);
          res.nodes = std::max(res.nodes, m);
          if (std::abs(cur - prev) <= rel_tol * std::abs(cur) || m > (1 << 22)) {
            res.converged = res.converged && std::abs(cur - prev) <= rel_tol * std::abs(cur);
            v = cur;
            break;
          }
          prev = cur;
        }
      }
    } else {
      const double kappa = (D * D + t * t - R * R) / (2.0 * D * t);
      const double theta0 = std::acos(std::max(-1.0, std::min(1.0, kappa)));
      const double scale = 2.0 * t * std::sqrt(2.0 * D * t);
      int m = n0;
      double prev = arc_integral(theta0, m);
      double cur = prev;
      bool ok = false;
      for (int it = 0; it < 20; ++it) {
        m *= 2;
        cur = arc_integral(theta0, m);
        // O(h^4) trapezoid: the mapped integrand and its first derivative vanish at both ends.
        const double rich = (16.0 * cur - prev) / 15.0;
        if (std::abs(rich - cur) <= rel_tol * std::abs(rich)) {
          cur = rich;
          ok = true;
          break;
        }
        prev = cur;
      }
      res.nodes = std::max(res.nodes, m);
      res.converged = res.converged && ok;
      v = scale * cur;
    }
    res.value += b.amplitude * v;
  }
  return res;
}

const char* to_string(DetectorKind k) {
  switch (k) {
    case DetectorKind::PointSphere: return "point";
    case DetectorKind::PlanarTangent: return "planar";
    case DetectorKind::LineArray: return "line";
  }
  return "?";
}

DetectorKind detector_kind_from_string(const std::string& s) {
  if (s == "point") return DetectorKind::PointSphere;
  if (s == "planar") return DetectorKind::PlanarTangent;
  if (s == "line") return DetectorKind::LineArray;
  throw ConfigError("unknown detector kind: " + s);
}

void DetectorSet::validate() const {
  if (!(r0 > 0.0)) throw ConfigError("detectors: r0 must be > 0");
  if (directions.empty()) throw ConfigError("detectors: empty detector set");
  for (const auto& d : directions)
    if (std::abs(d.norm() - 1.0) > 1e-12) throw ConfigError("detectors: direction is not a unit vector");
  if (kind == DetectorKind::LineArray) {
    if (std::abs(normal.norm() - 1.0) > 1e-12) throw ConfigError("detectors: line normal is not a unit vector");
    for (const auto& d : directions)
      if (std::abs(d.dot(normal)) > 1e-12) throw ConfigError("detectors: line position is not in the plane");
  }
  if (!weights.empty() && weights.size() != directions.size())
    throw ConfigError("detectors: weight count does not match direction count");
}

DetectorSet line_array(const Vec3& n, double r0, int count) {
  DetectorSet d;
  d.kind = DetectorKind::LineArray;
  d.r0 = r0;
  d.normal = n.normalized();
  Vec3 e1 = d.normal.unitOrthogonal();
  Vec3 e2 = d.normal.cross(e1).normalized();
  for (int i = 0; i < count; ++i) {
    const double a = 2.0 * pi * i / count;
    d.directions.push_back((std::cos(a) * e1 + std::sin(a) * e2).normalized());
  }
  d.weights.assign(count, 2.0 * pi / count);
  return d;
}

}  // namespace tat
