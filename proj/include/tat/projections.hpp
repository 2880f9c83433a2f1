#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace tat {

using Vec3 = Eigen::Vector3d;

struct Ball {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
  double amplitude = 1.0;
};

struct Phantom {
  std::vector<Ball> balls;

  // Throws ConfigError unless every ball lies in the open ball of radius r0 about the origin.
  void validate(double r0) const;
  double value(const Vec3& x) const;
  double max_extent() const;  // max |c| + R
};

// Area of the sphere of radius t about x inside each ball, times amplitude.
double spherical_projection(const Phantom& ph, const Vec3& x, double t);

// Area of the disk (plane {y : y.n = s}) cut from each ball, times amplitude.
double planar_projection(const Phantom& ph, const Vec3& n, double s);

// Integral of the phantom along the line x + z n.
double line_integral(const Phantom& ph, const Vec3& n, const Vec3& x);

struct CircleResult {
  double value = 0.0;
  int nodes = 0;
  bool converged = true;
};

// Integral of the line-integral image over the circle of radius t about x in the plane through the
// origin normal to n. Per ball, the arc inside the disk is mapped by theta = theta0 sin(phi), which makes
// the square-root edge smooth, and summed with the trapezoid rule; nodes double from max(16, t/dt) until
// the Richardson estimate falls below rel_tol.
CircleResult circular_projection(const Phantom& ph, const Vec3& n, const Vec3& x, double t, double dt = 1e-2,
                                 double rel_tol = 1e-10);

enum class DetectorKind { PointSphere, PlanarTangent, LineArray };

const char* to_string(DetectorKind k);
DetectorKind detector_kind_from_string(const std::string& s);

// PointSphere: positions r0 * directions[i] with quadrature weights. PlanarTangent: unit normals; the detector
// plane is {y : y.n = r0}. LineArray: lines parallel to `normal` through the points r0 * directions[i],
// which lie on the circle in the plane through the origin normal to `normal`.
struct DetectorSet {
  DetectorKind kind = DetectorKind::PointSphere;
  double r0 = 1.0;
  Vec3 normal = Vec3::UnitZ();
  std::vector<Vec3> directions;
  std::vector<double> weights;

  void validate() const;
  Vec3 position(int i) const { return r0 * directions[i]; }
  int size() const { return static_cast<int>(directions.size()); }
};

// Equally spaced points on the circle of radius r0 in the plane normal to n.
DetectorSet line_array(const Vec3& n, double r0, int count);

}  // namespace tat
