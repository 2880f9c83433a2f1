#pragma once

#include <string>
#include <vector>

#include "tat/forward.hpp"
#include "tat/projections.hpp"

namespace tat {

struct SphereRule {
  int degree = 0;
  std::vector<Vec3> directions;
  std::vector<double> weights;  // sum to 4 pi
};

std::vector<int> lebedev_sizes();
SphereRule lebedev(int points);

// Cube [-a, a]^3 sampled at m points per axis (endpoints included); index (i, j, k) -> (i * m + j) * m + k
// with i along x.
struct VolumeGrid {
  double a = 0.5;
  int m = 64;
  std::vector<double> values;

  double h() const { return 2.0 * a / (m - 1); }
  double coord(int i) const { return -a + i * h(); }
  size_t index(int i, int j, int k) const { return (static_cast<size_t>(i) * m + j) * m + k; }
  Vec3 point(int i, int j, int k) const { return {coord(i), coord(j), coord(k)}; }
  void validate(double r0) const;
};

struct BackprojectionOptions {
  bool parallel = true;
};

// phi(x) = (1/2pi) div int_{S^2} n(x') p0(x', |x' - x|) dA(x'), p0 = d/dt [R_sp / (4 pi t)], for detectors on
// the unit sphere. p0 is differenced on the time grid, interpolated linearly at |x' - x|, the vector field is
// accumulated per node and its divergence is taken with centered differences (one-sided at the faces).
VolumeGrid spherical_backprojection(const SphereRule& rule, const std::vector<ProjectionSignal>& projections,
                                    double a, int m, const BackprojectionOptions& opt = {});

struct RadonRecord {
  Vec3 normal;
  double offset;
  double value;
};

// Recovered planar projections, column j at offset r0 - s_j, re-indexed as (normal, signed offset) records.
std::vector<RadonRecord> planar_projection_recovery(const std::vector<Vec3>& normals,
                                                    const std::vector<ProjectionSignal>& solutions, double r0);

struct VolumeError {
  double rel_l2 = 0.0;
  double center_value = 0.0;
  double center_error = 0.0;
  double outside_fraction = 0.0;  // energy beyond the support dilated by 3 voxels
};

// Errors of a reconstruction against the phantom indicator sampled at the nodes. The center value is
// trilinearly interpolated at the first ball's center.
VolumeError volume_error(const VolumeGrid& v, const Phantom& ph);

void write_volume_binary(const VolumeGrid& v, const std::string& path);
void write_volume_slice_csv(const VolumeGrid& v, int k, const std::string& path);

}  // namespace tat
