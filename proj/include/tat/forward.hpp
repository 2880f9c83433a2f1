#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tat/attenuation.hpp"
#include "tat/grid.hpp"
#include "tat/kernels.hpp"
#include "tat/projections.hpp"

namespace tat {

// One detector time series; values[0] is t = 0. Used for pressures and for projections.
struct Signal {
  std::string detector_id;
  std::string geometry;
  TimeGrid grid;
  std::vector<double> values;

  Eigen::VectorXd vec() const { return Eigen::Map<const Eigen::VectorXd>(values.data(), values.size()); }
};
using PressureSignal = Signal;
using ProjectionSignal = Signal;

// Analytic projection series sampled on the grid.
std::vector<double> sample_spherical(const Phantom& ph, const Vec3& x, const TimeGrid& grid);
std::vector<double> sample_planar(const Phantom& ph, const Vec3& n, double r0, const TimeGrid& grid);  // at r0 - s
std::vector<double> sample_circular(const Phantom& ph, const Vec3& n, const Vec3& x, const TimeGrid& grid);

// d/dt [R_sp / (4 pi t)] per ball. At the two kinks |d - t| = R the value is the mean of the one-sided
// limits, which is what a centered difference of R_sp / (4 pi t) returns there.
PressureSignal ideal_point_pressure(const Phantom& ph, const Vec3& x, const TimeGrid& grid);

// Integral of ideal_point_pressure along the line x + z n (closed form per ball).
PressureSignal ideal_line_pressure(const Phantom& ph, const Vec3& n, const Vec3& x, const TimeGrid& grid);

PressureSignal attenuated_point_data(const KernelMatrix& npoint, const Phantom& ph, const Vec3& x);
PressureSignal attenuated_point_data(const Phantom& ph, const AttenuationLaw& law, const Pulse& pulse, const Vec3& x,
                                     const TimeGrid& grid, const BuildOptions& opt = {});

PressureSignal attenuated_planar_data(const KernelMatrix& nplanar, const Phantom& ph, const Vec3& n);
PressureSignal attenuated_planar_data(const Phantom& ph, const AttenuationLaw& law, const Pulse& pulse, const Vec3& n,
                                      double r0, const TimeGrid& grid, const BuildOptions& opt = {});

PressureSignal attenuated_line_data(const KernelMatrix& nline, const Phantom& ph, const Vec3& n, const Vec3& x);
PressureSignal attenuated_line_data(const Phantom& ph, const AttenuationLaw& law, const Pulse& pulse, const Vec3& n,
                                    const Vec3& x, const TimeGrid& grid, const BuildOptions& opt = {});

// Spherical: per ball, Gauss-Legendre in the radius times a Lebedev rule on the sphere. Cartesian: uniform
// lattice with cell masses h^3, kept as a low-order cross-check.
enum class GreenLattice { Spherical, Cartesian };

struct GreenOptions {
  int max_nodes = 10000;  // lattice nodes over all balls
  GreenLattice lattice = GreenLattice::Spherical;
  int alias = 4;
  bool parallel = true;
  // rerun refined (half spacing; or doubled radial nodes and the next Lebedev rule) and report the change
  bool check_refinement = false;
};

struct GreenResult {
  PressureSignal data;
  int nodes = 0;
  double spacing = 0.0;             // Cartesian spacing, or the largest radial gap for the spherical rule
  double refinement_change = -1.0;  // relative L2 change under refinement, when checked
  bool lattice_warning = false;     // change above 2%
};

// Superposition of differentiated Green-function responses (-i w) e^{i k r} / (4 pi r) of point masses on a
// quadrature lattice inside each ball, hat projected onto the grid.
GreenResult green_forward(const Phantom& ph, const AttenuationLaw& law, const Vec3& x, const TimeGrid& grid,
                          const GreenOptions& opt = {});

// Adds white Gaussian noise with standard deviation rel * rms(values); deterministic in seed.
void add_noise(Signal& s, double rel, std::uint64_t seed);

double rel_l2(const std::vector<double>& a, const std::vector<double>& ref);

}  // namespace tat
