#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "tat/attenuation.hpp"
#include "tat/grid.hpp"
#include "tat/pulse.hpp"

namespace tat {

enum class KernelKind { M, Point, Planar, Line, Custom };

const char* to_string(KernelKind k);
KernelKind kernel_kind_from_string(const std::string& s);

// Dense discretized kernel. Row i is the observation time t_i. Column j is the source sample: t'_j = j dt,
// except for Planar where column j is the distance s_j = j dt and t'_j = r0 - s_j.
//
// Discretized integral: (K q)_i = sum_j values(i, j) * weights[j] * dt * q_j.
struct KernelMatrix {
  KernelKind kind = KernelKind::Custom;
  TimeGrid grid;
  Eigen::MatrixXd values;
  std::vector<double> weights;
  bool causal_mask = true;
  // Super-diagonals allowed by the mask. Derivative stencils on the source axis reach one sample ahead.
  int lead = 0;
  AttenuationLaw law;
  Pulse pulse;
  double r0 = 0.0;
  double max_leak = 0.0;        // largest pre-mask energy fraction at t < t' over columns
  double max_imag_ratio = 0.0;  // imaginary residue of the inverse DFT, relative

  int n() const { return grid.n; }
  double source_coordinate(int j) const { return kind == KernelKind::Planar ? r0 - j * grid.dt : j * grid.dt; }
  // values * diag(weights * dt)
  Eigen::MatrixXd quadrature_matrix() const;
  Eigen::VectorXd apply(const Eigen::VectorXd& q) const;
  // True when every entry below the allowed band (i < j - lead) is exactly zero and all entries are finite.
  bool support_ok() const;
  void enforce_mask();
};

// Trapezoid weights on [0, T): the window start is an integration endpoint, the window end is not
// (kernels vanish beyond the causal diagonal).
std::vector<double> default_weights(int n);

struct BuildOptions {
  int alias = 4;          // explicit alias shells on each side; the remainder is summed in closed form
  bool parallel = true;   // OpenMP over columns; false selects the serial reference path
  double leak_tol = 1e-3;
};

// (1/sqrt(2 pi)) (omega / k) e^{i k |t'|}
cplx m_hat(const AttenuationLaw& law, double omega, double tprime);

// Hat-projected M(t_i, t'_j). Throws NumericalGuardError when the pre-mask energy at t < t' exceeds leak_tol.
KernelMatrix m_matrix(const AttenuationLaw& law, const TimeGrid& grid, const BuildOptions& opt = {});

// Left multiplication by the Toeplitz pulse matrix dt I(t_i - t_k).
KernelMatrix convolve_pulse(const KernelMatrix& m, const Pulse& pulse, const BuildOptions& opt = {});

// Point detector. Integration by parts moves d/dt' onto R_sp / (4 pi t'), which is then differenced
// on the grid: N = I * [M W D U] W^-1 with U = diag(1 / (4 pi t')), U_0 = 0.
KernelMatrix n_point(const AttenuationLaw& law, const Pulse& pulse, const TimeGrid& grid, const BuildOptions& opt = {});
KernelMatrix n_point_from(const KernelMatrix& m, const Pulse& pulse, const BuildOptions& opt = {});

// Point detector kernel from the spectral derivative: column j is -(1/(4 pi t'_j)) times the inverse DFT of
// i omega e^{-alpha* t'_j} (hat projected). Used as an independent route for attenuated laws.
KernelMatrix n_point_spectral(const AttenuationLaw& law, const Pulse& pulse, const TimeGrid& grid,
                              const BuildOptions& opt = {});

// Planar detector: N(t_i, s_j) = 2 [I * M](t_i, s_j) with s = r0 - t'.
KernelMatrix n_planar(const AttenuationLaw& law, const Pulse& pulse, const TimeGrid& grid, double r0,
                      const BuildOptions& opt = {});
KernelMatrix n_planar_from(const KernelMatrix& m, const Pulse& pulse, double r0, const BuildOptions& opt = {});

// Line detector: N = I * [M W (1/2pi) D A] W^-1 with A the product-integration matrix of the Abel
// operator q -> int_0^s q(t') / sqrt(s^2 - t'^2) dt' for piecewise linear q.
KernelMatrix n_line(const AttenuationLaw& law, const Pulse& pulse, const TimeGrid& grid, const BuildOptions& opt = {});
KernelMatrix n_line_from(const KernelMatrix& m, const Pulse& pulse, const BuildOptions& opt = {});

Eigen::MatrixXd abel_matrix(const TimeGrid& grid);

// Single entry of the line kernel from its defining integral: s = t' cosh(u), composite Gauss-Legendre,
// nodes doubled from 64 until successive values agree to rel_tol. Delta pulse only.
struct QuadratureEntry {
  double value = 0.0;
  int nodes = 0;
  bool converged = false;
};
QuadratureEntry n_line_entry_quadrature(const AttenuationLaw& law, const TimeGrid& grid, int i, int j,
                                        double rel_tol = 1e-4, int alias = 4);

// d/ds M(t, s), hat projected in t, at arbitrary t and s > 0 (direct Fourier sum).
double dm_ds(const AttenuationLaw& law, double dt, double t, double s, int alias = 4);

// Serialization. CSV carries a header of key=value comment lines; values at 17 significant digits.
void write_kernel_csv(const KernelMatrix& k, const std::string& path);
KernelMatrix read_kernel_csv(const std::string& path);
void write_kernel_binary(const KernelMatrix& k, const std::string& path);
KernelMatrix read_kernel_binary(const std::string& path);

}  // namespace tat
