#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>

#include "tat/forward.hpp"
#include "tat/kernels.hpp"

namespace tat {

enum class RegKind { Tikhonov, TruncatedSVD, None };

struct Regularizer {
  RegKind kind = RegKind::Tikhonov;
  double lambda = -1.0;     // Tikhonov; negative selects default_lambda_rel * sigma_max^2
  double threshold = 1e-8;  // TruncatedSVD, relative to sigma_max, in (0, 1)

  static Regularizer tikhonov(double lambda) { return {RegKind::Tikhonov, lambda, 0.0}; }
  static Regularizer tsvd(double threshold) { return {RegKind::TruncatedSVD, 0.0, threshold}; }
  static Regularizer none() { return {RegKind::None, 0.0, 0.0}; }
  void validate() const;
  std::string describe() const;
};

const char* to_string(RegKind k);
RegKind reg_kind_from_string(const std::string& s);

// Relative Tikhonov weight used when lambda is left unspecified.
inline constexpr double default_lambda_rel = 1e-14;

struct Solution {
  ProjectionSignal q;
  double residual_norm = 0.0;
  double solution_norm = 0.0;
  Regularizer reg;  // with the lambda actually used
};

double sigma_max(const KernelMatrix& k);

// argmin |A q - p|^2 + lambda |q|^2 with A = K diag(w dt), by Cholesky on the normal equations; the
// truncated pseudo-inverse for TruncatedSVD; exact solve for None (forward substitution when the kernel is
// lower triangular).
Solution solve_projection(const KernelMatrix& kernel, const Signal& data, const Regularizer& reg);

// SVD of the quadrature matrix, computed once and shared read-only across detectors and lambda values.
class SvdFactor {
 public:
  explicit SvdFactor(const KernelMatrix& kernel);
  const KernelMatrix& kernel() const { return *kernel_; }
  double sigma_max() const { return s_[0]; }
  const Eigen::VectorXd& singular_values() const { return s_; }
  Solution solve(const Signal& data, const Regularizer& reg) const;
  double residual(const Eigen::VectorXd& beta, double data_perp2, double lambda) const;
  Eigen::VectorXd project(const Signal& data, double* perp2) const;

 private:
  std::shared_ptr<const KernelMatrix> kernel_;
  Eigen::MatrixXd u_, v_;
  Eigen::VectorXd s_;
};

struct DiscrepancyBracket {
  double lo_rel = 1e-20;  // relative to sigma_max^2
  double hi_rel = 1e2;
};

// Bisects log(lambda) so that the residual equals noise_level * |data| within 5%.
Regularizer discrepancy_select(const SvdFactor& f, const Signal& data, double noise_level,
                               const DiscrepancyBracket& br = {});
Regularizer discrepancy_select(const KernelMatrix& kernel, const Signal& data, double noise_level,
                               const DiscrepancyBracket& br = {});

// Solves [I * M] p0 = p for the ideal-pulse pressure.
Solution deattenuate(const Signal& data, const AttenuationLaw& law, const Pulse& pulse, const Regularizer& reg,
                     const BuildOptions& opt = {});

}  // namespace tat
