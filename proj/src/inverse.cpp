#include "tat/inverse.hpp"

#include <cmath>
#include <sstream>

#include "tat/errors.hpp"

namespace tat {

void Regularizer::validate() const {
  if (kind == RegKind::Tikhonov && !(lambda < 0.0 || lambda >= 0.0)) throw ConfigError("regularizer: lambda is NaN");
  if (kind == RegKind::TruncatedSVD && !(threshold > 0.0 && threshold < 1.0))
    throw ConfigError("regularizer: threshold must lie in (0, 1)");
}

std::string Regularizer::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << to_string(kind);
  if (kind == RegKind::Tikhonov) {
    if (lambda < 0.0)
      os << " lambda=default";
    else
      os << " lambda=" << lambda;
  }
  if (kind == RegKind::TruncatedSVD) os << " threshold=" << threshold;
  return os.str();
}

const char* to_string(RegKind k) {
  switch (k) {
    case RegKind::Tikhonov: return "Tikhonov";
    case RegKind::TruncatedSVD: return "TruncatedSVD";
    case RegKind::None: return "None";
  }
  return "?";
}

RegKind reg_kind_from_string(const std::string& s) {
  if (s == "Tikhonov" || s == "tikhonov") return RegKind::Tikhonov;
  if (s == "TruncatedSVD" || s == "tsvd") return RegKind::TruncatedSVD;
  if (s == "None" || s == "none") return RegKind::None;
  throw ConfigError("unknown regularizer kind: " + s);
}

namespace {

void check_shapes(const KernelMatrix& k, const Signal& data) {
  if (static_cast<int>(data.values.size()) != k.n() || k.values.rows() != k.n() || k.values.cols() != k.n())
    throw ConfigError("solve_projection: dimension mismatch between kernel and data");
  if (!(data.grid == k.grid)) throw ConfigError("solve_projection: kernel and data grids differ");
}

Solution finish(const KernelMatrix& k, const Eigen::MatrixXd& a, const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                const Regularizer& reg, const Signal& data) {
  Solution s;
  s.q = {data.detector_id, data.geometry, k.grid, std::vector<double>(q.data(), q.data() + q.size())};
  s.residual_norm = (a * q - p).norm();
  s.solution_norm = q.norm();
  s.reg = reg;
  return s;
}

double power_sigma_max(const Eigen::MatrixXd& a) {
  Eigen::VectorXd v = Eigen::VectorXd::Ones(a.cols()).normalized();
  double s = 0.0;
  for (int it = 0; it < 300; ++it) {
    Eigen::VectorXd w = a.transpose() * (a * v);
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    const double s_new = std::sqrt(nw);
    v = w / nw;
    if (std::abs(s_new - s) <= 1e-10 * s_new) return s_new;
    s = s_new;
  }
  return s;
}

}  // namespace

double sigma_max(const KernelMatrix& k) { return power_sigma_max(k.quadrature_matrix()); }

Solution solve_projection(const KernelMatrix& kernel, const Signal& data, const Regularizer& reg_in) {
  reg_in.validate();
  check_shapes(kernel, data);
  const Eigen::MatrixXd a = kernel.quadrature_matrix();
  const Eigen::VectorXd p = data.vec();
  Regularizer reg = reg_in;
  Eigen::VectorXd q;
  switch (reg.kind) {
    case RegKind::None: {
      if (kernel.lead == 0 && kernel.causal_mask) {
        const auto tri = a.triangularView<Eigen::Lower>();
        for (int i = 0; i < a.rows(); ++i)
          if (a(i, i) == 0.0) throw NumericalGuardError("solve_projection: singular triangular system (zero diagonal)");
        q = tri.solve(p);
      } else {
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
        qr.setThreshold(1e-14);
        if (qr.rank() < a.cols()) throw NumericalGuardError("solve_projection: singular system with reg None");
        q = qr.solve(p);
      }
      break;
    }
    case RegKind::Tikhonov: {
      if (reg.lambda < 0.0) {
        const double s = power_sigma_max(a);
        reg.lambda = default_lambda_rel * s * s;
      }
      Eigen::MatrixXd ata = a.transpose() * a;
      ata.diagonal().array() += reg.lambda;
      Eigen::LLT<Eigen::MatrixXd> llt(ata);
      if (llt.info() != Eigen::Success) {
        Eigen::LDLT<Eigen::MatrixXd> ldlt(ata);
        if (ldlt.info() != Eigen::Success) throw NumericalGuardError("solve_projection: normal equations not factorable");
        q = ldlt.solve(a.transpose() * p);
      } else {
        q = llt.solve(a.transpose() * p);
      }
      break;
    }
    case RegKind::TruncatedSVD: {
      SvdFactor f(kernel);
      return f.solve(data, reg);
    }
  }
  if (!q.allFinite()) throw NumericalGuardError("solve_projection: non-finite solution");
  return finish(kernel, a, p, q, reg, data);
}

SvdFactor::SvdFactor(const KernelMatrix& kernel) : kernel_(std::make_shared<const KernelMatrix>(kernel)) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(kernel.quadrature_matrix(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  u_ = svd.matrixU();
  v_ = svd.matrixV();
  s_ = svd.singularValues();
}

Eigen::VectorXd SvdFactor::project(const Signal& data, double* perp2) const {
  const Eigen::VectorXd p = data.vec();
  Eigen::VectorXd beta = u_.transpose() * p;
  if (perp2) *perp2 = std::max(0.0, p.squaredNorm() - beta.squaredNorm());
  return beta;
}

double SvdFactor::residual(const Eigen::VectorXd& beta, double perp2, double lambda) const {
  double r2 = perp2;
  for (int i = 0; i < s_.size(); ++i) {
    const double f = lambda / (s_[i] * s_[i] + lambda);
    r2 += f * f * beta[i] * beta[i];
  }
  return std::sqrt(r2);
}

Solution SvdFactor::solve(const Signal& data, const Regularizer& reg_in) const {
  reg_in.validate();
  check_shapes(*kernel_, data);
  Regularizer reg = reg_in;
  const Eigen::VectorXd beta = project(data, nullptr);
  Eigen::VectorXd coef(s_.size());
  if (reg.kind == RegKind::Tikhonov && reg.lambda < 0.0) reg.lambda = default_lambda_rel * s_[0] * s_[0];
  for (int i = 0; i < s_.size(); ++i) {
    const double s = s_[i];
    switch (reg.kind) {
      case RegKind::Tikhonov: coef[i] = s / (s * s + reg.lambda) * beta[i]; break;
      case RegKind::TruncatedSVD: coef[i] = s >= reg.threshold * s_[0] ? beta[i] / s : 0.0; break;
      case RegKind::None:
        if (s <= 1e-14 * s_[0]) throw NumericalGuardError("solve: singular system with reg None");
        coef[i] = beta[i] / s;
        break;
    }
  }
  const Eigen::VectorXd q = v_ * coef;
  return finish(*kernel_, kernel_->quadrature_matrix(), data.vec(), q, reg, data);
}

Regularizer discrepancy_select(const SvdFactor& f, const Signal& data, double noise_level,
                               const DiscrepancyBracket& br) {
  const double s2 = f.sigma_max() * f.sigma_max();
  const double lo = br.lo_rel * s2, hi = br.hi_rel * s2;
  if (!(noise_level > 0.0)) return Regularizer::tikhonov(lo);
  double perp2 = 0.0;
  const Eigen::VectorXd beta = f.project(data, &perp2);
  const double target = noise_level * data.vec().norm();
  if (f.residual(beta, perp2, lo) > 1.05 * target)
    throw NumericalGuardError("discrepancy_select: residual exceeds the noise level even at the smallest lambda");
  if (f.residual(beta, perp2, hi) <= target) return Regularizer::tikhonov(hi);
  double a = std::log(lo), b = std::log(hi);
  for (int it = 0; it < 200 && b - a > 1e-10; ++it) {
    const double m = 0.5 * (a + b);
    (f.residual(beta, perp2, std::exp(m)) < target ? a : b) = m;
  }
  return Regularizer::tikhonov(std::exp(0.5 * (a + b)));
}

Regularizer discrepancy_select(const KernelMatrix& kernel, const Signal& data, double noise_level,
                               const DiscrepancyBracket& br) {
  return discrepancy_select(SvdFactor(kernel), data, noise_level, br);
}

Solution deattenuate(const Signal& data, const AttenuationLaw& law, const Pulse& pulse, const Regularizer& reg,
                     const BuildOptions& opt) {
  const KernelMatrix k = convolve_pulse(m_matrix(law, data.grid, opt), pulse, opt);
  Solution s = solve_projection(k, data, reg);
  s.q.geometry = data.geometry;
  return s;
}

}  // namespace tat
