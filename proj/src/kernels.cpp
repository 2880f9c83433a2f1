#include "tat/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tat/errors.hpp"
#include "shells.hpp"
#include "tat/fft.hpp"
#include "tat/quadrature.hpp"

namespace tat {

using std::numbers::pi;
using detail::shell_weight;
using detail::sinc2;

const char* to_string(KernelKind k) {
  switch (k) {
    case KernelKind::M: return "M";
    case KernelKind::Point: return "point";
    case KernelKind::Planar: return "planar";
    case KernelKind::Line: return "line";
    case KernelKind::Custom: return "custom";
  }
  return "?";
}

KernelKind kernel_kind_from_string(const std::string& s) {
  if (s == "M") return KernelKind::M;
  if (s == "point") return KernelKind::Point;
  if (s == "planar") return KernelKind::Planar;
  if (s == "line") return KernelKind::Line;
  if (s == "custom") return KernelKind::Custom;
  throw ConfigError("unknown kernel kind: " + s);
}

std::vector<double> default_weights(int n) {
  std::vector<double> w(n, 1.0);
  w[0] = 0.5;
  return w;
}

Eigen::MatrixXd KernelMatrix::quadrature_matrix() const {
  Eigen::VectorXd wd(n());
  for (int j = 0; j < n(); ++j) wd[j] = weights[j] * grid.dt;
  return values * wd.asDiagonal();
}

Eigen::VectorXd KernelMatrix::apply(const Eigen::VectorXd& q) const {
  Eigen::VectorXd wq(n());
  for (int j = 0; j < n(); ++j) wq[j] = weights[j] * grid.dt * q[j];
  return values * wq;
}

bool KernelMatrix::support_ok() const {
  if (!values.allFinite()) return false;
  if (!causal_mask) return true;
  for (int j = 0; j < values.cols(); ++j)
    for (int i = 0; i < j - lead && i < values.rows(); ++i)
      if (values(i, j) != 0.0) return false;
  return true;
}

void KernelMatrix::enforce_mask() {
  if (!causal_mask) return;
  for (int j = 0; j < values.cols(); ++j)
    for (int i = 0; i < j - lead && i < values.rows(); ++i) values(i, j) = 0.0;
}

cplx m_hat(const AttenuationLaw& law, double omega, double tprime) {
  const cplx k = wavenumber(law, omega);
  return omega_over_k(law, omega) * std::exp(cplx(0.0, 1.0) * k * std::abs(tprime)) / std::sqrt(2.0 * pi);
}

namespace {



enum class Factor { OmegaOverK, IOmega };

// Spectral synthesis of hat-projected kernels h_{t'}(tau) = (1/2pi) int F(w) e^{-alpha* t'} sinc^2(w dt/2)
// e^{-i w tau} dw on a 2n-point frequency grid. The alias shells |k| <= K are explicit; the shells beyond
// are folded into one extra row per side whose weight is the exact remainder of the sinc^2 sum and whose
// factor is evaluated at the first omitted shell. The sinc^2 shells sum to one, so the None law yields
// exactly the discrete delta.
class Synth {
 public:
  Synth(const AttenuationLaw& law, const TimeGrid& grid, int K, Factor f)
      : n_(grid.n), nw_(2 * grid.n), dt_(grid.dt), rows_(2 * K + 3), dft_(2 * grid.n, -1) {
    const FrequencyGrid fg(nw_, dt_);
    domega_ = fg.domega;
    fac_.resize(rows_ * nw_);
    a_.resize(rows_ * nw_);
    q_.resize(rows_ * nw_);
    for (int r = 0; r < rows_; ++r) {
      const int k = r - (K + 1);
      for (int l = 0; l < nw_; ++l) {
        const double w0 = fg.omega(l);
        const double w = w0 + 2.0 * pi * k / dt_;
        const double weight = shell_weight(w0, k, K, dt_);
        const cplx base = f == Factor::OmegaOverK ? omega_over_k(law, w) : cplx(0.0, w);
        const cplx a = alpha_star(law, w);
        const int idx = r * nw_ + l;
        fac_[idx] = weight * base;
        a_[idx] = a;
        q_[idx] = std::exp(-a * dt_);
      }
    }
  }

  int n() const { return n_; }
  int nw() const { return nw_; }

  void start(std::vector<cplx>& e, int j) const {
    e.resize(rows_ * nw_);
    const double tp = j * dt_;
    for (size_t i = 0; i < e.size(); ++i) e[i] = j == 0 ? cplx(1.0, 0.0) : std::exp(-a_[i] * tp);
  }
  void advance(std::vector<cplx>& e) const {
    for (size_t i = 0; i < e.size(); ++i) e[i] *= q_[i];
  }
  // h[m] for m in [0, 2n): m < n is tau = m dt, m >= n is tau = (m - 2n) dt.
  void column(const std::vector<cplx>& e, std::vector<cplx>& h) const {
    h.assign(nw_, cplx(0.0, 0.0));
    for (int r = 0; r < rows_; ++r) {
      const cplx* f = &fac_[r * nw_];
      const cplx* ee = &e[r * nw_];
      for (int l = 0; l < nw_; ++l) h[l] += f[l] * ee[l];
    }
    // The Nyquist bin has no conjugate partner on the grid; keep its real part so h is real.
    h[nw_ / 2] = h[nw_ / 2].real();
    dft_.execute(h);
    const double s = domega_ / (2.0 * pi);
    for (auto& v : h) v *= s;
  }

 private:
  int n_, nw_;
  double dt_;
  int rows_;
  double domega_ = 0.0;
  Dft dft_;
  std::vector<cplx> fac_, a_, q_;
};

struct ColumnStats {
  double leak = 0.0;
  double imag = 0.0;
  double maxre = 0.0;
};

// Fills values(i, j) = scale_j * Re h_j[i - j] for i >= j and returns per-column statistics.
template <class Scale>
void synthesize(const Synth& syn, Eigen::MatrixXd& values, std::vector<ColumnStats>& stats, bool parallel,
                Scale scale) {
  const int n = syn.n(), nw = syn.nw();
  values.setZero(n, n);
  stats.assign(n, {});
  auto run_block = [&](int j0, int j1) {
    std::vector<cplx> e, h;
    if (j0 >= j1) return;
    syn.start(e, j0);
    for (int j = j0; j < j1; ++j) {
      if (j > j0) syn.advance(e);
      syn.column(e, h);
      double neg = 0.0, tot = 0.0, im = 0.0, mr = 0.0;
      for (int m = 0; m < nw; ++m) {
        const double re = h[m].real();
        tot += re * re;
        if (m >= n) neg += re * re;
        im = std::max(im, std::abs(h[m].imag()));
        mr = std::max(mr, std::abs(re));
      }
      stats[j] = {tot > 0.0 ? neg / tot : 0.0, im, mr};
      const double sc = scale(j);
      for (int i = j; i < n; ++i) values(i, j) = sc * h[i - j].real();
    }
  };
  if (!parallel) {
    run_block(0, n);
    return;
  }
#pragma omp parallel
  {
    const int nt = omp_get_num_threads(), id = omp_get_thread_num();
    const int chunk = (n + nt - 1) / nt;
    run_block(std::min(n, id * chunk), std::min(n, (id + 1) * chunk));
  }
}

void finish_stats(KernelMatrix& k, const std::vector<ColumnStats>& stats, double leak_tol) {
  double maxre = 0.0, maxim = 0.0;
  k.max_leak = 0.0;
  int worst = 0;
  for (size_t j = 0; j < stats.size(); ++j) {
    if (stats[j].leak > k.max_leak) {
      k.max_leak = stats[j].leak;
      worst = static_cast<int>(j);
    }
    maxre = std::max(maxre, stats[j].maxre);
    maxim = std::max(maxim, stats[j].imag);
  }
  k.max_imag_ratio = maxre > 0.0 ? maxim / maxre : 0.0;
  if (k.max_leak > leak_tol) {
    std::ostringstream os;
    os << "kernel resolution guard: column " << worst << " has " << k.max_leak
       << " of its energy at t < t' (limit " << leak_tol << "); refine dt or lengthen the window";
    throw NumericalGuardError(os.str());
  }
}

std::vector<double> pulse_taps(const Pulse& p, const TimeGrid& g) {
  std::vector<double> taps;
  for (int m = 0; m < g.n && m * g.dt < p.t1; ++m) taps.push_back(g.dt * p.value(m * g.dt));
  return taps;
}

// Column j of D (centered differences, u_0 = 0 boundary row, one-sided last row) as (row, value) pairs.
int d_column(int n, double dt, int j, int* rows, double* vals) {
  int c = 0;
  if (j >= 1) {
    rows[c] = j - 1;
    vals[c++] = (j - 1 == 0) ? 1.0 / dt : 1.0 / (2.0 * dt);
  }
  if (j + 1 <= n - 2) {
    rows[c] = j + 1;
    vals[c++] = -1.0 / (2.0 * dt);
  } else if (j + 1 == n - 1) {
    rows[c] = j + 1;
    vals[c++] = -1.0 / dt;
  }
  if (j == n - 1) {
    rows[c] = j;
    vals[c++] = 1.0 / dt;
  }
  return c;
}

Eigen::MatrixXd difference_matrix(int n, double dt) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  int rows[3];
  double vals[3];
  for (int j = 0; j < n; ++j) {
    const int c = d_column(n, dt, j, rows, vals);
    for (int k = 0; k < c; ++k) d(rows[k], j) = vals[k];
  }
  return d;
}

}  // namespace

KernelMatrix m_matrix(const AttenuationLaw& law, const TimeGrid& grid, const BuildOptions& opt) {
  law.validate();
  if (!is_pow2(grid.n)) throw ConfigError("m_matrix: n must be a power of two");
  KernelMatrix k;
  k.kind = KernelKind::M;
  k.grid = grid;
  k.law = law;
  k.weights = default_weights(grid.n);
  k.causal_mask = true;
  k.lead = 0;
  Synth syn(law, grid, opt.alias, Factor::OmegaOverK);
  std::vector<ColumnStats> stats;
  synthesize(syn, k.values, stats, opt.parallel, [](int) { return 1.0; });
  finish_stats(k, stats, opt.leak_tol);
  return k;
}

KernelMatrix convolve_pulse(const KernelMatrix& m, const Pulse& pulse, const BuildOptions& opt) {
  pulse.validate();
  if (pulse.kind == PulseKind::Delta) return m;
  if (m.pulse.kind != PulseKind::Delta) throw ConfigError("convolve_pulse: kernel already carries a pulse");
  KernelMatrix out = m;
  out.pulse = pulse;
  const auto taps = pulse_taps(pulse, m.grid);
  const int n = m.n(), nt = static_cast<int>(taps.size());
  const int cols = static_cast<int>(m.values.cols());
#pragma omp parallel for schedule(dynamic, 16) if (opt.parallel)
  for (int j = 0; j < cols; ++j) {
    const int i0 = std::max(0, j - m.lead);
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      const int lo = std::max(i0, i - nt + 1);
      for (int r = lo; r <= i; ++r) s += taps[i - r] * m.values(r, j);
      out.values(i, j) = s;
    }
  }
  return out;
}

KernelMatrix n_point_from(const KernelMatrix& m, const Pulse& pulse, const BuildOptions& opt) {
  if (m.kind != KernelKind::M || m.pulse.kind != PulseKind::Delta)
    throw ConfigError("n_point_from: expects an unconvolved M kernel");
  const int n = m.n();
  const double dt = m.grid.dt;
  KernelMatrix k = m;
  k.kind = KernelKind::Point;
  k.lead = 1;
  k.values.setZero(n, n);
#pragma omp parallel for schedule(static) if (opt.parallel)
  for (int j = 1; j < n; ++j) {
    int rows[3];
    double vals[3];
    const int c = d_column(n, dt, j, rows, vals);
    const double u = 1.0 / (4.0 * pi * j * dt);
    for (int r = 0; r < c; ++r) {
      const double coef = m.weights[rows[r]] * dt * vals[r] * u / (m.weights[j] * dt);
      k.values.col(j) += coef * m.values.col(rows[r]);
    }
  }
  k.enforce_mask();
  return convolve_pulse(k, pulse, opt);
}

KernelMatrix n_point(const AttenuationLaw& law, const Pulse& pulse, const TimeGrid& grid, const BuildOptions& opt) {
  return n_point_from(m_matrix(law, grid, opt), pulse, opt);
}

KernelMatrix n_point_spectral(const AttenuationLaw& law, const Pulse& pulse, const TimeGrid& grid,
                              const BuildOptions& opt) {
  law.validate();
  if (!is_pow2(grid.n)) throw ConfigError("n_point_spectral: n must be a power of two");
  KernelMatrix k;
  k.kind = KernelKind::Point;
  k.grid = grid;
  k.law = law;
  k.weights = default_weights(grid.n);
  Synth syn(law, grid, opt.alias, Factor::IOmega);
  std::vector<ColumnStats> stats;
  const double dt = grid.dt;
  synthesize(syn, k.values, stats, opt.parallel, [dt](int j) { return j == 0 ? 0.0 : -1.0 / (4.0 * pi * j * dt); });
  // Derivative kernels are delta'-like for weak attenuation; the leak statistic is informational here.
  BuildOptions relaxed = opt;
  relaxed.leak_tol = 1.0;
  finish_stats(k, stats, relaxed.leak_tol);
  return convolve_pulse(k, pulse, opt);
}

KernelMatrix n_planar_from(const KernelMatrix& m, const Pulse& pulse, double r0, const BuildOptions& opt) {
  if (m.kind != KernelKind::M || m.pulse.kind != PulseKind::Delta)
    throw ConfigError("n_planar_from: expects an unconvolved M kernel");
  if (!(r0 > 0.0)) throw ConfigError("n_planar: r0 must be > 0");
  KernelMatrix k = convolve_pulse(m, pulse, opt);
  k.kind = KernelKind::Planar;
  k.r0 = r0;
  k.values *= 2.0;
  return k;
}

KernelMatrix n_planar(const AttenuationLaw& law, const Pulse& pulse, const TimeGrid& grid, double r0,
                      const BuildOptions& opt) {
  return n_planar_from(m_matrix(law, grid, opt), pulse, r0, opt);
}

Eigen::MatrixXd abel_matrix(const TimeGrid& grid) {
  const int n = grid.n;
  const double dt = grid.dt;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const double s = i * dt;
    for (int k = 0; k < i; ++k) {
      const double lo = k * dt, hi = (k + 1) * dt;
      const double i0 = std::asin(std::min(1.0, hi / s)) - std::asin(lo / s);
      const double i1 = std::sqrt(std::max(0.0, s * s - lo * lo)) - std::sqrt(std::max(0.0, s * s - hi * hi));
      a(i, k) += (hi * i0 - i1) / dt;
      a(i, k + 1) += (i1 - lo * i0) / dt;
    }
  }
  return a;
}

KernelMatrix n_line_from(const KernelMatrix& m, const Pulse& pulse, const BuildOptions& opt) {
  if (m.kind != KernelKind::M || m.pulse.kind != PulseKind::Delta)
    throw ConfigError("n_line_from: expects an unconvolved M kernel");
  const int n = m.n();
  const double dt = m.grid.dt;
  Eigen::MatrixXd b = difference_matrix(n, dt) * abel_matrix(m.grid) / (2.0 * pi);
  for (int j = 0; j < n; ++j) b.col(j) /= m.weights[j] * dt;
  KernelMatrix k = m;
  k.kind = KernelKind::Line;
  k.lead = 1;
  k.values.noalias() = m.quadrature_matrix() * b;
  k.enforce_mask();
  return convolve_pulse(k, pulse, opt);
}

KernelMatrix n_line(const AttenuationLaw& law, const Pulse& pulse, const TimeGrid& grid, const BuildOptions& opt) {
  return n_line_from(m_matrix(law, grid, opt), pulse, opt);
}

double dm_ds(const AttenuationLaw& law, double dt, double t, double s, int alias) {
  // (1/2pi) int i w e^{-alpha*(w) s} sinc^2(w dt/2) e^{-i w (t - s)} dw. The integrand is smooth in w and the
  // time profile is confined to |tau| < t + 1, so a trapezoid sum with period 4(t + 1) in tau is exact
  // up to the exponentially small wrap.
  const double tau = t - s;
  const double dw = 2.0 * pi / (4.0 * (std::abs(t) + 1.0));
  const double wmax = (2 * alias + 1) * pi / dt;
  const int L = static_cast<int>(std::ceil(wmax / dw));
  double sum = 0.0;
  for (int l = 1; l <= L; ++l) {
    const double w = l * dw;
    const cplx v = cplx(0.0, w) * std::exp(-alpha_star(law, w) * s) * sinc2(w * dt / 2.0) *
                   std::exp(cplx(0.0, -w * tau));
    sum += 2.0 * v.real();
  }
  return sum * dw / (2.0 * pi);
}

QuadratureEntry n_line_entry_quadrature(const AttenuationLaw& law, const TimeGrid& grid, int i, int j,
                                        double rel_tol, int alias) {
  QuadratureEntry out;
  if (j <= 0 || i <= j) return out;
  const double t = i * grid.dt, tp = j * grid.dt;
  const double umax = std::acosh(t / tp);
  const auto& g = gauss_legendre(16);
  double prev = 0.0;
  for (int panels = 4; panels <= 256; panels *= 2) {
    double sum = 0.0;
    const double h = umax / panels;
    for (int p = 0; p < panels; ++p)
      for (size_t k = 0; k < g.x.size(); ++k) {
        const double u = h * (p + 0.5 + 0.5 * g.x[k]);
        sum += 0.5 * h * g.w[k] * dm_ds(law, grid.dt, t, tp * std::cosh(u), alias);
      }
    const double val = -sum / (2.0 * pi);
    out.value = val;
    out.nodes = panels * 16;
    if (panels > 4 && std::abs(val - prev) <= rel_tol * std::abs(val)) {
      out.converged = true;
      return out;
    }
    prev = val;
  }
  return out;
}

}  // namespace tat
