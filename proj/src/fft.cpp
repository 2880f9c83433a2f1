#include "tat/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace tat {

namespace {
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Dft::Dft(int n, int sign) : n_(n), plan_(nullptr) {
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto* a = fftw_alloc_complex(n);
  // In-place plan; unaligned flag because callers pass std::vector storage.
  plan_ = fftw_plan_dft_1d(n, a, a, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(a);
  if (!plan_) throw std::runtime_error("fftw plan creation failed");
}

Dft::~Dft() {
  std::lock_guard<std::mutex> lock(plan_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

void Dft::execute(const std::complex<double>* in, std::complex<double>* out) const {
  if (in != out) std::copy(in, in + n_, out);
  auto* p = reinterpret_cast<fftw_complex*>(out);
  fftw_execute_dft(static_cast<fftw_plan>(plan_), p, p);
}

}  // namespace tat
