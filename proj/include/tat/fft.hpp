#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace tat {

// Complex DFT of fixed size. Plans are created under a lock; execute() is safe to call
// concurrently on distinct buffers.
class Dft {
 public:
  // sign -1: sum x e^{-2 pi i j k / n}; sign +1: sum x e^{+2 pi i j k / n}. Unnormalized.
  Dft(int n, int sign);
  ~Dft();
  Dft(const Dft&) = delete;
  Dft& operator=(const Dft&) = delete;

  int size() const { return n_; }
  void execute(const std::complex<double>* in, std::complex<double>* out) const;
  void execute(std::vector<std::complex<double>>& inout) const { execute(inout.data(), inout.data()); }

 private:
  int n_;
  void* plan_;
};

}  // namespace tat
