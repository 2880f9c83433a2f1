#pragma once

#include <vector>

namespace tat {

struct GaussRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Gauss-Legendre nodes by Newton iteration on P_n; cached per n, thread-safe.
const GaussRule& gauss_legendre(int n);

}  // namespace tat
