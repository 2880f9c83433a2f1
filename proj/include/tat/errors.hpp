#pragma once

#include <stdexcept>
#include <string>

namespace tat {

// Invalid user input: bad parameters, unknown config keys, geometry outside the detector ball.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numerical guard tripped: unresolved grid, kernel leakage, quadrature non-convergence, bracket failure.
struct NumericalGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tat
