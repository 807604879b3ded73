#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dqw/kernels.hpp"

namespace dqw::validation {

struct Check {
  std::string name;
  double measured = 0.0;
  std::string tolerance;  // human-readable bound, e.g. "< 1e-12"
  bool passed = false;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

// Suites: unitarity, dispersion, geometry, oracle.
Report run_suite(const std::string& suite, std::uint64_t seed);
bool is_suite(const std::string& suite);
void print_report(std::ostream& os, const Report& report);

struct DispersionSample {
  double k = 0.0;      // lattice wavenumber actually used (on the Fourier grid)
  double omega = 0.0;  // positive eigenfrequency of the measured 2x2 block
  std::size_t n_sites = 0;
};

/// Measures the one-step eigenfrequency of the flat exponential-flavor walk
/// at the grid mode closest to `k_target` by applying the walk to the two
/// plane-wave spinors and diagonalising the resulting 2x2 block.
DispersionSample measure_flat_dispersion(double k_target, double eps, double mass, CoinVariant coin);

/// Relative error of omega/eps against sqrt(kappa^2 + m^2), kappa = k/eps.
double dispersion_relative_error(const DispersionSample& s, double eps, double mass);

}  // namespace dqw::validation
