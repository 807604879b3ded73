#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "dqw/walk.hpp"

namespace dqw::oracle {

// Spinor components over lattice wavenumbers k_n = 2 pi n / N.
struct FourierState {
  std::size_t j = 0;
  double eps = 1.0;
  std::vector<cplx> hat_minus;
  std::vector<cplx> hat_plus;

  double norm() const;  // Parseval-normalised: equals the lattice norm
};

// Plain O(N^2) DFT, kept separate from the FFT used by the walk.
std::vector<cplx> dft(const std::vector<cplx>& f);
std::vector<cplx> inverse_dft(const std::vector<cplx>& fhat);

FourierState to_fourier(const WalkState& s);
WalkState to_lattice(const FourierState& s, const LatticeSpec& lattice);

/// One step of the constant-field walk in k-space:
///   u-(k) = exp(i e^{theta_j} sin k), u+(k) = exp(-i e^{-theta_j} sin k),
///   sinh theta_j = 2 g eps j, (theta_M)_j = eps m cosh theta_j,
///   hat_{j+1} = coin(theta_M) diag(u-, u+) hat_j.
FourierState gem_fourier_step(const FourierState& s, double g, double m, CoinVariant coin);

/// Evolves `initial` with gem_fourier_step and returns the lattice-space
/// trajectory (amplitudes kept at every step).
RunRecord gem_fourier_evolve(const WalkState& initial, double g, double m, CoinVariant coin,
                             std::size_t n_steps);

enum class Branch { Plus, Minus };

/// Null characteristic of ds^2 = dx0^2 - 4 g x0 dx0 dx1 - dx1^2 through
/// (0, x1_0), integrated from the roots v = -2 g x0 +/- sqrt(1 + 4 g^2 x0^2).
double characteristic_position(Branch branch, double g, double x0, double x1_0);
double characteristic_velocity(Branch branch, double g, double x0);

/// Eigenfrequencies of the flat one-step operator coin(theta_M) diag(e^{i sin k}, e^{-i sin k}).
/// determinant-one: {omega, -omega} with cos omega = cos theta_M cos(sin k).
/// paper-literal: arg of mu = i cos theta_M sin(sin k) +/- sqrt(1 - cos^2 theta_M sin^2(sin k)).
std::array<double, 2> dispersion_omega(double k, double theta_m, CoinVariant coin);

/// max over recorded steps and sites of |Phi^A - Phi^B|.  Throws
/// ConfigMismatchError when lattices or step lists differ.
double lattice_vs_fourier(const RunRecord& a, const RunRecord& b);

// Header line then "x0,x1_plus,x1_minus" per x0.
void write_characteristics_csv(std::ostream& os, double g, const std::vector<double>& x0,
                               double x1_plus0, double x1_minus0);

}  // namespace dqw::oracle
