#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "dqw/kernels.hpp"

namespace dqw {

// Periodic lattice shared by time and space: x0 = j eps, x1 = p eps.
struct LatticeSpec {
  std::size_t n_sites = 0;
  double eps = 1.0;

  LatticeSpec() = default;
  LatticeSpec(std::size_t n, double e);  // throws SizeError for n < 4 or eps <= 0

  double x0(std::size_t j) const { return static_cast<double>(j) * eps; }
  double x1(std::size_t p) const { return static_cast<double>(p) * eps; }
};

inline bool operator==(const LatticeSpec& a, const LatticeSpec& b) {
  return a.n_sites == b.n_sites && a.eps == b.eps;
}

using DenseOperator = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Real periodic tridiagonal operator:
//   (B f)_p = diag_p f_p + upper_p f_{p+1} + lower_p f_{p-1}.
struct PeriodicBanded {
  std::vector<double> diag;
  std::vector<double> upper;
  std::vector<double> lower;

  explicit PeriodicBanded(std::size_t n = 0) : diag(n, 0.0), upper(n, 0.0), lower(n, 0.0) {}
  std::size_t size() const { return diag.size(); }
  DenseOperator to_dense() const;
  PeriodicBanded adjoint() const;
};

enum class StencilDirection { Forward, Backward };
enum class DirectionRule { Upwind, Forward, Backward };

// One-sided difference operator L_D:
//   forward  (L f)_p = a_p (f_{p+1} - f_p)
//   backward (L f)_p = a_p (f_p - f_{p-1})
struct StencilOperator {
  std::vector<double> coeffs;
  StencilDirection direction = StencilDirection::Forward;
  PeriodicBanded band;
};

/// Upwind picks forward when every a_p >= 0 and backward when every a_p < 0;
/// a field that changes sign throws MixedSignError.  An explicit rule skips
/// the sign check (used by the hybrid flat walk).
StencilOperator assemble_stencil(std::span<const double> a, const LatticeSpec& lattice,
                                 DirectionRule rule = DirectionRule::Upwind);

/// (B - B^dagger) / 2.
PeriodicBanded antisymmetrize(const PeriodicBanded& op);

/// Induced infinity norm of (1+L)^dagger (1+L) - I, computed in banded form.
double affine_unitarity_defect(const StencilOperator& op);
bool affine_is_unitary(const StencilOperator& op, double tol = 1e-12);

enum class UnitarizeStrategy { Auto, Affine, Exponential };
enum class ExponentialPath { Auto, Spectral, Dense };

struct UnitarizeOptions {
  UnitarizeStrategy strategy = UnitarizeStrategy::Auto;
  ExponentialPath path = ExponentialPath::Auto;
  std::size_t dense_cap = 4096;
  double affine_tol = 1e-12;
};

// A unitary acting on one spinor component.
class ComponentUnitary {
public:
  enum class Flavor { Affine, Exponential };
  enum class Storage { Banded, Spectral, Dense };

  static ComponentUnitary affine(PeriodicBanded one_plus_l);
  // Multiplier per Fourier mode k_n = 2 pi n / N (e^{i k p} convention).
  static ComponentUnitary spectral(std::vector<cplx> multipliers);
  static ComponentUnitary dense(DenseOperator u);

  Flavor flavor() const { return flavor_; }
  Storage storage() const { return storage_; }
  std::size_t size() const;

  const PeriodicBanded& banded() const { return banded_; }
  const std::vector<cplx>& multipliers() const { return multipliers_; }
  const DenseOperator& matrix() const { return dense_; }

  // out = U in; `in` and `out` must not alias.
  void apply(std::span<const cplx> in, std::span<cplx> out) const;
  DenseOperator to_dense() const;

  /// Max absolute entry of U^dagger U - I (for spectral storage this is
  /// max | |m_k|^2 - 1 |, which is the same quantity).
  double unitarity_defect() const;

private:
  Flavor flavor_ = Flavor::Affine;
  Storage storage_ = Storage::Banded;
  PeriodicBanded banded_;
  std::vector<cplx> multipliers_;
  DenseOperator dense_;
};

/// Exactly unitary version of 1 + L_D: the affine form when admissible (and
/// allowed by the strategy), otherwise exp((L_D - L_D^dagger)/2), by Fourier
/// multipliers exp(i a sin k) for site-independent a or by eigendecomposition
/// of the Hermitian i (L_D - L_D^dagger)/2.
ComponentUnitary unitarize(const StencilOperator& op, const LatticeSpec& lattice,
                           const UnitarizeOptions& options = {});

/// exp(K) for a real skew-symmetric periodic banded K, via the Hermitian
/// eigendecomposition of iK.
DenseOperator exp_skew_dense(const PeriodicBanded& skew);

using CoinMatrix = Eigen::Matrix2cd;

/// paper-literal: [[cos, -i sin], [i sin, -cos]]  (Hermitian, det -1)
/// determinant-one: [[cos, -i sin], [-i sin, cos]] = exp(-i theta sigma_x)
CoinMatrix coin_matrix(double theta, CoinVariant variant);

struct StepUnitary {
  ComponentUnitary minus;
  ComponentUnitary plus;
  std::vector<double> coin_angles;
  CoinVariant coin = CoinVariant::DeterminantOne;
};

// Rows of "re im re im ..." for each operator row.
void write_dense_operator(std::ostream& os, const DenseOperator& u);

// Forward DFT and its inverse used by the spectral storage
// (fhat_n = sum_p f_p e^{-i k_n p}; inverse carries the 1/N).
void fft_forward(std::span<const cplx> in, std::span<cplx> out);
void fft_inverse(std::span<const cplx> in, std::span<cplx> out);

}  // namespace dqw
