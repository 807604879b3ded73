#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace dqw {

using cplx = std::complex<double>;

enum class CoinVariant { PaperLiteral, DeterminantOne };

// Inner loops of one walk step.  The functions in `kernels` are OpenMP
// parallel over lattice sites; `kernels::serial` holds the reference
// implementation the tests compare against.  Every site (or row) is computed
// with the same operation order in both, so results are bitwise identical.
namespace kernels {

// out_p = diag_p in_p + upper_p in_{p+1} + lower_p in_{p-1}, periodic.
void apply_banded(std::span<const double> diag, std::span<const double> upper,
                  std::span<const double> lower, std::span<const cplx> in, std::span<cplx> out);

// data_p *= mult_p
void multiply(std::span<cplx> data, std::span<const cplx> mult);

// out = U in with U row-major n x n.
void apply_dense(const cplx* rowmajor, std::size_t n, std::span<const cplx> in,
                 std::span<cplx> out);

// Site-wise 2x2 coin with angle theta_p.
void apply_coin(std::span<cplx> minus, std::span<cplx> plus, std::span<const double> angles,
                CoinVariant variant);

// out_p = |minus_p|^2 + |plus_p|^2
void density(std::span<const cplx> minus, std::span<const cplx> plus, std::span<double> out);

namespace serial {
void apply_banded(std::span<const double> diag, std::span<const double> upper,
                  std::span<const double> lower, std::span<const cplx> in, std::span<cplx> out);
void multiply(std::span<cplx> data, std::span<const cplx> mult);
void apply_dense(const cplx* rowmajor, std::size_t n, std::span<const cplx> in,
                 std::span<cplx> out);
void apply_coin(std::span<cplx> minus, std::span<cplx> plus, std::span<const double> angles,
                CoinVariant variant);
void density(std::span<const cplx> minus, std::span<const cplx> plus, std::span<double> out);
}  // namespace serial

}  // namespace kernels
}  // namespace dqw
