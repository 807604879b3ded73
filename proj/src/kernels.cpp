#include "dqw/kernels.hpp"

#include <cmath>

namespace dqw::kernels {

namespace {

inline cplx banded_site(const double* diag, const double* upper, const double* lower,
                        const cplx* in, std::size_t n, std::size_t p) {
  const std::size_t right = (p + 1 == n) ? 0 : p + 1;
  const std::size_t left = (p == 0) ? n - 1 : p - 1;
  return diag[p] * in[p] + upper[p] * in[right] + lower[p] * in[left];
}

inline cplx dense_row(const cplx* row, const cplx* in, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t q = 0; q < n; ++q) {
    re += row[q].real() * in[q].real() - row[q].imag() * in[q].imag();
    im += row[q].real() * in[q].imag() + row[q].imag() * in[q].real();
  }
  return {re, im};
}

inline void coin_site(cplx& m, cplx& p, double theta, CoinVariant variant) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // -i s p and i s m written out in real arithmetic.
  const cplx mis_p{s * p.imag(), -s * p.real()};
  const cplx is_m{-s * m.imag(), s * m.real()};
  const cplx new_m = c * m + mis_p;
  const cplx new_p = (variant == CoinVariant::PaperLiteral) ? is_m - c * p : c * p - is_m;
  m = new_m;
  p = new_p;
}

inline std::ptrdiff_t ssize(std::size_t n) { return static_cast<std::ptrdiff_t>(n); }

}  // namespace

void apply_banded(std::span<const double> diag, std::span<const double> upper,
                  std::span<const double> lower, std::span<const cplx> in, std::span<cplx> out) {
  const std::size_t n = in.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < ssize(n); ++p)
    out[p] = banded_site(diag.data(), upper.data(), lower.data(), in.data(), n,
                         static_cast<std::size_t>(p));
}

void multiply(std::span<cplx> data, std::span<const cplx> mult) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < ssize(data.size()); ++p) data[p] *= mult[p];
}

void apply_dense(const cplx* rowmajor, std::size_t n, std::span<const cplx> in,
                 std::span<cplx> out) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < ssize(n); ++p)
    out[p] = dense_row(rowmajor + static_cast<std::size_t>(p) * n, in.data(), n);
}

void apply_coin(std::span<cplx> minus, std::span<cplx> plus, std::span<const double> angles,
                CoinVariant variant) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < ssize(minus.size()); ++p)
    coin_site(minus[p], plus[p], angles[p], variant);
}

void density(std::span<const cplx> minus, std::span<const cplx> plus, std::span<double> out) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < ssize(minus.size()); ++p)
    out[p] = std::norm(minus[p]) + std::norm(plus[p]);
}

namespace serial {

void apply_banded(std::span<const double> diag, std::span<const double> upper,
                  std::span<const double> lower, std::span<const cplx> in, std::span<cplx> out) {
  const std::size_t n = in.size();
  for (std::size_t p = 0; p < n; ++p)
    out[p] = banded_site(diag.data(), upper.data(), lower.data(), in.data(), n, p);
}

void multiply(std::span<cplx> data, std::span<const cplx> mult) {
  for (std::size_t p = 0; p < data.size(); ++p) data[p] *= mult[p];
}

void apply_dense(const cplx* rowmajor, std::size_t n, std::span<const cplx> in,
                 std::span<cplx> out) {
  for (std::size_t p = 0; p < n; ++p) out[p] = dense_row(rowmajor + p * n, in.data(), n);
}

void apply_coin(std::span<cplx> minus, std::span<cplx> plus, std::span<const double> angles,
                CoinVariant variant) {
  for (std::size_t p = 0; p < minus.size(); ++p) coin_site(minus[p], plus[p], angles[p], variant);
}

void density(std::span<const cplx> minus, std::span<const cplx> plus, std::span<double> out) {
  for (std::size_t p = 0; p < minus.size(); ++p) out[p] = std::norm(minus[p]) + std::norm(plus[p]);
}

}  // namespace serial

}  // namespace dqw::kernels
