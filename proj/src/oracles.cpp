#include "dqw/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "dqw/errors.hpp"

namespace dqw::oracle {

namespace {

// e^{-2 pi i m / N} for m = 0..N-1, each computed directly.
std::vector<cplx> twiddles(std::size_t n) {
  std::vector<cplx> w(n);
  for (std::size_t m = 0; m < n; ++m)
    w[m] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
  return w;
}

double wavenumber(std::size_t n_index, std::size_t n) {
  return 2.0 * std::numbers::pi * static_cast<double>(n_index) / static_cast<double>(n);
}

}  // namespace

std::vector<cplx> dft(const std::vector<cplx>& f) {
  const std::size_t n = f.size();
  const auto w = twiddles(n);
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc{};
    for (std::size_t p = 0; p < n; ++p) acc += f[p] * w[(k * p) % n];
    out[k] = acc;
  }
  return out;
}

std::vector<cplx> inverse_dft(const std::vector<cplx>& fhat) {
  const std::size_t n = fhat.size();
  const auto w = twiddles(n);
  std::vector<cplx> out(n);
  for (std::size_t p = 0; p < n; ++p) {
    cplx acc{};
    for (std::size_t k = 0; k < n; ++k) acc += fhat[k] * std::conj(w[(k * p) % n]);
    out[p] = acc / static_cast<double>(n);
  }
  return out;
}

double FourierState::norm() const {
  double s = 0.0;
  for (const auto& z : hat_minus) s += std::norm(z);
  for (const auto& z : hat_plus) s += std::norm(z);
  return s / static_cast<double>(hat_minus.size());
}

FourierState to_fourier(const WalkState& s) {
  FourierState f;
  f.j = s.j;
  f.eps = s.lattice.eps;
  f.hat_minus = dft(s.minus);
  f.hat_plus = dft(s.plus);
  return f;
}

WalkState to_lattice(const FourierState& s, const LatticeSpec& lattice) {
  WalkState w(lattice);
  w.j = s.j;
  w.minus = inverse_dft(s.hat_minus);
  w.plus = inverse_dft(s.hat_plus);
  return w;
}

FourierState gem_fourier_step(const FourierState& s, double g, double m, CoinVariant coin) {
  const std::size_t n = s.hat_minus.size();
  const double theta = std::asinh(2.0 * g * s.eps * static_cast<double>(s.j));
  const double theta_m = s.eps * m * std::cosh(theta);
  const double c = std::cos(theta_m);
  const double sn = std::sin(theta_m);
  const cplx i{0.0, 1.0};
  // Row two of the coin: paper-literal (i s, -c), determinant-one (-i s, c).
  const cplx c21 = (coin == CoinVariant::PaperLiteral) ? i * sn : -i * sn;
  const cplx c22 = (coin == CoinVariant::PaperLiteral) ? cplx(-c) : cplx(c);

  FourierState out;
  out.j = s.j + 1;
  out.eps = s.eps;
  out.hat_minus.resize(n);
  out.hat_plus.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double sk = std::sin(wavenumber(k, n));
    const cplx um = std::exp(i * std::exp(theta) * sk);
    const cplx up = std::exp(-i * std::exp(-theta) * sk);
    const cplx a = um * s.hat_minus[k];
    const cplx b = up * s.hat_plus[k];
    out.hat_minus[k] = c * a - i * sn * b;
    out.hat_plus[k] = c21 * a + c22 * b;
  }
  return out;
}

RunRecord gem_fourier_evolve(const WalkState& initial, double g, double m, CoinVariant coin,
                             std::size_t n_steps) {
  RunRecord rec;
  rec.lattice = initial.lattice;
  FourierState f = to_fourier(initial);
  auto observe = [&](const WalkState& w) {
    rec.steps.push_back(w.j);
    rec.norm.push_back(w.norm());
    rec.amplitudes.push_back(w);
  };
  observe(initial);
  for (std::size_t i = 0; i < n_steps; ++i) {
    f = gem_fourier_step(f, g, m, coin);
    observe(to_lattice(f, initial.lattice));
  }
  return rec;
}

double characteristic_velocity(Branch branch, double g, double x0) {
  const double b = 2.0 * g * x0;
  const double root = std::sqrt(1.0 + b * b);
  return branch == Branch::Plus ? -b + root : -b - root;
}

double characteristic_position(Branch branch, double g, double x0, double x1_0) {
  if (g == 0.0) return branch == Branch::Plus ? x1_0 + x0 : x1_0 - x0;
  const double theta = std::asinh(2.0 * g * x0);
  if (branch == Branch::Plus) return x1_0 + (theta - 0.5 * std::expm1(-2.0 * theta)) / (4.0 * g);
  return x1_0 - (theta + 0.5 * std::expm1(2.0 * theta)) / (4.0 * g);
}

std::array<double, 2> dispersion_omega(double k, double theta_m, CoinVariant coin) {
  const double s = std::sin(std::sin(k));
  const double ct = std::cos(theta_m);
  if (coin == CoinVariant::DeterminantOne) {
    const double cw = std::clamp(ct * std::cos(std::sin(k)), -1.0, 1.0);
    const double w = std::acos(cw);
    return {w, -w};
  }
  const double re = std::sqrt(std::max(0.0, 1.0 - ct * ct * s * s));
  const double im = ct * s;
  return {std::arg(cplx(re, im)), std::arg(cplx(-re, im))};
}

double lattice_vs_fourier(const RunRecord& a, const RunRecord& b) {
  if (!(a.lattice == b.lattice)) throw ConfigMismatchError("records use different lattices");
  if (a.steps != b.steps) throw ConfigMismatchError("records cover different steps");
  if (a.amplitudes.size() != a.steps.size() || b.amplitudes.size() != b.steps.size())
    throw ConfigMismatchError("records do not carry amplitudes for every step");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    const auto& x = a.amplitudes[i];
    const auto& y = b.amplitudes[i];
    for (std::size_t p = 0; p < x.minus.size(); ++p) {
      worst = std::max(worst, std::abs(x.minus[p] - y.minus[p]));
      worst = std::max(worst, std::abs(x.plus[p] - y.plus[p]));
    }
  }
  return worst;
}

void write_characteristics_csv(std::ostream& os, double g, const std::vector<double>& x0,
                               double x1_plus0, double x1_minus0) {
  const auto old = os.precision(17);
  os << "# dqw characteristics v1 g=" << g << '\n';
  os << "x0,x1_plus,x1_minus\n";
  for (double t : x0)
    os << t << ',' << characteristic_position(Branch::Plus, g, t, x1_plus0) << ','
       << characteristic_position(Branch::Minus, g, t, x1_minus0) << '\n';
  os.precision(old);
}

}  // namespace dqw::oracle
