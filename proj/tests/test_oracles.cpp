#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "dqw/errors.hpp"
#include "dqw/oracles.hpp"

using namespace dqw;
using oracle::Branch;

TEST_CASE("characteristic curves, g = -0.2") {
  CHECK(oracle::characteristic_position(Branch::Plus, -0.2, 10.0, 0.0) ==
        doctest::Approx(43.2339188121647).epsilon(1e-13));
  CHECK(oracle::characteristic_position(Branch::Minus, -0.2, 10.0, 0.0) ==
        doctest::Approx(-3.23391881216468).epsilon(1e-13));
  CHECK(oracle::characteristic_position(Branch::Plus, -0.2, 50.0, 7.0) ==
        doctest::Approx(7.0 + 1005.23648969876).epsilon(1e-13));
  CHECK(oracle::characteristic_position(Branch::Minus, -0.2, 50.0, 0.0) ==
        doctest::Approx(-5.2364896987558).epsilon(1e-12));
  CHECK(oracle::characteristic_position(Branch::Plus, -0.2, 0.0, 3.0) == 3.0);
}

TEST_CASE("characteristic velocities") {
  CHECK(oracle::characteristic_velocity(Branch::Plus, -0.2, 0.0) == 1.0);
  CHECK(oracle::characteristic_velocity(Branch::Minus, -0.2, 0.0) == -1.0);
  CHECK(oracle::characteristic_velocity(Branch::Plus, -0.2, 5.0) ==
        doctest::Approx(2.0 + std::sqrt(5.0)).epsilon(1e-14));
  CHECK(oracle::characteristic_velocity(Branch::Minus, -0.2, 5.0) ==
        doctest::Approx(2.0 - std::sqrt(5.0)).epsilon(1e-13));
}

TEST_CASE("weak-field expansion of the characteristics") {
  // x1 = x1_0 +/- x0 - g x0^2 + O(g^2 x0^3)
  const double g = 1e-3;
  for (double x0 : {1.0, 5.0, 20.0}) {
    const double corr = 10.0 * g * g * x0 * x0 * x0;
    CHECK(std::abs(oracle::characteristic_position(Branch::Plus, g, x0, 0.0) - (x0 - g * x0 * x0)) < corr);
    CHECK(std::abs(oracle::characteristic_position(Branch::Minus, g, x0, 0.0) - (-x0 - g * x0 * x0)) < corr);
  }
  CHECK(oracle::characteristic_position(Branch::Plus, 0.0, 4.0, 1.0) == 5.0);
  CHECK(oracle::characteristic_position(Branch::Minus, 0.0, 4.0, 1.0) == -3.0);
  CHECK(oracle::characteristic_position(Branch::Plus, 1e-12, 4.0, 1.0) == doctest::Approx(5.0));
}

TEST_CASE("dispersion oracle") {
  SUBCASE("determinant-one coin") {
    const auto w = oracle::dispersion_omega(0.15, 0.05, CoinVariant::DeterminantOne);
    CHECK(w[0] == doctest::Approx(0.15752179146673623).epsilon(1e-14));
    CHECK(w[1] == -w[0]);
    const auto w0 = oracle::dispersion_omega(0.0, 0.3, CoinVariant::DeterminantOne);
    CHECK(w0[0] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(oracle::dispersion_omega(1.0, 0.3, CoinVariant::DeterminantOne)[0] ==
          doctest::Approx(0.8807090819818907).epsilon(1e-14));
  }
  SUBCASE("paper-literal coin is gapless at k = 0") {
    for (double th : {0.0, 0.2, 1.0, 2.5}) {
      const auto w = oracle::dispersion_omega(0.0, th, CoinVariant::PaperLiteral);
      CHECK(w[0] == 0.0);
      CHECK(std::abs(w[1]) == doctest::Approx(std::numbers::pi));
    }
  }
  SUBCASE("paper-literal eigenvalues are unimodular roots of the characteristic polynomial") {
    const double k = 0.4, th = 0.7;
    const auto w = oracle::dispersion_omega(k, th, CoinVariant::PaperLiteral);
    // det(coin diag(u-, u+)) = -1, trace = cos th (e^{i sin k} - e^{-i sin k})
    const cplx mu0 = std::polar(1.0, w[0]), mu1 = std::polar(1.0, w[1]);
    CHECK(std::abs(mu0 * mu1 + 1.0) < 1e-14);
    CHECK(std::abs(mu0 + mu1 - cplx(0, 2.0 * std::cos(th) * std::sin(std::sin(k)))) < 1e-14);
  }
}

TEST_CASE("naive DFT") {
  std::vector<cplx> delta(8, 0.0);
  delta[0] = 1.0;
  for (const auto& z : oracle::dft(delta)) CHECK(std::abs(z - 1.0) < 1e-15);
  std::vector<cplx> f{1.0, cplx(0, 2), -3.0, 0.5, 2.0};
  const auto back = oracle::inverse_dft(oracle::dft(f));
  for (std::size_t p = 0; p < f.size(); ++p) CHECK(std::abs(back[p] - f[p]) < 1e-14);
}

TEST_CASE("Fourier step at x0 = 0") {
  const LatticeSpec l(16, 1.0);
  WalkState s(l);
  s.minus[3] = 0.6;
  s.plus[9] = 0.8;
  const auto f = oracle::to_fourier(s);
  CHECK(f.norm() == doctest::Approx(1.0).epsilon(1e-14));
  const auto g = oracle::gem_fourier_step(f, -0.2, 0.0, CoinVariant::DeterminantOne);
  CHECK(g.j == 1);
  for (std::size_t k = 0; k < 16; ++k) {
    const double kn = 2.0 * std::numbers::pi * k / 16.0;
    CHECK(std::abs(g.hat_minus[k] - f.hat_minus[k] * std::polar(1.0, std::sin(kn))) < 1e-14);
    CHECK(std::abs(g.hat_plus[k] - f.hat_plus[k] * std::polar(1.0, -std::sin(kn))) < 1e-14);
  }
}

namespace {

WalkState gem_packet(std::size_t n) {
  PacketSpec spec;
  spec.center = n / 4.0;
  spec.variance = 100;
  spec.mix_minus = 0.6;
  spec.mix_plus = 0.8;
  return init_packet(spec, LatticeSpec(n, 1.0));
}

RunRecord walk(const MetricField& metric, double m, WalkState s, std::size_t steps) {
  WalkOptions o;
  o.set_strategy(UnitarizeStrategy::Exponential);
  RecorderConfig rc;
  rc.keep_amplitudes = true;
  return WalkEngine(metric, m, o).evolve(s, steps, rc);
}

}  // namespace

TEST_CASE("spectral GEM walk matches the Fourier oracle") {
  const auto init = gem_packet(256);
  const auto a = walk(MetricField::gem(-0.2), 0.2, init, 50);
  const auto b = oracle::gem_fourier_evolve(init, -0.2, 0.2, CoinVariant::DeterminantOne, 50);
  CHECK(oracle::lattice_vs_fourier(a, b) < 1e-10);
  CHECK(b.norm.back() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Fourier oracle at g = 0 is the flat exponential walk") {
  const auto init = gem_packet(128);
  const auto a = walk(MetricField::flat(), 0.5, init, 30);
  const auto b = oracle::gem_fourier_evolve(init, 0.0, 0.5, CoinVariant::DeterminantOne, 30);
  CHECK(oracle::lattice_vs_fourier(a, b) < 1e-12);
}

TEST_CASE("comparison edge cases") {
  const auto init = gem_packet(64);
  const auto a0 = walk(MetricField::gem(-0.2), 0.2, init, 0);
  const auto b0 = oracle::gem_fourier_evolve(init, -0.2, 0.2, CoinVariant::DeterminantOne, 0);
  CHECK(oracle::lattice_vs_fourier(a0, b0) < 1e-15);

  const auto b5 = oracle::gem_fourier_evolve(init, -0.2, 0.2, CoinVariant::DeterminantOne, 5);
  CHECK_THROWS_AS(oracle::lattice_vs_fourier(a0, b5), ConfigMismatchError);
  const auto other = oracle::gem_fourier_evolve(gem_packet(128), -0.2, 0.2, CoinVariant::DeterminantOne, 0);
  CHECK_THROWS_AS(oracle::lattice_vs_fourier(a0, other), ConfigMismatchError);
}

TEST_CASE("characteristics CSV") {
  std::ostringstream os;
  os.precision(3);
  oracle::write_characteristics_csv(os, -0.2, {0.0, 10.0}, 0.0, 0.0);
  CHECK(os.precision() == 3);
  std::istringstream in(os.str());
  std::string header, cols, row0, row1;
  std::getline(in, header);
  std::getline(in, cols);
  std::getline(in, row0);
  std::getline(in, row1);
  CHECK(header == "# dqw characteristics v1 g=-0.20000000000000001");
  CHECK(cols == "x0,x1_plus,x1_minus");
  CHECK(row0 == "0,0,0");
  CHECK(row1.rfind("10,43.23391881216", 0) == 0);
}
