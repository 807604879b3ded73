#include "dqw/validation.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "dqw/config.hpp"
#include "dqw/errors.hpp"
#include "dqw/geometry.hpp"
#include "dqw/lattice.hpp"
#include "dqw/oracles.hpp"
#include "dqw/walk.hpp"

namespace dqw::validation {

namespace {

Check below(std::string name, double measured, double bound) {
  std::ostringstream tol;
  tol << "< " << bound;
  return {std::move(name), measured, tol.str(), measured < bound};
}

Check within(std::string name, double measured, double lo, double hi) {
  std::ostringstream tol;
  tol << "in [" << lo << ", " << hi << "]";
  return {std::move(name), measured, tol.str(), measured >= lo && measured <= hi};
}

std::vector<double> random_field(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> mag(0.2, 3.0);
  const double sign = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
  std::vector<double> a(n);
  for (auto& v : a) v = sign * mag(rng);
  return a;
}

Report unitarity_suite(std::uint64_t seed) {
  Report r{"unitarity", {}};
  std::mt19937_64 rng(seed);
  UnitarizeOptions dense;
  dense.strategy = UnitarizeStrategy::Exponential;
  dense.path = ExponentialPath::Dense;

  for (std::size_t n : {8u, 64u, 256u}) {
    const LatticeSpec lattice(n, 1.0);
    double worst = 0.0;
    const int count = (n == 64) ? 100 : 20;
    for (int i = 0; i < count; ++i) {
      const auto a = random_field(rng, n);
      worst = std::max(worst, unitarize(assemble_stencil(a, lattice), lattice, dense).unitarity_defect());
    }
    r.checks.push_back(below(std::to_string(count) + " random site-dependent fields, N=" +
                                 std::to_string(n) + ": max |U^dag U - I|",
                             worst, 1e-12));
  }

  const LatticeSpec lattice(256, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::vector<double> a(256, random_field(rng, 1)[0]);
    UnitarizeOptions spectral;
    spectral.strategy = UnitarizeStrategy::Exponential;
    worst = std::max(worst, unitarize(assemble_stencil(a, lattice), lattice, spectral).unitarity_defect());
  }
  r.checks.push_back(below("100 random uniform fields, spectral path: max | |m_k|^2 - 1 |", worst, 1e-12));

  const std::vector<double> ones(256, 1.0), minus_ones(256, -1.0);
  r.checks.push_back(below("flat forward shift 1 + L_D: |U^dag U - I|",
                           affine_unitarity_defect(assemble_stencil(ones, lattice)), 1e-12));
  r.checks.push_back(below("flat backward shift 1 + L_D: |U^dag U - I|",
                           affine_unitarity_defect(assemble_stencil(minus_ones, lattice)), 1e-12));
  return r;
}

Report geometry_suite(std::uint64_t seed) {
  Report r{"geometry", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(0.2, 3.0), off(-2.0, 2.0);
  double worst_res = 0.0;
  double worst_ratio = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const MetricComponents g{pos(rng), off(rng), -pos(rng)};
    const GeometryFrame f = frame_from_components(g, 1.0);
    worst_res = std::max(worst_res, zweibein_residual(f));
    worst_ratio = std::max(worst_ratio, std::abs(f.lam) / f.c);
  }
  r.checks.push_back(below("1000 random metrics: zweibein residual", worst_res, 1e-12));
  r.checks.push_back(below("1000 random metrics: max |lambda| / c", worst_ratio, 1.0));

  std::uniform_real_distribution<double> gd(-1.0, 1.0), td(0.0, 50.0);
  double worst_closed = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double g = gd(rng);
    const double x0 = td(rng);
    const double m = 1.0;
    const GeometryFrame f = frame_at(MetricField::gem(g), x0, 0.0, m);
    const double th = std::asinh(2.0 * g * x0);
    const double ch = std::cosh(th);
    const double devs[] = {std::abs(f.S - ch) / ch, std::abs(f.lam + std::sinh(th)) / ch,
                           std::abs(f.c - ch) / ch, std::abs(f.Meff - m * ch) / ch};
    worst_closed = std::max(worst_closed, *std::max_element(std::begin(devs), std::end(devs)));
  }
  r.checks.push_back(below("1000 random GEM frames vs cosh/sinh closed forms (relative)",
                           worst_closed, 1e-12));
  return r;
}

Report dispersion_suite() {
  Report r{"dispersion", {}};
  const double kappa = 3.0;
  const double m = 1.0;
  const double eps[] = {0.05, 0.025, 0.0125};
  double err[3];
  for (int i = 0; i < 3; ++i) {
    const auto s = measure_flat_dispersion(kappa * eps[i], eps[i], m, CoinVariant::DeterminantOne);
    err[i] = dispersion_relative_error(s, eps[i], m);
  }
  r.checks.push_back(below("relative omega error at eps=0.05 (m=1, kappa=3)", err[0], 0.01));
  r.checks.push_back(within("error ratio eps 0.05 -> 0.025", err[0] / err[1], 3.0, 5.0));
  r.checks.push_back(within("error ratio eps 0.025 -> 0.0125", err[1] / err[2], 3.0, 5.0));

  double worst = 0.0;
  for (double th : {0.0, 0.1, 0.7, 1.3, 2.9}) {
    const auto w = oracle::dispersion_omega(0.0, th, CoinVariant::PaperLiteral);
    for (double x : w) worst = std::max(worst, std::min(std::abs(x), std::abs(std::abs(x) - std::numbers::pi)));
  }
  r.checks.push_back(below("paper-literal coin at k=0: distance of omega from {0, pi}", worst, 1e-12));
  return r;
}

Report oracle_suite(std::uint64_t seed) {
  Report r{"oracle", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> gd(-0.5, 0.5), td(0.0, 20.0);
  const double h = 1e-4;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double g = gd(rng);
    const double t = td(rng) + h;
    for (auto b : {oracle::Branch::Plus, oracle::Branch::Minus}) {
      const double fd = (oracle::characteristic_position(b, g, t + h, 0.0) -
                         oracle::characteristic_position(b, g, t - h, 0.0)) /
                        (2.0 * h);
      worst = std::max(worst, std::abs(fd - oracle::characteristic_velocity(b, g, t)));
    }
  }
  r.checks.push_back(below("characteristic slope vs celerity (100 random g, x0)", worst, 1e-6));

  const LatticeSpec lattice(64, 1.0);
  PacketSpec packet;
  packet.center = 32;
  packet.variance = 20;
  packet.mix_minus = std::sqrt(0.5);
  packet.mix_plus = std::sqrt(0.5);
  const WalkState init = init_packet(packet, lattice);
  for (auto coin : {CoinVariant::DeterminantOne, CoinVariant::PaperLiteral}) {
    WalkOptions opts;
    opts.coin = coin;
    opts.set_strategy(UnitarizeStrategy::Exponential);
    opts.set_path(ExponentialPath::Dense);
    WalkEngine engine(MetricField::gem(-0.2), 0.3, opts);
    WalkState s = init;
    RecorderConfig rc;
    rc.keep_amplitudes = true;
    const RunRecord walk = engine.evolve(s, 20, rc);
    const RunRecord fourier = oracle::gem_fourier_evolve(init, -0.2, 0.3, coin, 20);
    r.checks.push_back(below("dense walk vs Fourier oracle, N=64, 20 steps, " + to_string(coin),
                             oracle::lattice_vs_fourier(walk, fourier), 1e-10));
  }

  oracle::FourierState f = oracle::to_fourier(init);
  double drift = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double before = f.norm();
    f = oracle::gem_fourier_step(f, -0.2, 0.5, CoinVariant::DeterminantOne);
    drift = std::max(drift, std::abs(f.norm() - before));
  }
  r.checks.push_back(below("Fourier oracle per-step norm change", drift, 1e-14));
  return r;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool is_suite(const std::string& s) {
  return s == "unitarity" || s == "dispersion" || s == "geometry" || s == "oracle";
}

Report run_suite(const std::string& suite, std::uint64_t seed) {
  if (suite == "unitarity") return unitarity_suite(seed);
  if (suite == "geometry") return geometry_suite(seed);
  if (suite == "dispersion") return dispersion_suite();
  if (suite == "oracle") return oracle_suite(seed);
  throw Error("unknown validation suite '" + suite + "'");
}

void print_report(std::ostream& os, const Report& report) {
  for (const auto& c : report.checks)
    os << (c.passed ? "PASS" : "FAIL") << "  " << c.name << ": " << std::setprecision(6)
       << c.measured << " (" << c.tolerance << ")\n";
  os << report.suite << ": " << (report.passed() ? "all checks passed" : "FAILED") << '\n';
}

DispersionSample measure_flat_dispersion(double k_target, double eps, double mass, CoinVariant coin) {
  DispersionSample s;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t n = 256; n <= 8192; ++n) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    const double idx = std::round(k_target / step);
    if (idx < 1.0) continue;
    const double miss = std::abs(idx * step - k_target);
    if (miss < best) {
      best = miss;
      s.n_sites = n;
      s.k = idx * step;
    }
  }

  const LatticeSpec lattice(s.n_sites, eps);
  WalkOptions opts;
  opts.coin = coin;
  opts.set_strategy(UnitarizeStrategy::Exponential);
  WalkEngine engine(MetricField::flat(), mass, opts);

  const std::size_t n = s.n_sites;
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<cplx> wave(n);
  for (std::size_t p = 0; p < n; ++p) wave[p] = std::polar(amp, s.k * static_cast<double>(p));

  Eigen::Matrix2cd block;
  for (int col = 0; col < 2; ++col) {
    WalkState st(lattice);
    (col == 0 ? st.minus : st.plus) = wave;
    engine.step(st);
    cplx pm{}, pp{};
    for (std::size_t p = 0; p < n; ++p) {
      pm += std::conj(wave[p]) * st.minus[p];
      pp += std::conj(wave[p]) * st.plus[p];
    }
    block(0, col) = pm;
    block(1, col) = pp;
  }
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(block);
  s.omega = std::max(std::abs(std::arg(es.eigenvalues()[0])), std::abs(std::arg(es.eigenvalues()[1])));
  return s;
}

double dispersion_relative_error(const DispersionSample& s, double eps, double mass) {
  const double kappa = s.k / eps;
  const double exact = std::sqrt(kappa * kappa + mass * mass);
  return std::abs(s.omega / eps - exact) / exact;
}

}  // namespace dqw::validation
