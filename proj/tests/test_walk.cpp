#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "dqw/errors.hpp"
#include "dqw/walk.hpp"

using namespace dqw;

namespace {

WalkOptions affine_options() {
  WalkOptions o;
  o.set_strategy(UnitarizeStrategy::Affine);
  return o;
}

WalkOptions exponential_options() {
  WalkOptions o;
  o.set_strategy(UnitarizeStrategy::Exponential);
  return o;
}

double l2_distance(const WalkState& a, const WalkState& b) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.minus.size(); ++p)
    s += std::norm(a.minus[p] - b.minus[p]) + std::norm(a.plus[p] - b.plus[p]);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("gaussian packet") {
  const LatticeSpec l(2048, 1.0);
  PacketSpec spec;
  spec.center = 1024;
  const auto s = init_packet(spec, l);
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.component_norm(false) == 0.0);
  CHECK(centroid(s, Component::Plus) == doctest::Approx(1024.0).epsilon(1e-12));

  // Variance of |Phi|^2 is the configured sigma^2.
  double var = 0.0;
  for (std::size_t p = 0; p < l.n_sites; ++p) var += std::norm(s.plus[p]) * std::pow(p - 1024.0, 2);
  CHECK(var == doctest::Approx(300.0).epsilon(1e-9));

  spec.mix_minus = std::sqrt(0.5);
  spec.mix_plus = std::sqrt(0.5);
  const auto both = init_packet(spec, l);
  CHECK(both.component_norm(false) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(both.component_norm(true) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("packet momentum and wrapping") {
  const LatticeSpec l(256, 1.0);
  PacketSpec spec;
  spec.center = 2;
  spec.variance = 25;
  spec.momentum = 0.3;
  const auto s = init_packet(spec, l);
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(s.plus[255]) == doctest::Approx(std::abs(s.plus[5])).epsilon(1e-12));
  CHECK(std::arg(s.plus[3] / s.plus[2]) == doctest::Approx(0.3));
  CHECK(centroid(s, Component::Plus) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("packet too wide") {
  PacketSpec spec;
  spec.variance = 300;
  CHECK_THROWS_AS(init_packet(spec, LatticeSpec(100, 1.0)), PacketTooWideError);
  CHECK_NOTHROW(init_packet(spec, LatticeSpec(128, 1.0)));
}

TEST_CASE("delta packet") {
  const LatticeSpec l(16, 1.0);
  PacketSpec spec;
  spec.delta = true;
  spec.center = 5;
  const auto s = init_packet(spec, l);
  CHECK(s.plus[5] == cplx(1.0));
  CHECK(s.norm() == 1.0);
  const auto d = probability_density(s);
  CHECK(std::accumulate(d.begin(), d.end(), 0.0) == 1.0);
  CHECK(centroid(s, Component::Both) == 5.0);
}

TEST_CASE("centroid") {
  const LatticeSpec l(64, 0.5);
  WalkState s(l);
  SUBCASE("symmetric pair") {
    s.plus[10] = s.plus[14] = std::sqrt(0.5);
    CHECK(centroid(s, Component::Plus) == doctest::Approx(6.0));
  }
  SUBCASE("pair straddling the boundary") {
    s.plus[63] = s.plus[1] = std::sqrt(0.5);
    CHECK(std::abs(std::remainder(centroid(s, Component::Plus), 32.0)) < 1e-12);
    CHECK(centroid(s, Component::Plus, 64.0) == doctest::Approx(32.0));
  }
  SUBCASE("empty component") {
    s.plus[3] = 1.0;
    CHECK_THROWS_AS(centroid(s, Component::Minus), EmptyComponentError);
  }
}

TEST_CASE("flat affine massless walk is a pure shift") {
  const LatticeSpec l(32, 1.0);
  WalkEngine engine(MetricField::flat(), 0.0, affine_options());
  const auto u = engine.build_step(0, l);
  CHECK(u.minus.storage() == ComponentUnitary::Storage::Banded);
  CHECK(u.plus.storage() == ComponentUnitary::Storage::Banded);

  WalkState s(l);
  s.minus[7] = 1.0;
  s.plus[20] = 1.0;
  engine.step(s);
  CHECK(s.j == 1);
  CHECK(s.minus[6] == cplx(1.0));
  CHECK(s.plus[21] == cplx(1.0));
  CHECK(s.norm() == 2.0);

  // Phi+ advects with vPlus = +1: centroid eps (p0 + j), unwrapped.
  WalkState t(l);
  t.plus[30] = 1.0;
  const auto rec = engine.evolve(t, 5);
  for (std::size_t j = 0; j <= 5; ++j) CHECK(rec.centroid_plus[j] == 30.0 + j);
  CHECK(std::isnan(rec.centroid_minus[3]));
}

TEST_CASE("affine flat walk equals the standard shift-then-coin walk") {
  const std::size_t n = 64;
  const LatticeSpec l(n, 0.5);
  const double m = 0.8;
  WalkEngine engine(MetricField::flat(), m, affine_options());
  PacketSpec spec;
  spec.center = 20;
  spec.variance = 9;
  spec.mix_minus = 0.6;
  spec.mix_plus = 0.8;
  WalkState s = init_packet(spec, l);
  WalkState ref = s;
  const double c = std::cos(l.eps * m), sn = std::sin(l.eps * m);
  const cplx i{0.0, 1.0};
  for (int j = 0; j < 40; ++j) {
    engine.step(s);
    std::vector<cplx> mm(n), pp(n);
    for (std::size_t p = 0; p < n; ++p) {
      const cplx a = ref.minus[(p + 1) % n];
      const cplx b = ref.plus[(p + n - 1) % n];
      mm[p] = c * a + (-i * sn) * b;
      pp[p] = (-i * sn) * a + c * b;
    }
    ref.minus = mm;
    ref.plus = pp;
  }
  CHECK(l2_distance(s, ref) < 1e-14);
}

TEST_CASE("paper-literal coin flips the sign of Phi+ at zero mass") {
  const LatticeSpec l(32, 1.0);
  WalkOptions lit = affine_options();
  lit.coin = CoinVariant::PaperLiteral;
  WalkEngine a(MetricField::flat(), 0.0, lit), b(MetricField::flat(), 0.0, affine_options());
  WalkState sa(l), sb(l);
  sa.plus[4] = sb.plus[4] = 1.0;
  sa.minus[9] = sb.minus[9] = 1.0;
  for (int j = 1; j <= 3; ++j) {
    a.step(sa);
    b.step(sb);
    CHECK(sa.plus[4 + j] == (j % 2 ? -1.0 : 1.0) * sb.plus[4 + j]);
    CHECK(sa.minus[9 - j] == sb.minus[9 - j]);
  }
}

TEST_CASE("GEM step operators") {
  const LatticeSpec l(64, 1.0);
  WalkEngine engine(MetricField::gem(-0.2), 0.5, exponential_options());
  for (std::size_t j : {0u, 5u}) {
    const auto u = engine.build_step(j, l);
    REQUIRE(u.minus.storage() == ComponentUnitary::Storage::Spectral);
    const double th = std::asinh(2.0 * -0.2 * static_cast<double>(j));
    for (std::size_t k = 0; k < 64; ++k) {
      const double kn = 2.0 * std::numbers::pi * k / 64.0;
      CHECK(std::abs(u.minus.multipliers()[k] - std::polar(1.0, std::exp(th) * std::sin(kn))) < 1e-13);
      CHECK(std::abs(u.plus.multipliers()[k] - std::polar(1.0, -std::exp(-th) * std::sin(kn))) < 1e-13);
    }
    CHECK(u.coin_angles[17] == doctest::Approx(0.5 * std::cosh(th)).epsilon(1e-14));
  }
}

TEST_CASE("midpoint sampling evaluates the frame half a step later") {
  const LatticeSpec l(16, 1.0);
  WalkOptions o = exponential_options();
  o.sampling = TimeSampling::StepMidpoint;
  WalkEngine engine(MetricField::gem(-0.2), 1.0, o);
  const auto u = engine.build_step(2, l);
  CHECK(u.coin_angles[0] == doctest::Approx(std::cosh(std::asinh(2.0 * -0.2 * 2.5))).epsilon(1e-14));
}

TEST_CASE("evolve bookkeeping") {
  const LatticeSpec l(64, 1.0);
  WalkEngine engine(MetricField::flat(), 0.3);
  PacketSpec spec;
  spec.center = 32;
  spec.variance = 16;
  SUBCASE("zero steps") {
    WalkState s = init_packet(spec, l);
    const auto rec = engine.evolve(s, 0);
    CHECK(rec.steps == std::vector<std::size_t>{0});
    CHECK(rec.density.size() == 1);
    CHECK(rec.norm[0] == doctest::Approx(1.0));
  }
  SUBCASE("cadence and amplitudes") {
    WalkState s = init_packet(spec, l);
    RecorderConfig rc;
    rc.snapshot_cadence = 3;
    rc.keep_amplitudes = true;
    const auto rec = engine.evolve(s, 10, rc);
    CHECK(rec.steps.size() == 11);
    CHECK(rec.snapshot_steps == std::vector<std::size_t>{0, 3, 6, 9});
    CHECK(rec.amplitudes.size() == 11);
    CHECK(rec.amplitudes.back().minus == s.minus);
    CHECK(s.j == 10);
  }
  SUBCASE("free step function") {
    WalkState s = init_packet(spec, l);
    const WalkState next = step(s, MetricField::flat(), 0.3);
    engine.step(s);
    CHECK(next.plus == s.plus);
    CHECK(next.minus == s.minus);
  }
}

TEST_CASE("affine locality: support grows by at most one site per step") {
  const LatticeSpec l(128, 1.0);
  WalkEngine engine(MetricField::flat(), 0.7, affine_options());
  WalkState s(l);
  s.plus[64] = 1.0;
  for (std::size_t j = 1; j <= 20; ++j) {
    engine.step(s);
    for (std::size_t p = 0; p < 128; ++p) {
      const auto dist = static_cast<std::size_t>(std::abs(static_cast<long>(p) - 64));
      if (dist > j) {
        CHECK(s.plus[p] == cplx{});
        CHECK(s.minus[p] == cplx{});
      }
    }
  }
}

TEST_CASE("massless components decouple") {
  const LatticeSpec l(512, 1.0);
  WalkEngine engine(MetricField::gem(-0.2), 0.0, exponential_options());
  PacketSpec spec;
  spec.center = 128;
  spec.variance = 100;
  WalkState s = init_packet(spec, l);
  for (int j = 0; j < 30; ++j) engine.step(s);
  for (const auto& z : s.minus) CHECK(z == cplx{});
}

TEST_CASE("exponential and affine flat walks differ at third order in k") {
  // exp(i sin k) vs exp(i k): a smooth packet of width sigma sees a
  // one-step difference ~ sigma^-3.
  double diff[2];
  int i = 0;
  for (double sigma : {8.0, 16.0}) {
    const LatticeSpec l(1024, 1.0);
    PacketSpec spec;
    spec.center = 512;
    spec.variance = sigma * sigma;
    WalkState a = init_packet(spec, l), b = a;
    WalkEngine(MetricField::flat(), 0.0, affine_options()).step(a);
    WalkEngine(MetricField::flat(), 0.0, exponential_options()).step(b);
    diff[i++] = l2_distance(a, b);
  }
  CHECK(diff[0] / diff[1] > 6.0);
  CHECK(diff[0] / diff[1] < 10.0);
}

TEST_CASE("GEM packets drift along their light cones") {
  const LatticeSpec l(2048, 1.0);
  for (bool plus : {true, false}) {
    WalkEngine engine(MetricField::gem(-0.2), 0.0, exponential_options());
    PacketSpec spec;
    spec.center = 512;
    spec.mix_plus = plus ? 1.0 : 0.0;
    spec.mix_minus = plus ? 0.0 : 1.0;
    WalkState s = init_packet(spec, l);
    const auto rec = engine.evolve(s, 50);
    const auto& c = plus ? rec.centroid_plus : rec.centroid_minus;
    for (std::size_t j = 1; j < c.size(); ++j) {
      if (plus) CHECK(c[j] > c[j - 1]);
      else CHECK(c[j] < c[j - 1]);
    }
  }
}

TEST_CASE("norm is conserved over 10^4 steps") {
  const std::size_t steps = 10000;
  auto drift = [&](const MetricField& metric, double m, const WalkOptions& o, std::size_t n) {
    const LatticeSpec l(n, 1.0);
    PacketSpec spec;
    spec.center = n / 4.0;
    spec.variance = std::pow(n / 16.0, 2);
    spec.mix_minus = std::sqrt(0.5);
    spec.mix_plus = std::sqrt(0.5);
    WalkState s = init_packet(spec, l);
    WalkEngine engine(metric, m, o);
    double worst = 0.0;
    for (std::size_t j = 0; j < steps; ++j) {
      engine.step(s);
      worst = std::max(worst, std::abs(s.norm() - 1.0));
    }
    return worst;
  };
  SUBCASE("flat affine") { CHECK(drift(MetricField::flat(), 0.4, affine_options(), 256) < 1e-10); }
  SUBCASE("flat hybrid") {
    WalkOptions o = exponential_options();
    o.plus_direction = DirectionRule::Forward;
    o.minus_unitarize.strategy = UnitarizeStrategy::Affine;
    CHECK(drift(MetricField::flat(), 0.4, o, 256) < 1e-10);
  }
  SUBCASE("gem spectral") {
    CHECK(drift(MetricField::gem(-0.2), 0.4, exponential_options(), 1024) < 1e-10);
  }
  SUBCASE("custom metric, dense") {
    const auto metric = MetricField::custom(Expression::parse("1.5 + 0.5*cos(2*pi*x1/64)"),
                                            Expression::parse("0.3"), Expression::parse("-1"));
    WalkOptions o;
    CHECK(drift(metric, 0.4, o, 64) < 1e-10);
  }
}
