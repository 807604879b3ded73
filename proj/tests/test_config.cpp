#include <doctest.h>

#include "dqw/config.hpp"
#include "dqw/errors.hpp"

using namespace dqw;

TEST_CASE("minimal gem config takes the defaults") {
  const auto c = parse_config_text("scenario=gem\n");
  CHECK(c.scenario == Scenario::Gem);
  CHECK(c.n_sites == 2048);
  CHECK(c.eps == 1.0);
  CHECK(c.steps == 50);
  CHECK(c.g == -0.2);
  CHECK(c.packet.variance == 300.0);
  CHECK(c.packet.center == 512.0);
  CHECK(c.coin == CoinVariant::DeterminantOne);
  CHECK(c.sampling == TimeSampling::StepStart);
  CHECK(c.output_dir == "dqw-out");
  CHECK(parse_config_text("scenario=flat").packet.center == 1024.0);
}

TEST_CASE("every key") {
  const auto c = parse_config_text(R"(# comment
scenario = custom-metric
n_sites = 128   # trailing comment
eps = 0.5
steps = 7
mass = 1.25
g = 0.1
packet_center = 40
packet_variance = 16
packet_momentum = 0.2
packet_mix_minus = 0.6
packet_mix_plus = 0.8
packet_shape = gaussian
coin = paper-literal
strategy = exponential
exponential_path = dense
dense_cap = 256
time_sampling = midpoint
snapshot_cadence = 2
output_dir = out/x
seed = 9
metric_g00 = 1 + 0.1*x0
metric_g01 = 0
metric_g11 = -1
)");
  CHECK(c.scenario == Scenario::CustomMetric);
  CHECK(c.n_sites == 128);
  CHECK(c.eps == 0.5);
  CHECK(c.steps == 7);
  CHECK(c.mass == 1.25);
  CHECK(c.packet.center == 40.0);
  CHECK(c.packet.mix_minus == cplx(0.6));
  CHECK(c.coin == CoinVariant::PaperLiteral);
  CHECK(c.path == ExponentialPath::Dense);
  CHECK(c.dense_cap == 256);
  CHECK(c.sampling == TimeSampling::StepMidpoint);
  CHECK(c.snapshot_cadence == 2);
  CHECK(c.output_dir == "out/x");
  CHECK(c.seed == 9);
  CHECK(c.metric_g00 == "1 + 0.1*x0");

  // Echo round-trips.
  const auto again = parse_config_text(echo_config(c));
  CHECK(echo_config(again) == echo_config(c));
}

TEST_CASE("parse errors carry line and key") {
  auto line_of = [](const char* text) {
    try {
      (void)parse_config_text(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.key());
    }
    return std::make_pair(-1, std::string());
  };
  CHECK(line_of("scenario=gem\nbogus") == std::make_pair(2, std::string()));
  CHECK(line_of("\n\nfoo=1") == std::make_pair(3, std::string("foo")));
  CHECK(line_of("steps=1\nsteps=2") == std::make_pair(2, std::string("steps")));
  CHECK(line_of("eps=") == std::make_pair(1, std::string("eps")));
  CHECK(line_of("eps=abc") == std::make_pair(1, std::string("eps")));
  CHECK(line_of("steps=1.5") == std::make_pair(1, std::string("steps")));
  CHECK(line_of("coin=hermitian") == std::make_pair(1, std::string("coin")));
  CHECK(line_of("packet_shape=square") == std::make_pair(1, std::string("packet_shape")));
}

TEST_CASE("validation collects every violation") {
  try {
    (void)parse_config_text("steps=-5\neps=0\nsnapshot_cadence=0");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.violations().size() == 3);
    CHECK(std::string(e.what()).find("steps") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config_text("scenario=custom-metric\nmetric_g00=1"), ValidationError);
  try {
    (void)parse_config_text("scenario=custom-metric");
  } catch (const ValidationError& e) {
    CHECK(e.violations().size() == 3);
  }
  CHECK_THROWS_AS(parse_config_text("scenario=custom-metric\nmetric_g00=1+\nmetric_g01=0\nmetric_g11=-1"),
                  ValidationError);
  CHECK_THROWS_AS(parse_config_text("n_sites=64\npacket_variance=300"), ValidationError);
  CHECK_THROWS_AS(parse_config_text("packet_mix_minus=1\npacket_mix_plus=1"), ValidationError);
  CHECK_THROWS_AS(parse_config_text("scenario=gem\nstrategy=affine"), ValidationError);
  CHECK_NOTHROW(parse_config_text("n_sites=64\npacket_variance=300\npacket_shape=delta"));
}

TEST_CASE("engine options per scenario") {
  RunConfig c;
  c.scenario = Scenario::Gem;
  auto o = walk_options_for(c);
  CHECK(o.minus_unitarize.strategy == UnitarizeStrategy::Exponential);
  CHECK(metric_for(c).kind() == MetricKind::Gem);

  c.scenario = Scenario::FlatHybrid;
  c.strategy = UnitarizeStrategy::Affine;
  o = walk_options_for(c);
  CHECK(o.plus_direction == DirectionRule::Forward);
  CHECK(o.minus_unitarize.strategy == UnitarizeStrategy::Affine);
  CHECK(o.plus_unitarize.strategy == UnitarizeStrategy::Exponential);

  c.scenario = Scenario::Flat;
  c.strategy = UnitarizeStrategy::Auto;
  c.dense_cap = 99;
  o = walk_options_for(c);
  CHECK(o.plus_unitarize.strategy == UnitarizeStrategy::Auto);
  CHECK(o.plus_unitarize.dense_cap == 99);
}
