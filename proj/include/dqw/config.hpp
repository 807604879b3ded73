#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "dqw/walk.hpp"

namespace dqw {

enum class Scenario { Flat, FlatHybrid, Gem, CustomMetric };

struct RunConfig {
  Scenario scenario = Scenario::Flat;
  std::size_t n_sites = 2048;
  double eps = 1.0;
  std::size_t steps = 50;
  double mass = 0.0;
  double g = -0.2;
  PacketSpec packet;
  CoinVariant coin = CoinVariant::DeterminantOne;
  UnitarizeStrategy strategy = UnitarizeStrategy::Auto;
  ExponentialPath path = ExponentialPath::Auto;
  std::size_t dense_cap = 4096;
  TimeSampling sampling = TimeSampling::StepStart;
  std::size_t snapshot_cadence = 1;
  std::string output_dir = "dqw-out";
  std::uint64_t seed = 0;
  std::string metric_g00;
  std::string metric_g01;
  std::string metric_g11;
};

/// Flat key=value format, one key per line, '#' starts a comment.
/// Throws ParseError (line, key) on malformed input and ValidationError
/// listing every violated constraint.
RunConfig parse_config(const std::filesystem::path& path);
RunConfig parse_config_text(std::string_view text);

/// Throws ValidationError if any constraint is violated.
void validate_config(const RunConfig& config);

// Normalised key=value rendering (round-trips through parse_config_text).
std::string echo_config(const RunConfig& config);

std::string to_string(Scenario s);
std::string to_string(CoinVariant c);
std::string to_string(UnitarizeStrategy s);
std::string to_string(ExponentialPath p);
std::string to_string(TimeSampling s);

// Engine pieces implied by a configuration.
MetricField metric_for(const RunConfig& config);
WalkOptions walk_options_for(const RunConfig& config);

}  // namespace dqw
