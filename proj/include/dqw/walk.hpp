#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dqw/geometry.hpp"
#include "dqw/lattice.hpp"

namespace dqw {

struct WalkState {
  std::size_t j = 0;
  LatticeSpec lattice;
  std::vector<cplx> minus;
  std::vector<cplx> plus;

  WalkState() = default;
  explicit WalkState(const LatticeSpec& l)
      : lattice(l), minus(l.n_sites, cplx{}), plus(l.n_sites, cplx{}) {}

  double norm() const;
  double component_norm(bool plus_component) const;
};

struct PacketSpec {
  double center = 0.0;    // site index
  double variance = 300.0;  // of |Phi|^2, in site^2
  double momentum = 0.0;  // lattice wavenumber
  cplx mix_minus = 0.0;
  cplx mix_plus = 1.0;
  bool delta = false;  // all weight on the site nearest `center`
};

/// Phi^s_p = alpha^s C exp(-(p - p0)^2 / (4 sigma^2)) exp(i k0 p), unit norm.
/// Throws PacketTooWideError unless 3 sigma < N / 2.
WalkState init_packet(const PacketSpec& spec, const LatticeSpec& lattice);

/// P_L(p) = |Phi-_p|^2 + |Phi+_p|^2.
std::vector<double> probability_density(const WalkState& state);

enum class Component { Minus, Plus, Both };

/// eps * sum p w_p / sum w_p over nearest periodic images of `reference`
/// (a site index; the circular mean, taken in [0, N), when absent).  Throws
/// EmptyComponentError when the selected weight is below 1e-12.
double centroid(const WalkState& state, Component component,
                std::optional<double> reference = std::nullopt);

// x0 at which the step j -> j+1 operators are evaluated.
enum class TimeSampling { StepStart, StepMidpoint };

struct WalkOptions {
  DirectionRule minus_direction = DirectionRule::Upwind;
  DirectionRule plus_direction = DirectionRule::Upwind;
  UnitarizeOptions minus_unitarize;
  UnitarizeOptions plus_unitarize;
  CoinVariant coin = CoinVariant::DeterminantOne;
  TimeSampling sampling = TimeSampling::StepStart;

  void set_strategy(UnitarizeStrategy s) { minus_unitarize.strategy = plus_unitarize.strategy = s; }
  void set_path(ExponentialPath p) { minus_unitarize.path = plus_unitarize.path = p; }
};

struct RecorderConfig {
  std::size_t snapshot_cadence = 1;
  bool keep_amplitudes = false;
};

struct RunRecord {
  LatticeSpec lattice;
  std::string config_echo;
  std::vector<std::size_t> steps;
  std::vector<double> norm;
  std::vector<double> centroid_minus;  // NaN when the component is empty
  std::vector<double> centroid_plus;
  std::vector<std::size_t> snapshot_steps;
  std::vector<std::vector<double>> density;
  std::vector<WalkState> amplitudes;  // only with keep_amplitudes
};

// Generalized walk R(theta_M) U on a fixed metric.  Step operators are
// rebuilt every step unless the metric is time-independent, in which case
// the first one is reused.
class WalkEngine {
public:
  WalkEngine(MetricField metric, double mass, WalkOptions options = {});

  /// Operators for the step j -> j+1: a-_p = -vMinus, a+_p = -vPlus,
  /// theta_M = eps M, all from the frame at (x0_j, p eps).
  StepUnitary build_step(std::size_t j, const LatticeSpec& lattice) const;

  /// Shift, then coin.
  void step(WalkState& state);
  static void apply(const StepUnitary& u, WalkState& state);

  RunRecord evolve(WalkState& state, std::size_t n_steps, const RecorderConfig& recorder = {});

  const MetricField& metric() const { return metric_; }
  double mass() const { return mass_; }
  const WalkOptions& options() const { return options_; }

private:
  const StepUnitary& operators_for(std::size_t j, const LatticeSpec& lattice);

  MetricField metric_;
  double mass_;
  WalkOptions options_;
  std::optional<StepUnitary> cached_;
  std::optional<LatticeSpec> cached_lattice_;
};

WalkState step(const WalkState& state, const MetricField& metric, double mass,
               const WalkOptions& options = {});

}  // namespace dqw
