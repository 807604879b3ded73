#include "dqw/walk.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "dqw/errors.hpp"

namespace dqw {

double WalkState::norm() const { return component_norm(false) + component_norm(true); }

double WalkState::component_norm(bool plus_component) const {
  const auto& v = plus_component ? plus : minus;
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

WalkState init_packet(const PacketSpec& spec, const LatticeSpec& lattice) {
  const std::size_t n = lattice.n_sites;
  const double mix_norm = std::sqrt(std::norm(spec.mix_minus) + std::norm(spec.mix_plus));
  if (!(mix_norm > 0.0)) throw Error("packet chirality mix is zero");
  const cplx am = spec.mix_minus / mix_norm;
  const cplx ap = spec.mix_plus / mix_norm;

  WalkState s(lattice);
  const double nd = static_cast<double>(n);
  if (spec.delta) {
    const auto p0 = static_cast<std::size_t>(std::fmod(std::fmod(std::round(spec.center), nd) + nd, nd));
    s.minus[p0] = am;
    s.plus[p0] = ap;
    return s;
  }

  if (!(spec.variance > 0.0)) throw PacketTooWideError("packet variance must be positive");
  const double sigma = std::sqrt(spec.variance);
  if (!(3.0 * sigma < nd / 2.0))
    throw PacketTooWideError("packet with sigma = " + std::to_string(sigma) +
                             " does not fit on " + std::to_string(n) + " sites");

  std::vector<cplx> profile(n);
  double total = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    double d = static_cast<double>(p) - spec.center;
    d -= nd * std::round(d / nd);
    const double env = std::exp(-d * d / (4.0 * spec.variance));
    profile[p] = std::polar(env, spec.momentum * static_cast<double>(p));
    total += env * env;
  }
  const double c = 1.0 / std::sqrt(total);
  for (std::size_t p = 0; p < n; ++p) {
    s.minus[p] = am * c * profile[p];
    s.plus[p] = ap * c * profile[p];
  }
  return s;
}

std::vector<double> probability_density(const WalkState& state) {
  std::vector<double> out(state.minus.size());
  kernels::density(state.minus, state.plus, out);
  return out;
}

double centroid(const WalkState& state, Component component, std::optional<double> reference) {
  const std::size_t n = state.minus.size();
  const double nd = static_cast<double>(n);
  auto weight = [&](std::size_t p) {
    switch (component) {
      case Component::Minus: return std::norm(state.minus[p]);
      case Component::Plus: return std::norm(state.plus[p]);
      case Component::Both: break;
    }
    return std::norm(state.minus[p]) + std::norm(state.plus[p]);
  };

  double total = 0.0;
  cplx circ{};
  for (std::size_t p = 0; p < n; ++p) {
    const double w = weight(p);
    total += w;
    if (!reference) circ += w * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(p) / nd);
  }
  if (!(total > 1e-12)) throw EmptyComponentError("centroid of an empty component");

  double ref = reference ? *reference : std::arg(circ) * nd / (2.0 * std::numbers::pi);
  if (!reference && ref < 0.0) ref += nd;
  double moment = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    const double pd = static_cast<double>(p);
    const double image = pd - nd * std::round((pd - ref) / nd);
    moment += image * weight(p);
  }
  return state.lattice.eps * moment / total;
}

WalkEngine::WalkEngine(MetricField metric, double mass, WalkOptions options)
    : metric_(std::move(metric)), mass_(mass), options_(options) {}

StepUnitary WalkEngine::build_step(std::size_t j, const LatticeSpec& lattice) const {
  const std::size_t n = lattice.n_sites;
  double x0 = lattice.x0(j);
  if (options_.sampling == TimeSampling::StepMidpoint) x0 += 0.5 * lattice.eps;

  std::vector<double> a_minus(n), a_plus(n);
  StepUnitary u;
  u.coin = options_.coin;
  u.coin_angles.resize(n);
  if (metric_.space_independent()) {
    const GeometryFrame f = frame_at(metric_, x0, 0.0, mass_);
    std::fill(a_minus.begin(), a_minus.end(), -f.vMinus);
    std::fill(a_plus.begin(), a_plus.end(), -f.vPlus);
    std::fill(u.coin_angles.begin(), u.coin_angles.end(), lattice.eps * f.Meff);
  } else {
    for (std::size_t p = 0; p < n; ++p) {
      const GeometryFrame f = frame_at(metric_, x0, lattice.x1(p), mass_);
      a_minus[p] = -f.vMinus;
      a_plus[p] = -f.vPlus;
      u.coin_angles[p] = lattice.eps * f.Meff;
    }
  }

  u.minus = unitarize(assemble_stencil(a_minus, lattice, options_.minus_direction), lattice,
                      options_.minus_unitarize);
  u.plus = unitarize(assemble_stencil(a_plus, lattice, options_.plus_direction), lattice,
                     options_.plus_unitarize);
  return u;
}

const StepUnitary& WalkEngine::operators_for(std::size_t j, const LatticeSpec& lattice) {
  if (metric_.time_independent() && cached_ && cached_lattice_ && *cached_lattice_ == lattice)
    return *cached_;
  cached_ = build_step(j, lattice);
  cached_lattice_ = lattice;
  return *cached_;
}

void WalkEngine::apply(const StepUnitary& u, WalkState& state) {
  const std::size_t n = state.minus.size();
  std::vector<cplx> m(n), p(n);
  u.minus.apply(state.minus, m);
  u.plus.apply(state.plus, p);
  kernels::apply_coin(m, p, u.coin_angles, u.coin);
  state.minus = std::move(m);
  state.plus = std::move(p);
  ++state.j;
}

void WalkEngine::step(WalkState& state) { apply(operators_for(state.j, state.lattice), state); }

namespace {

double safe_centroid(const WalkState& s, Component c, std::optional<double>& ref_sites) {
  const bool plus = (c == Component::Plus);
  if (!(s.component_norm(plus) > 1e-12)) {
    ref_sites.reset();
    return std::numeric_limits<double>::quiet_NaN();
  }
  const double x = centroid(s, c, ref_sites);
  ref_sites = x / s.lattice.eps;
  return x;
}

}  // namespace

RunRecord WalkEngine::evolve(WalkState& state, std::size_t n_steps, const RecorderConfig& recorder) {
  RunRecord rec;
  rec.lattice = state.lattice;
  const std::size_t cadence = recorder.snapshot_cadence == 0 ? 1 : recorder.snapshot_cadence;
  std::optional<double> ref_minus, ref_plus;

  auto observe = [&](std::size_t i) {
    const std::vector<double> dens = probability_density(state);
    rec.steps.push_back(state.j);
    rec.norm.push_back(std::accumulate(dens.begin(), dens.end(), 0.0));
    rec.centroid_minus.push_back(safe_centroid(state, Component::Minus, ref_minus));
    rec.centroid_plus.push_back(safe_centroid(state, Component::Plus, ref_plus));
    if (i % cadence == 0) {
      rec.snapshot_steps.push_back(state.j);
      rec.density.push_back(dens);
    }
    if (recorder.keep_amplitudes) rec.amplitudes.push_back(state);
  };

  observe(0);
  for (std::size_t i = 1; i <= n_steps; ++i) {
    step(state);
    observe(i);
  }
  return rec;
}

WalkState step(const WalkState& state, const MetricField& metric, double mass,
               const WalkOptions& options) {
  WalkEngine engine(metric, mass, options);
  WalkState next = state;
  engine.step(next);
  return next;
}

}  // namespace dqw
