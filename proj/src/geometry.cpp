#include "dqw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dqw/errors.hpp"

namespace dqw {

MetricField MetricField::flat() {
  MetricField m;
  m.kind_ = MetricKind::Flat;
  m.eval_ = [](double, double) { return MetricComponents{1.0, 0.0, -1.0}; };
  return m;
}

MetricField MetricField::gem(double g) {
  MetricField m;
  m.kind_ = MetricKind::Gem;
  m.g_ = g;
  m.time_independent_ = (g == 0.0);
  m.space_independent_ = true;
  m.eval_ = [g](double x0, double) { return MetricComponents{1.0, -2.0 * g * x0, -1.0}; };
  return m;
}

MetricField MetricField::custom(Expression g00, Expression g01, Expression g11) {
  const bool t = !(g00.depends_on_x0() || g01.depends_on_x0() || g11.depends_on_x0());
  const bool s = !(g00.depends_on_x1() || g01.depends_on_x1() || g11.depends_on_x1());
  auto eval = [g00 = std::move(g00), g01 = std::move(g01), g11 = std::move(g11)](double x0,
                                                                                    double x1) {
    return MetricComponents{g00(x0, x1), g01(x0, x1), g11(x0, x1)};
  };
  return custom(std::move(eval), t, s);
}

MetricField MetricField::custom(Evaluator eval, bool time_independent, bool space_independent) {
  MetricField m;
  m.kind_ = MetricKind::Custom;
  m.time_independent_ = time_independent;
  m.space_independent_ = space_independent;
  m.eval_ = std::move(eval);
  return m;
}

GeometryFrame frame_from_components(const MetricComponents& g, double mass, double x0,
                                    double x1) {
  const double det = g.g00 * g.g11 - g.g01 * g.g01;
  const auto where = [&] {
    std::ostringstream os;
    os << " at (x0=" << x0 << ", x1=" << x1 << "): g00=" << g.g00 << " g01=" << g.g01
       << " g11=" << g.g11;
    return os.str();
  };
  if (!(det < 0.0)) throw SignatureError("metric determinant is not negative" + where(), x0, x1);

  GeometryFrame f;
  f.g00 = g.g11 / det;
  f.g01 = -g.g01 / det;
  f.g11 = g.g00 / det;
  if (!(f.g00 > 0.0)) throw SignatureError("x0 is not time-like (g^00 <= 0)" + where(), x0, x1);
  if (!(f.g11 < 0.0)) throw SignatureError("x1 is not space-like (g^11 >= 0)" + where(), x0, x1);

  f.S = std::sqrt(-det);
  f.lam = f.g01 / f.g00;
  f.c = 1.0 / (f.g00 * f.S);
  f.Meff = mass / std::sqrt(f.g00);
  f.vMinus = f.lam - f.c;
  f.vPlus = f.lam + f.c;

  const double root = std::sqrt(f.g00);
  f.sigma0 = root;
  f.delta0 = root;
  f.sigma1 = root * f.vPlus;
  f.delta1 = root * f.vMinus;
  return f;
}

GeometryFrame frame_at(const MetricField& metric, double x0, double x1, double mass) {
  return frame_from_components(metric(x0, x1), mass, x0, x1);
}

double zweibein_residual(const GeometryFrame& f) {
  const double r0 = std::abs(f.sigma0 * f.delta0 - f.g00);
  const double r1 = std::abs(0.5 * (f.sigma0 * f.delta1 + f.sigma1 * f.delta0) - f.g01);
  const double r2 = std::abs(f.sigma1 * f.delta1 - f.g11);
  return std::max({r0, r1, r2});
}

// e^0_0 - e^0_1 = delta0, e^0_0 + e^0_1 = sigma0.
std::pair<cplx, cplx> spinor_rescale(cplx psi_minus, cplx psi_plus, const GeometryFrame& f) {
  return {std::sqrt(f.S * f.delta0) * psi_minus, std::sqrt(f.S * f.sigma0) * psi_plus};
}

std::pair<cplx, cplx> spinor_unscale(cplx phi_minus, cplx phi_plus, const GeometryFrame& f) {
  return {phi_minus / std::sqrt(f.S * f.delta0), phi_plus / std::sqrt(f.S * f.sigma0)};
}

double probability_density_psi(cplx psi_minus, cplx psi_plus, const GeometryFrame& f) {
  return f.S * (f.delta0 * std::norm(psi_minus) + f.sigma0 * std::norm(psi_plus));
}

double dalembertian_residual(const ScalarField& F, double x0, double x1, double h) {
  const double ftt = (F.dt(x0 + h, x1) - F.dt(x0 - h, x1)) / (2.0 * h);
  const double fxx = (F.dx(x0, x1 + h) - F.dx(x0, x1 - h)) / (2.0 * h);
  return std::abs(ftt - fxx);
}

GemPotentials gem_gauge_transform(const GemPotentials& pot, const ScalarField& F,
                                  const std::vector<SamplePoint>& samples) {
  for (const auto& s : samples) {
    const double r = dalembertian_residual(F, s.x0, s.x1);
    if (!(r <= 1e-6)) {
      std::ostringstream os;
      os << "gauge function is not harmonic: |box F| = " << r << " at (" << s.x0 << ", " << s.x1
         << ")";
      throw GaugeConditionError(os.str());
    }
  }
  GemPotentials out;
  out.V = [V = pot.V, dt = F.dt](double x0, double x1) { return V(x0, x1) - dt(x0, x1); };
  out.A = [A = pot.A, dx = F.dx](double x0, double x1) { return A(x0, x1) + dx(x0, x1); };
  return out;
}

GemPotentials gem_gauge_transform(const GemPotentials& pot, const ScalarField& F) {
  std::vector<SamplePoint> samples;
  for (int i = -2; i <= 2; ++i)
    for (int k = -2; k <= 2; ++k) samples.push_back({2.5 * i, 2.5 * k});
  return gem_gauge_transform(pot, F, samples);
}

MetricField metric_from_potentials(const GemPotentials& pot) {
  return MetricField::custom(
      [V = pot.V, A = pot.A](double x0, double x1) {
        const double v = V(x0, x1);
        return MetricComponents{1.0 - 2.0 * v, 2.0 * A(x0, x1), -(1.0 + 2.0 * v)};
      },
      false, false);
}

}  // namespace dqw
