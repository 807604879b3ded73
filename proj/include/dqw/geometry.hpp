#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dqw/expression.hpp"

namespace dqw {

using cplx = std::complex<double>;

// Covariant components g_{mu nu} at a point, c = 1 units.
struct MetricComponents {
  double g00 = 1.0;
  double g01 = 0.0;
  double g11 = -1.0;
};

enum class MetricKind { Flat, Gem, Custom };

// Evaluable metric field g_{mu nu}(x0, x1). Symmetric by construction.
class MetricField {
public:
  using Evaluator = std::function<MetricComponents(double, double)>;

  static MetricField flat();
  // Weak constant field in the gauge V = 0, A = -g x0:
  //   ds^2 = dx0^2 - 4 g x0 dx0 dx1 - dx1^2.
  static MetricField gem(double g);
  static MetricField custom(Expression g00, Expression g01, Expression g11);
  static MetricField custom(Evaluator eval, bool time_independent, bool space_independent);

  MetricComponents operator()(double x0, double x1) const { return eval_(x0, x1); }

  MetricKind kind() const { return kind_; }
  double field_strength() const { return g_; }
  bool time_independent() const { return time_independent_; }
  bool space_independent() const { return space_independent_; }

private:
  MetricKind kind_ = MetricKind::Flat;
  double g_ = 0.0;
  bool time_independent_ = true;
  bool space_independent_ = true;
  Evaluator eval_;
};

// Point data derived from the metric in the boost gauge
// sigma0 = delta0 = sqrt(g^00).
struct GeometryFrame {
  double g00 = 1.0;  // contravariant
  double g01 = 0.0;
  double g11 = -1.0;
  double S = 1.0;  // sqrt(-det g_{mu nu})
  double sigma0 = 1.0;
  double sigma1 = 1.0;
  double delta0 = 1.0;
  double delta1 = -1.0;
  double lam = 0.0;   // g^01 / g^00
  double c = 1.0;     // 1 / (g^00 S)
  double Meff = 0.0;  // m / sqrt(g^00)
  double vMinus = -1.0;
  double vPlus = 1.0;
};

/// Builds the frame at (x0, x1).  Throws SignatureError unless g^00 > 0,
/// g^11 < 0 and det g_{mu nu} < 0 there.
GeometryFrame frame_at(const MetricField& metric, double x0, double x1, double mass);
GeometryFrame frame_from_components(const MetricComponents& g, double mass, double x0 = 0.0,
                                    double x1 = 0.0);

/// Max absolute residual of the three zweibein relations
///   sigma0 delta0 = g^00, (sigma0 delta1 + sigma1 delta0)/2 = g^01,
///   sigma1 delta1 = g^11.
double zweibein_residual(const GeometryFrame& f);

// Psi <-> Phi rescaling so that P_L = |Phi-|^2 + |Phi+|^2.
std::pair<cplx, cplx> spinor_rescale(cplx psi_minus, cplx psi_plus, const GeometryFrame& f);
std::pair<cplx, cplx> spinor_unscale(cplx phi_minus, cplx phi_plus, const GeometryFrame& f);

// P_L = S [(e^0_0 - e^0_1)|Psi-|^2 + (e^0_0 + e^0_1)|Psi+|^2].
double probability_density_psi(cplx psi_minus, cplx psi_plus, const GeometryFrame& f);

// Scalar field of (x0, x1) with its first partial derivatives.
struct ScalarField {
  std::function<double(double, double)> value;
  std::function<double(double, double)> dt;
  std::function<double(double, double)> dx;
};

// (1+1)D gravitoelectromagnetic potentials: scalar V and the x1 component of A.
struct GemPotentials {
  std::function<double(double, double)> V;
  std::function<double(double, double)> A;
};

struct SamplePoint {
  double x0;
  double x1;
};

/// V -> V - dF/dt, A -> A + dF/dx.  F must satisfy box F = 0; this is checked
/// at `samples` by central differences of the derivative oracles and a
/// GaugeConditionError is thrown if any residual exceeds 1e-6.
GemPotentials gem_gauge_transform(const GemPotentials& pot, const ScalarField& F,
                                  const std::vector<SamplePoint>& samples);
GemPotentials gem_gauge_transform(const GemPotentials& pot, const ScalarField& F);

/// |box F| at a point, from central differences of F.dt and F.dx.
double dalembertian_residual(const ScalarField& F, double x0, double x1, double h = 1e-4);

// g00 = 1 - 2V, g01 = 2A, g11 = -(1 + 2V).
MetricField metric_from_potentials(const GemPotentials& pot);

}  // namespace dqw
