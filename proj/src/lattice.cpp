#include "dqw/lattice.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <string>

#include "dqw/errors.hpp"

namespace dqw {

LatticeSpec::LatticeSpec(std::size_t n, double e) : n_sites(n), eps(e) {
  if (n < 4) throw SizeError("lattice needs at least 4 sites, got " + std::to_string(n));
  if (!(e > 0.0) || !std::isfinite(e)) throw SizeError("lattice spacing must be positive");
}

DenseOperator PeriodicBanded::to_dense() const {
  const auto n = static_cast<Eigen::Index>(size());
  DenseOperator m = DenseOperator::Zero(n, n);
  for (Eigen::Index p = 0; p < n; ++p) {
    m(p, p) += diag[p];
    m(p, (p + 1) % n) += upper[p];
    m(p, (p + n - 1) % n) += lower[p];
  }
  return m;
}

// Real operator: B^dagger_{p,p+1} = B_{p+1,p} = lower_{p+1}.
PeriodicBanded PeriodicBanded::adjoint() const {
  const std::size_t n = size();
  PeriodicBanded t(n);
  for (std::size_t p = 0; p < n; ++p) {
    t.diag[p] = diag[p];
    t.upper[p] = lower[(p + 1) % n];
    t.lower[p] = upper[(p + n - 1) % n];
  }
  return t;
}

StencilOperator assemble_stencil(std::span<const double> a, const LatticeSpec& lattice,
                                 DirectionRule rule) {
  const std::size_t n = lattice.n_sites;
  if (a.size() != n)
    throw SizeError("advection field has " + std::to_string(a.size()) + " entries, lattice has " +
                    std::to_string(n));

  StencilOperator op;
  op.coeffs.assign(a.begin(), a.end());
  switch (rule) {
    case DirectionRule::Forward: op.direction = StencilDirection::Forward; break;
    case DirectionRule::Backward: op.direction = StencilDirection::Backward; break;
    case DirectionRule::Upwind: {
      const bool any_neg = std::any_of(a.begin(), a.end(), [](double v) { return v < 0.0; });
      const bool any_nonneg = std::any_of(a.begin(), a.end(), [](double v) { return v >= 0.0; });
      if (any_neg && any_nonneg)
        throw MixedSignError("advection coefficients change sign across the lattice");
      op.direction = any_neg ? StencilDirection::Backward : StencilDirection::Forward;
      break;
    }
  }

  op.band = PeriodicBanded(n);
  for (std::size_t p = 0; p < n; ++p) {
    if (op.direction == StencilDirection::Forward) {
      op.band.diag[p] = -a[p];
      op.band.upper[p] = a[p];
    } else {
      op.band.diag[p] = a[p];
      op.band.lower[p] = -a[p];
    }
  }
  return op;
}

PeriodicBanded antisymmetrize(const PeriodicBanded& op) {
  const std::size_t n = op.size();
  const PeriodicBanded adj = op.adjoint();
  PeriodicBanded k(n);
  for (std::size_t p = 0; p < n; ++p) {
    k.diag[p] = 0.5 * (op.diag[p] - adj.diag[p]);
    k.upper[p] = 0.5 * (op.upper[p] - adj.upper[p]);
    k.lower[p] = 0.5 * (op.lower[p] - adj.lower[p]);
  }
  return k;
}

double affine_unitarity_defect(const StencilOperator& op) {
  const std::size_t n = op.band.size();
  PeriodicBanded b = op.band;
  for (auto& d : b.diag) d += 1.0;

  // Row p of B^T B is sum over rows r touching column p of B_{rp} * (row r of B).
  double worst = 0.0;
  std::array<std::pair<std::size_t, double>, 9> acc{};
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t used = 0;
    auto add = [&](std::size_t q, double v) {
      for (std::size_t i = 0; i < used; ++i)
        if (acc[i].first == q) {
          acc[i].second += v;
          return;
        }
      acc[used++] = {q, v};
    };
    const std::size_t prev = (p + n - 1) % n;
    const std::size_t next = (p + 1) % n;
    const std::array<std::pair<std::size_t, double>, 3> column{
        {{p, b.diag[p]}, {prev, b.upper[prev]}, {next, b.lower[next]}}};
    for (const auto& [r, brp] : column) {
      if (brp == 0.0) continue;
      add(r, brp * b.diag[r]);
      add((r + 1) % n, brp * b.upper[r]);
      add((r + n - 1) % n, brp * b.lower[r]);
    }
    bool has_diag = false;
    double row = 0.0;
    for (std::size_t i = 0; i < used; ++i) {
      const double id = (acc[i].first == p) ? 1.0 : 0.0;
      has_diag = has_diag || acc[i].first == p;
      row += std::abs(acc[i].second - id);
    }
    if (!has_diag) row += 1.0;
    worst = std::max(worst, row);
  }
  return worst;
}

bool affine_is_unitary(const StencilOperator& op, double tol) {
  return affine_unitarity_defect(op) < tol;
}

DenseOperator exp_skew_dense(const PeriodicBanded& skew) {
  const auto n = static_cast<Eigen::Index>(skew.size());
  const Eigen::MatrixXcd h = cplx(0.0, 1.0) * Eigen::MatrixXcd(skew.to_dense());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) throw Error("eigendecomposition of the shift generator failed");
  const Eigen::MatrixXcd& v = es.eigenvectors();
  Eigen::VectorXcd phase(n);
  for (Eigen::Index i = 0; i < n; ++i) phase[i] = std::polar(1.0, -es.eigenvalues()[i]);
  // K = -i H  =>  exp(K) = V exp(-i w) V^dagger
  return DenseOperator(v * phase.asDiagonal() * v.adjoint());
}

namespace {

bool uniform(std::span<const double> a) {
  return std::all_of(a.begin(), a.end(), [&](double v) { return v == a.front(); });
}

std::vector<cplx> skew_circulant_multipliers(const PeriodicBanded& k) {
  const std::size_t n = k.size();
  const double span = k.upper[0] - k.lower[0];
  std::vector<cplx> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double kn = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    // upper e^{ik} + lower e^{-ik} with lower = -upper is i (upper - lower) sin k
    m[i] = std::polar(1.0, span * std::sin(kn));
  }
  return m;
}

}  // namespace

ComponentUnitary unitarize(const StencilOperator& op, const LatticeSpec& lattice,
                           const UnitarizeOptions& options) {
  const std::size_t n = lattice.n_sites;
  if (op.band.size() != n) throw SizeError("stencil size does not match lattice");

  if (options.strategy != UnitarizeStrategy::Exponential) {
    const bool admissible = affine_is_unitary(op, options.affine_tol);
    if (options.strategy == UnitarizeStrategy::Affine && !admissible)
      throw Error("affine step 1 + L_D requested but it is not unitary");
    if (admissible) {
      PeriodicBanded b = op.band;
      for (auto& d : b.diag) d += 1.0;
      return ComponentUnitary::affine(std::move(b));
    }
  }

  const PeriodicBanded k = antisymmetrize(op.band);
  const bool circulant = uniform(op.coeffs);
  ExponentialPath path = options.path;
  if (path == ExponentialPath::Auto)
    path = circulant ? ExponentialPath::Spectral : ExponentialPath::Dense;
  if (path == ExponentialPath::Spectral) {
    if (!circulant) throw Error("spectral shift requires site-independent advection coefficients");
    return ComponentUnitary::spectral(skew_circulant_multipliers(k));
  }
  if (n > options.dense_cap)
    throw SizeError("dense shift operator requested for " + std::to_string(n) +
                    " sites, cap is " + std::to_string(options.dense_cap));
  return ComponentUnitary::dense(exp_skew_dense(k));
}

ComponentUnitary ComponentUnitary::affine(PeriodicBanded one_plus_l) {
  ComponentUnitary u;
  u.flavor_ = Flavor::Affine;
  u.storage_ = Storage::Banded;
  u.banded_ = std::move(one_plus_l);
  return u;
}

ComponentUnitary ComponentUnitary::spectral(std::vector<cplx> multipliers) {
  ComponentUnitary u;
  u.flavor_ = Flavor::Exponential;
  u.storage_ = Storage::Spectral;
  u.multipliers_ = std::move(multipliers);
  return u;
}

ComponentUnitary ComponentUnitary::dense(DenseOperator m) {
  ComponentUnitary u;
  u.flavor_ = Flavor::Exponential;
  u.storage_ = Storage::Dense;
  u.dense_ = std::move(m);
  return u;
}

std::size_t ComponentUnitary::size() const {
  switch (storage_) {
    case Storage::Banded: return banded_.size();
    case Storage::Spectral: return multipliers_.size();
    case Storage::Dense: return static_cast<std::size_t>(dense_.rows());
  }
  return 0;
}

void ComponentUnitary::apply(std::span<const cplx> in, std::span<cplx> out) const {
  switch (storage_) {
    case Storage::Banded:
      kernels::apply_banded(banded_.diag, banded_.upper, banded_.lower, in, out);
      break;
    case Storage::Spectral: {
      thread_local std::vector<cplx> work;
      work.resize(in.size());
      fft_forward(in, work);
      kernels::multiply(work, multipliers_);
      fft_inverse(work, out);
      break;
    }
    case Storage::Dense:
      kernels::apply_dense(dense_.data(), static_cast<std::size_t>(dense_.rows()), in, out);
      break;
  }
}

DenseOperator ComponentUnitary::to_dense() const {
  switch (storage_) {
    case Storage::Banded: return banded_.to_dense();
    case Storage::Dense: return dense_;
    case Storage::Spectral: {
      const std::size_t n = multipliers_.size();
      DenseOperator m(n, n);
      std::vector<cplx> e(n), col(n);
      for (std::size_t q = 0; q < n; ++q) {
        std::fill(e.begin(), e.end(), cplx{});
        e[q] = 1.0;
        apply(e, col);
        for (std::size_t p = 0; p < n; ++p) m(p, q) = col[p];
      }
      return m;
    }
  }
  return {};
}

double ComponentUnitary::unitarity_defect() const {
  if (storage_ == Storage::Spectral) {
    double worst = 0.0;
    for (const auto& m : multipliers_) worst = std::max(worst, std::abs(std::norm(m) - 1.0));
    return worst;
  }
  const DenseOperator u = to_dense();
  const auto n = u.rows();
  const Eigen::MatrixXcd g = u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n);
  return g.cwiseAbs().maxCoeff();
}

CoinMatrix coin_matrix(double theta, CoinVariant variant) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const cplx i{0.0, 1.0};
  CoinMatrix r;
  if (variant == CoinVariant::PaperLiteral) {
    r << c, -i * s, i * s, -c;
  } else {
    r << c, -i * s, -i * s, c;
  }
  return r;
}

void write_dense_operator(std::ostream& os, const DenseOperator& u) {
  const auto flags = os.flags();
  os << std::setprecision(17);
  for (Eigen::Index p = 0; p < u.rows(); ++p) {
    for (Eigen::Index q = 0; q < u.cols(); ++q) {
      if (q) os << ' ';
      os << u(p, q).real() << ' ' << u(p, q).imag();
    }
    os << '\n';
  }
  os.flags(flags);
}

namespace {
Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}
}  // namespace

void fft_forward(std::span<const cplx> in, std::span<cplx> out) {
  fft_engine().fwd(out.data(), in.data(), static_cast<Eigen::Index>(in.size()));
}

void fft_inverse(std::span<const cplx> in, std::span<cplx> out) {
  fft_engine().inv(out.data(), in.data(), static_cast<Eigen::Index>(in.size()));
}

}  // namespace dqw
