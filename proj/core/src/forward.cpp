#include "emtrec/forward.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "emtrec/error.hpp"

namespace emtrec {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

Complex ipow(Complex w, int k) {
  if (k < 0) return Complex(0.0);
  Complex r(1.0);
  for (int i = 0; i < k; ++i) r *= w;
  return r;
}

// Holomorphic potential coefficients (f = p w^n, g = -q w^n).
struct Potentials {
  Complex p;
  Complex q;
};

Potentials potentials_of(const BackgroundField& field) {
  switch (field.family) {
    case 1: return {0.0, 1.0};
    case 2: return {0.0, kI};
    case 3: return {1.0, 0.0};
    default: return {kI, 0.0};
  }
}

}  // namespace

BackgroundField::BackgroundField(int family_, int degree_, Complex center_)
    : family(family_), degree(degree_), center(center_) {
  if (family < 1 || family > 4) throw ConfigError("background field family must be in 1..4");
  if (degree < 1) throw ConfigError("background field degree must be positive");
}

Complex BackgroundField::displacement(Complex z, double kappa) const {
  const auto [p, q] = potentials_of(*this);
  const int n = degree;
  const Complex w = z - center;
  const Complex f = p * ipow(w, n);
  const Complex df = p * static_cast<double>(n) * ipow(w, n - 1);
  const Complex g = -q * ipow(w, n);
  return kappa * f - w * std::conj(df) - std::conj(g);
}

Complex BackgroundField::traction(Complex z, Complex normal, const LameConstants& bg) const {
  const auto [p, q] = potentials_of(*this);
  const int n = degree;
  const double nn = n;
  const Complex w = z - center;
  const Complex df = p * nn * ipow(w, n - 1);
  const Complex d2f = p * nn * (nn - 1.0) * ipow(w, n - 2);
  const Complex dg = -q * nn * ipow(w, n - 1);
  const Complex dH = bg.kappa() * df - std::conj(df);
  const Complex dbarH = -w * std::conj(d2f) - std::conj(dg);
  return 2.0 * (bg.lambda() + bg.mu()) * dH.real() * normal + 2.0 * bg.mu() * std::conj(normal) * dbarH;
}

BackgroundTrace evaluate_background(const BackgroundField& field, const BoundaryCurve& curve,
                                    const LameConstants& bg) {
  const auto [p, q] = potentials_of(field);
  const int n = field.degree;
  const double nn = n;
  BackgroundTrace out;
  out.displacement.resize(curve.size());
  out.traction.resize(curve.size());
  for (std::size_t j = 0; j < curve.size(); ++j) {
    const Complex z = curve.z()[j];
    const Complex dz = curve.dz()[j];
    const Complex w = z - field.center;
    const Complex df = p * nn * ipow(w, n - 1);
    const Complex d2f = p * nn * (nn - 1.0) * ipow(w, n - 2);
    const Complex dg = -q * nn * ipow(w, n - 1);
    out.displacement[j] = field.displacement(z, bg.kappa());
    // d/dtheta [f + w conj(f') + conj(g)]
    const Complex dW = df * dz + dz * std::conj(df) + w * std::conj(d2f * dz) + std::conj(dg * dz);
    out.traction[j] = -2.0 * kI * bg.mu() * dW / curve.speed()[j];
  }
  return out;
}

PeriodicQuadrature::PeriodicQuadrature(std::size_t nodes) : log_(nodes), cot_(nodes) {
  if (nodes < 4 || nodes % 2 != 0) throw ConfigError("periodic quadrature needs an even node count");
  const std::size_t half = nodes / 2;
  const double n = static_cast<double>(half);
  for (std::size_t d = 0; d < nodes; ++d) {
    const double t = 2.0 * kPi * static_cast<double>(d) / static_cast<double>(nodes);
    double lsum = 0.0;
    double csum = 0.0;
    for (std::size_t m = 1; m < half; ++m) {
      const double mm = static_cast<double>(m);
      lsum += std::cos(mm * t) / mm;
      csum += std::sin(mm * t);
    }
    log_[d] = -(2.0 * kPi / n) * lsum - (kPi / (n * n)) * std::cos(n * t);
    cot_[d] = -(2.0 / static_cast<double>(nodes)) * csum;
  }
}

std::size_t PeriodicQuadrature::wrap(std::ptrdiff_t d) const {
  const auto n = static_cast<std::ptrdiff_t>(log_.size());
  return static_cast<std::size_t>(((d % n) + n) % n);
}

std::vector<Complex> RealLinearOperator::apply(std::span<const Complex> p) const {
  std::vector<Complex> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex s{};
    for (std::size_t k = 0; k < n; ++k) s += a[j * n + k] * p[k] + b[j * n + k] * std::conj(p[k]);
    out[j] = s;
  }
  return out;
}

RealLinearOperator single_layer_operator(const BoundaryCurve& curve, const LameConstants& lame,
                                         const PeriodicQuadrature& quad) {
  const std::size_t n = curve.size();
  const double h = 2.0 * kPi / static_cast<double>(n);
  const double ca = lame.alpha() / (2.0 * kPi);
  const double cb = lame.beta() / (4.0 * kPi);
  RealLinearOperator op{n, std::vector<Complex>(n * n), std::vector<Complex>(n * n)};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double sp = curve.speed()[k];
      double smoothLog;
      Complex ratio;  // (z_j - z_k) / conj(z_j - z_k)
      if (j == k) {
        smoothLog = std::log(sp * sp);
        ratio = curve.tangent()[j] * curve.tangent()[j];
      } else {
        const Complex w = curve.z()[j] - curve.z()[k];
        const double s = std::sin(0.5 * (curve.theta()[j] - curve.theta()[k]));
        smoothLog = std::log(std::norm(w) / (4.0 * s * s));
        ratio = w * w / std::norm(w);
      }
      const auto offset = static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(k);
      const double logw = 0.5 * quad.log_weight(offset) + 0.5 * h * smoothLog;
      op.a[j * n + k] = ca * logw * sp - cb * h * sp;
      op.b[j * n + k] = -cb * h * sp * ratio;
    }
  }
  return op;
}

RealLinearOperator traction_operator(const BoundaryCurve& curve, const LameConstants& lame,
                                     const PeriodicQuadrature& quad) {
  const std::size_t n = curve.size();
  const double h = 2.0 * kPi / static_cast<double>(n);
  const double l = lame.lambda();
  const double m = lame.mu();
  const double c1 = 2.0 * (l + m) / (l + 2.0 * m);
  const double c2 = (l + 3.0 * m) / (l + 2.0 * m);
  const double c3 = (l + m) / (l + 2.0 * m);
  const double pref = -1.0 / (4.0 * kPi);
  RealLinearOperator op{n, std::vector<Complex>(n * n), std::vector<Complex>(n * n)};
  for (std::size_t j = 0; j < n; ++j) {
    const Complex nj = curve.normal()[j];
    for (std::size_t k = 0; k < n; ++k) {
      // C_jk: weights for \int f(s) z'(s) / (z(s) - z_j) ds, split as
      // (1/2) cot((s - t_j)/2) + smooth remainder.
      Complex remainder;
      Complex ratio;
      if (j == k) {
        remainder = curve.d2z()[j] / (2.0 * curve.dz()[j]);
        ratio = curve.tangent()[j] * curve.tangent()[j];
      } else {
        const Complex w = curve.z()[j] - curve.z()[k];
        const double half = 0.5 * (curve.theta()[k] - curve.theta()[j]);
        remainder = curve.dz()[k] / (curve.z()[k] - curve.z()[j]) - 0.5 * std::cos(half) / std::sin(half);
        ratio = w * w / std::norm(w);
      }
      const auto offset = static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(k);
      const Complex c = kPi * quad.cot_weight(offset) + h * remainder;
      const Complex tk = curve.tangent()[k];
      op.a[j * n + k] = pref * (0.5 * c1 * nj * c * std::conj(tk) + c2 * std::conj(nj) * std::conj(c) * tk);
      op.b[j * n + k] = pref * (0.5 * c1 * nj * std::conj(c) * tk + c3 * std::conj(nj) * std::conj(c) * tk * ratio);
    }
  }
  return op;
}

std::array<double, 3> rigid_moments(const BoundaryCurve& curve, std::span<const Complex> phi) {
  std::array<double, 3> m{};
  for (std::size_t j = 0; j < curve.size(); ++j) {
    const double w = curve.weight()[j];
    m[0] += w * phi[j].real();
    m[1] += w * phi[j].imag();
    m[2] += w * (kI * std::conj(curve.z()[j]) * phi[j]).real();
  }
  return m;
}

struct TransmissionSolver::Impl {
  RealLinearOperator sBg;
  RealLinearOperator sIn;
  RealLinearOperator kBg;
  RealLinearOperator kIn;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;
  std::size_t dim = 0;
};

namespace {

// Adds scale * (A p + B conj(p)) as a 2n x 2n real block.
void add_block(Eigen::MatrixXd& mat, std::size_t row0, std::size_t col0, const RealLinearOperator& op, double scale) {
  const std::size_t n = op.n;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = op.a[j * n + k];
      const Complex b = op.b[j * n + k];
      const Complex p = a + b;
      const Complex q = kI * (a - b);
      const auto r = static_cast<Eigen::Index>(row0 + 2 * j);
      const auto c = static_cast<Eigen::Index>(col0 + 2 * k);
      mat(r, c) += scale * p.real();
      mat(r, c + 1) += scale * q.real();
      mat(r + 1, c) += scale * p.imag();
      mat(r + 1, c + 1) += scale * q.imag();
    }
  }
}

void add_identity(Eigen::MatrixXd& mat, std::size_t row0, std::size_t col0, std::size_t n, double scale) {
  for (std::size_t j = 0; j < 2 * n; ++j) {
    mat(static_cast<Eigen::Index>(row0 + j), static_cast<Eigen::Index>(col0 + j)) += scale;
  }
}

std::array<Complex, 3> rigid_basis(Complex z, Complex anchor) { return {1.0, kI, -kI * (z - anchor)}; }

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const Complex& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TransmissionSolver::TransmissionSolver(const BoundaryCurve& curve, const MaterialPair& materials)
    : curve_(curve), materials_(materials), impl_(std::make_unique<Impl>()) {
  const std::size_t n = curve_.size();
  const PeriodicQuadrature quad(n);
  impl_->sBg = single_layer_operator(curve_, materials_.background(), quad);
  impl_->sIn = single_layer_operator(curve_, materials_.inclusion(), quad);
  impl_->kBg = traction_operator(curve_, materials_.background(), quad);
  impl_->kIn = traction_operator(curve_, materials_.inclusion(), quad);

  // Unknowns: [psi (2n) | phi (2n) | rigid-motion slack (3)].
  // Rows: trace equation (2n), traction equation (2n), rigid-motion moments of phi (3).
  const std::size_t dim = 4 * n + 3;
  impl_->dim = dim;
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  add_block(mat, 0, 0, impl_->sIn, 1.0);
  add_block(mat, 0, 2 * n, impl_->sBg, -1.0);
  add_block(mat, 2 * n, 0, impl_->kIn, 1.0);
  add_identity(mat, 2 * n, 0, n, -0.5);
  add_block(mat, 2 * n, 2 * n, impl_->kBg, -1.0);
  add_identity(mat, 2 * n, 2 * n, n, -0.5);

  const Complex anchor = curve_.centroid();
  for (std::size_t j = 0; j < n; ++j) {
    const auto basis = rigid_basis(curve_.z()[j], anchor);
    const double w = curve_.weight()[j];
    for (std::size_t r = 0; r < 3; ++r) {
      const auto slack = static_cast<Eigen::Index>(4 * n + r);
      const auto row = static_cast<Eigen::Index>(2 * n + 2 * j);
      mat(row, slack) -= basis[r].real();
      mat(row + 1, slack) -= basis[r].imag();
      const auto col = static_cast<Eigen::Index>(2 * n + 2 * j);
      mat(slack, col) += w * basis[r].real();
      mat(slack, col + 1) += w * basis[r].imag();
    }
  }

  impl_->lu.compute(mat);
  const double rc = impl_->lu.rcond();
  if (!(rc > 1e-14)) {
    std::ostringstream msg;
    msg << "transmission system is numerically singular (rcond estimate " << rc << ")";
    throw NumericalError(msg.str());
  }
}

TransmissionSolver::~TransmissionSolver() = default;
TransmissionSolver::TransmissionSolver(TransmissionSolver&&) noexcept = default;
TransmissionSolver& TransmissionSolver::operator=(TransmissionSolver&&) noexcept = default;

double TransmissionSolver::rcond() const { return impl_->lu.rcond(); }

DensityPair TransmissionSolver::solve(const BackgroundField& field) const {
  const std::size_t n = curve_.size();
  const BackgroundTrace bgTrace = evaluate_background(field, curve_, materials_.background());
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(impl_->dim));
  for (std::size_t j = 0; j < n; ++j) {
    const auto r = static_cast<Eigen::Index>(2 * j);
    rhs(r) = bgTrace.displacement[j].real();
    rhs(r + 1) = bgTrace.displacement[j].imag();
    rhs(r + static_cast<Eigen::Index>(2 * n)) = bgTrace.traction[j].real();
    rhs(r + static_cast<Eigen::Index>(2 * n) + 1) = bgTrace.traction[j].imag();
  }
  const Eigen::VectorXd x = impl_->lu.solve(rhs);
  DensityPair out;
  out.psi.resize(n);
  out.phi.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto r = static_cast<Eigen::Index>(2 * j);
    out.psi[j] = {x(r), x(r + 1)};
    out.phi[j] = {x(r + static_cast<Eigen::Index>(2 * n)), x(r + static_cast<Eigen::Index>(2 * n) + 1)};
  }
  return out;
}

double TransmissionSolver::residual(const DensityPair& d, const BackgroundField& field) const {
  const std::size_t n = curve_.size();
  const BackgroundTrace bgTrace = evaluate_background(field, curve_, materials_.background());
  const auto sIn = impl_->sIn.apply(d.psi);
  const auto sBg = impl_->sBg.apply(d.phi);
  const auto kIn = impl_->kIn.apply(d.psi);
  const auto kBg = impl_->kBg.apply(d.phi);
  std::vector<Complex> r1(n);
  std::vector<Complex> r2(n);
  for (std::size_t j = 0; j < n; ++j) {
    r1[j] = sIn[j] - sBg[j] - bgTrace.displacement[j];
    r2[j] = -0.5 * d.psi[j] + kIn[j] - 0.5 * d.phi[j] - kBg[j] - bgTrace.traction[j];
  }
  const double s1 = std::max(max_abs(bgTrace.displacement), 1e-300);
  const double s2 = std::max(max_abs(bgTrace.traction), 1e-300);
  return std::max(max_abs(r1) / s1, max_abs(r2) / s2);
}

DensityPair assemble_and_solve(const BoundaryCurve& curve, const MaterialPair& materials,
                               const BackgroundField& field) {
  return TransmissionSolver(curve, materials).solve(field);
}

Complex single_layer_at(const BoundaryCurve& curve, const LameConstants& lame, std::span<const Complex> density,
                        Complex x) {
  const double ca = lame.alpha() / (2.0 * kPi);
  const double cb = lame.beta() / (4.0 * kPi);
  Complex sum{};
  for (std::size_t k = 0; k < curve.size(); ++k) {
    const Complex w = x - curve.z()[k];
    const double r2 = std::norm(w);
    const Complex p = density[k];
    sum += curve.weight()[k] * (ca * 0.5 * std::log(r2) * p - cb * p - cb * (w * w / r2) * std::conj(p));
  }
  return sum;
}

ExteriorField evaluate_exterior(const BoundaryCurve& curve, const MaterialPair& materials,
                                const DensityPair& densities, const BackgroundField& field,
                                std::span<const Complex> points) {
  const LameConstants& bg = materials.background();
  double spacing = 0.0;
  for (double w : curve.weight()) spacing = std::max(spacing, w);
  ExteriorField out;
  out.values.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Complex x = points[i];
    double dmin = std::numeric_limits<double>::infinity();
    for (const Complex& z : curve.z()) dmin = std::min(dmin, std::abs(x - z));
    if (dmin < spacing) out.nearBoundary.push_back(i);
    out.values.push_back(field.displacement(x, bg.kappa()) + single_layer_at(curve, bg, densities.phi, x));
  }
  return out;
}

}  // namespace emtrec
