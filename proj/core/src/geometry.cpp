#include "emtrec/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "emtrec/error.hpp"

namespace emtrec {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// z = c + R e^{it} rho(t) with rho real; shared by starfish and perturbed disks.
CurvePoint modulated_circle(Complex center, double radius, double rho, double drho, double d2rho, double t) {
  const Complex e = radius * std::exp(kI * t);
  return {center + e * rho, e * (kI * rho + drho), e * (-rho + 2.0 * kI * drho + d2rho)};
}

struct Evaluator {
  double t;

  CurvePoint operator()(const Disk& d) const {
    const Complex e = d.radius * std::exp(kI * t);
    return {d.center + e, kI * e, -e};
  }

  CurvePoint operator()(const Ellipse& e) const {
    const double c = std::cos(t);
    const double s = std::sin(t);
    return {e.center + Complex(e.semiAxisA * c, e.semiAxisB * s), Complex(-e.semiAxisA * s, e.semiAxisB * c),
            Complex(-e.semiAxisA * c, -e.semiAxisB * s)};
  }

  CurvePoint operator()(const Kite& k) const {
    const Complex e = std::exp(kI * t);
    return {k.center + e + k.coefficient * std::cos(2.0 * t), kI * e - 2.0 * k.coefficient * std::sin(2.0 * t),
            -e - 4.0 * k.coefficient * std::cos(2.0 * t)};
  }

  CurvePoint operator()(const Starfish& s) const {
    const double m = s.modeIndex;
    const double a = 2.0 * s.modeAmplitude;
    return modulated_circle(s.center, 1.0, 1.0 + a * std::cos(m * t), -a * m * std::sin(m * t),
                            -a * m * m * std::cos(m * t), t);
  }

  CurvePoint operator()(const PerturbedDisk& p) const {
    double rho = 1.0;
    double drho = 0.0;
    double d2rho = 0.0;
    for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
      const double kk = static_cast<double>(k);
      const Complex term = p.coefficients[k] * std::exp(kI * (kk * t));
      rho += 2.0 * term.real();
      drho += 2.0 * (kI * kk * term).real();
      d2rho += -2.0 * kk * kk * term.real();
    }
    return modulated_circle(p.center, p.radius, rho, drho, d2rho, t);
  }

  CurvePoint operator()(const FourierCurve& f) const {
    CurvePoint pt{};
    for (const auto& [k, a] : f.modes) {
      const double kk = k;
      const Complex term = a * std::exp(kI * (kk * t));
      pt.z += term;
      pt.dz += kI * kk * term;
      pt.d2z += -kk * kk * term;
    }
    return pt;
  }
};

void validate(const CurveDescriptor& descriptor) {
  struct Check {
    void operator()(const Disk& d) const {
      if (!(d.radius > 0.0)) throw ConfigError("disk radius must be positive");
    }
    void operator()(const Ellipse& e) const {
      if (!(e.semiAxisA > 0.0) || !(e.semiAxisB > 0.0)) throw ConfigError("ellipse semi-axes must be positive");
    }
    void operator()(const Kite&) const {}
    void operator()(const Starfish& s) const {
      if (s.modeIndex < 1) throw ConfigError("starfish mode index must be positive");
    }
    void operator()(const PerturbedDisk& p) const {
      if (!(p.radius > 0.0)) throw ConfigError("perturbed disk radius must be positive");
    }
    void operator()(const FourierCurve& f) const {
      if (f.modes.empty()) throw ConfigError("Fourier curve has no modes");
    }
  };
  std::visit(Check{}, descriptor);
}

bool segments_cross(Complex a, Complex b, Complex c, Complex d) {
  auto cross = [](Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); };
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

}  // namespace

CurvePoint evaluate(const CurveDescriptor& descriptor, double theta) {
  return std::visit(Evaluator{theta}, descriptor);
}

double reference_radius(const CurveDescriptor& descriptor) {
  if (const auto* d = std::get_if<Disk>(&descriptor)) return d->radius;
  if (const auto* p = std::get_if<PerturbedDisk>(&descriptor)) return p->radius;
  return 1.0;
}

BoundaryCurve::BoundaryCurve(CurveDescriptor descriptor, std::size_t nodeCount) : descriptor_(std::move(descriptor)) {
  validate(descriptor_);
  if (nodeCount < 16 || nodeCount % 2 != 0) {
    std::ostringstream msg;
    msg << "node count must be even and at least 16 (got " << nodeCount << ")";
    throw ConfigError(msg.str());
  }
  const std::size_t n = nodeCount;
  theta_.resize(n);
  for (std::size_t j = 0; j < n; ++j) theta_[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(n);

  double area = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const CurvePoint p = evaluate(descriptor_, theta_[j]);
    area += 0.5 * (std::conj(p.z) * p.dz).imag();
  }
  reversed_ = area < 0.0;

  z_.resize(n);
  dz_.resize(n);
  d2z_.resize(n);
  speed_.resize(n);
  tangent_.resize(n);
  normal_.resize(n);
  weight_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const CurvePoint p = at(theta_[j]);
    const double s = std::abs(p.dz);
    if (!(s > 1e-12)) throw ConfigError("curve parametrization has vanishing speed");
    z_[j] = p.z;
    dz_[j] = p.dz;
    d2z_[j] = p.d2z;
    speed_[j] = s;
    tangent_[j] = p.dz / s;
    normal_[j] = -kI * p.dz / s;
    weight_[j] = kTwoPi / static_cast<double>(n) * s;
  }

  // Turning number must be one for a simple closed curve.
  double turning = 0.0;
  for (std::size_t j = 0; j < n; ++j) turning += std::arg(tangent_[(j + 1) % n] / tangent_[j]);
  if (std::abs(turning - kTwoPi) > 1e-6) throw ConfigError("curve is not simple (turning number != 1)");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_cross(z_[i], z_[i + 1], z_[j], z_[(j + 1) % n])) {
        throw ConfigError("curve is self-intersecting");
      }
    }
  }
}

CurvePoint BoundaryCurve::at(double theta) const {
  if (!reversed_) return evaluate(descriptor_, theta);
  CurvePoint p = evaluate(descriptor_, -theta);
  p.dz = -p.dz;
  return p;
}

double BoundaryCurve::perimeter() const {
  double sum = 0.0;
  for (double w : weight_) sum += w;
  return sum;
}

double BoundaryCurve::signed_area() const {
  double sum = 0.0;
  const double h = kTwoPi / static_cast<double>(size());
  for (std::size_t j = 0; j < size(); ++j) sum += 0.5 * (std::conj(z_[j]) * dz_[j]).imag() * h;
  return sum;
}

Complex BoundaryCurve::centroid() const {
  // Area centroid via Green's theorem: (1/A) \oint z^2/2 * ... in real form.
  double cx = 0.0;
  double cy = 0.0;
  const double h = kTwoPi / static_cast<double>(size());
  for (std::size_t j = 0; j < size(); ++j) {
    const double x = z_[j].real();
    const double y = z_[j].imag();
    cx += 0.5 * x * x * dz_[j].imag() * h;
    cy -= 0.5 * y * y * dz_[j].real() * h;
  }
  const double a = signed_area();
  return {cx / a, cy / a};
}

BoundaryCurve sample(const CurveDescriptor& descriptor, std::size_t nodeCount) {
  return BoundaryCurve(descriptor, nodeCount);
}

Complex fourier_coefficient(const BoundaryCurve& curve, int k, std::span<const Complex> f) {
  if (f.size() != curve.size()) throw ConfigError("nodal values do not match the curve's node count");
  const double gamma = reference_radius(curve.descriptor());
  const double n = static_cast<double>(curve.size());
  Complex sum{};
  for (std::size_t j = 0; j < curve.size(); ++j) {
    const double w = kTwoPi / n * gamma;
    const Complex basis = std::exp(-kI * (static_cast<double>(k) * curve.theta()[j])) / gamma;
    sum += w * basis * f[j];
  }
  return sum / (kTwoPi * gamma);
}

}  // namespace emtrec
