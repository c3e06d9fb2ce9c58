#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "emtrec/elastic.hpp"

namespace emtrec {

struct Disk {
  Complex center{};
  double radius = 1.0;
};

struct Ellipse {
  Complex center{};
  double semiAxisA = 1.0;  // along x
  double semiAxisB = 1.0;  // along y
};

/// z(t) = center + e^{it} + coefficient cos(2t)
struct Kite {
  Complex center{};
  double coefficient = 0.65;
};

/// z(t) = center + e^{it} + 2 Re{amplitude e^{i mode t}} e^{it}
struct Starfish {
  Complex center{};
  double modeAmplitude = 0.125;
  int modeIndex = 5;
};

/// z(t) = a0 + gamma e^{it} + 2 Re{sum_k c_k e^{ikt}} gamma e^{it}, where
/// c_k = eps * hhat_k are stored as products (index k = position in the vector).
struct PerturbedDisk {
  Complex center{};
  double radius = 1.0;
  std::vector<Complex> coefficients;
};

/// z(t) = sum_k a_k e^{ikt} over an arbitrary finite set of integer modes.
struct FourierCurve {
  std::map<int, Complex> modes;
};

using CurveDescriptor = std::variant<Disk, Ellipse, Kite, Starfish, PerturbedDisk, FourierCurve>;

/// Position and first two parameter derivatives of a curve at one parameter value.
struct CurvePoint {
  Complex z;
  Complex dz;
  Complex d2z;
};

/// Analytic evaluation of a descriptor in its own (unoriented) parametrization.
CurvePoint evaluate(const CurveDescriptor& descriptor, double theta);

/// Radius used by Fourier analysis against the disk density basis; 1 for non-disk shapes.
double reference_radius(const CurveDescriptor& descriptor);

/// Uniform trapezoidal sampling of a smooth closed curve. The parametrization is
/// reversed if needed so that the curve runs counterclockwise; normals point outward.
class BoundaryCurve {
 public:
  static constexpr std::size_t kDefaultNodes = 256;

  BoundaryCurve(CurveDescriptor descriptor, std::size_t nodeCount);

  const CurveDescriptor& descriptor() const { return descriptor_; }
  std::size_t size() const { return theta_.size(); }
  bool reversed() const { return reversed_; }

  std::span<const double> theta() const { return theta_; }
  std::span<const Complex> z() const { return z_; }
  std::span<const Complex> dz() const { return dz_; }
  std::span<const Complex> d2z() const { return d2z_; }
  /// |z'(theta_j)|
  std::span<const double> speed() const { return speed_; }
  /// Unit tangent z'/|z'|.
  std::span<const Complex> tangent() const { return tangent_; }
  /// Unit outward normal -i z'/|z'|.
  std::span<const Complex> normal() const { return normal_; }
  /// Arc-length trapezoid weights (2 pi / N) |z'|.
  std::span<const double> weight() const { return weight_; }

  double perimeter() const;
  double signed_area() const;
  Complex centroid() const;

  /// Oriented evaluation at an arbitrary parameter (consistent with the nodes).
  CurvePoint at(double theta) const;

 private:
  CurveDescriptor descriptor_;
  bool reversed_ = false;
  std::vector<double> theta_;
  std::vector<Complex> z_;
  std::vector<Complex> dz_;
  std::vector<Complex> d2z_;
  std::vector<double> speed_;
  std::vector<Complex> tangent_;
  std::vector<Complex> normal_;
  std::vector<double> weight_;
};

/// Throws ConfigError unless n is even and at least 16.
BoundaryCurve sample(const CurveDescriptor& descriptor, std::size_t nodeCount = BoundaryCurve::kDefaultNodes);

/// Discrete pairing (1 / 2 pi gamma) sum_j w_j phi_{-k}(z_j) f_j with the disk
/// density basis phi_k = gamma^{-1} e^{ik theta} and disk arc weights, gamma
/// being the descriptor's reference radius. For band-limited f this is the
/// exact Fourier coefficient of f / gamma.
Complex fourier_coefficient(const BoundaryCurve& curve, int k, std::span<const Complex> f);

}  // namespace emtrec
