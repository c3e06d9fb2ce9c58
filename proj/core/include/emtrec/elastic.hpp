#pragma once

#include <array>
#include <complex>

namespace emtrec {

using Complex = std::complex<double>;
using Mat2 = std::array<std::array<double, 2>, 2>;

/// Lamé constants of an isotropic plane-elastic material.
/// Construction enforces ellipticity (mu > 0, lambda + mu > 0).
class LameConstants {
 public:
  LameConstants(double lambda, double mu);

  double lambda() const { return lambda_; }
  double mu() const { return mu_; }

  /// alpha = (1/mu + 1/(2mu + lambda)) / 2
  double alpha() const;
  /// beta = (1/mu - 1/(2mu + lambda)) / 2
  double beta() const;
  /// kappa = (lambda + 3mu) / (lambda + mu)
  double kappa() const;

 private:
  double lambda_;
  double mu_;
};

/// Scalar constants derived from a background/inclusion pair. Every
/// downstream formula reads from here.
struct DerivedConstants {
  double alpha = 0;
  double beta = 0;
  double alphaTilde = 0;
  double betaTilde = 0;
  double kappa = 0;
  double kappaTilde = 0;
  // M0 = 2(mu~ - mu) / (mu~ alpha + mu beta)
  double m0 = 0;
  // M1 = 1 / (mu~ alpha + mu beta)
  double m1 = 0;
  // M2 = beta (mu - mu~) / (mu~ alpha + mu beta)
  double m2 = 0;
};

DerivedConstants derive_constants(const LameConstants& background, const LameConstants& inclusion);

/// Background medium plus inclusion. Validated at construction:
///   (lambda - lambda~)^2 + (mu - mu~)^2 != 0,
///   (lambda - lambda~)(mu - mu~) >= 0,
///   lambda~ > 0, mu~ > 0.
/// Equal shear moduli are accepted (the forward problem is well posed) but
/// shear_contrast_vanishes() reports it; the inversion refuses such pairs.
class MaterialPair {
 public:
  MaterialPair(LameConstants background, LameConstants inclusion);

  const LameConstants& background() const { return background_; }
  const LameConstants& inclusion() const { return inclusion_; }
  const DerivedConstants& constants() const { return constants_; }

  bool shear_contrast_vanishes() const { return inclusion_.mu() == background_.mu(); }

 private:
  LameConstants background_;
  LameConstants inclusion_;
  DerivedConstants constants_;
};

/// Kelvin matrix Gamma(x) of the plane Lamé operator. Throws DomainError at x = 0.
Mat2 kelvin_matrix(const std::array<double, 2>& x, const LameConstants& bg);

/// C a = lambda tr(a) I + 2 mu a for symmetric a.
Mat2 elastic_tensor_apply(const LameConstants& bg, const Mat2& a);

}  // namespace emtrec
