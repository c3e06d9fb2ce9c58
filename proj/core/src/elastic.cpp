#include "emtrec/elastic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "emtrec/error.hpp"

namespace emtrec {

LameConstants::LameConstants(double lambda, double mu) : lambda_(lambda), mu_(mu) {
  if (!std::isfinite(lambda) || !std::isfinite(mu)) {
    throw ConfigError("Lame constants must be finite");
  }
  if (!(mu > 0.0) || !(lambda + mu > 0.0)) {
    std::ostringstream msg;
    msg << "Lame constants (" << lambda << ", " << mu << ") violate mu > 0, lambda + mu > 0";
    throw ConfigError(msg.str());
  }
}

double LameConstants::alpha() const { return 0.5 * (1.0 / mu_ + 1.0 / (2.0 * mu_ + lambda_)); }

double LameConstants::beta() const { return 0.5 * (1.0 / mu_ - 1.0 / (2.0 * mu_ + lambda_)); }

double LameConstants::kappa() const { return (lambda_ + 3.0 * mu_) / (lambda_ + mu_); }

DerivedConstants derive_constants(const LameConstants& background, const LameConstants& inclusion) {
  DerivedConstants c;
  c.alpha = background.alpha();
  c.beta = background.beta();
  c.alphaTilde = inclusion.alpha();
  c.betaTilde = inclusion.beta();
  c.kappa = background.kappa();
  c.kappaTilde = inclusion.kappa();

  const double mu = background.mu();
  const double muT = inclusion.mu();
  const double denom = muT * c.alpha + mu * c.beta;
  c.m0 = 2.0 * (muT - mu) / denom;
  c.m1 = 1.0 / denom;
  c.m2 = c.beta * (mu - muT) / denom;
  return c;
}

MaterialPair::MaterialPair(LameConstants background, LameConstants inclusion)
    : background_(background), inclusion_(inclusion) {
  const double dl = background.lambda() - inclusion.lambda();
  const double dm = background.mu() - inclusion.mu();
  if (dl * dl + dm * dm == 0.0) {
    throw ConfigError("inclusion and background have identical Lame constants");
  }
  if (dl * dm < 0.0) {
    throw ConfigError("(lambda - lambda~)(mu - mu~) must be nonnegative for solvability");
  }
  if (!(inclusion.lambda() > 0.0)) {
    throw ConfigError("inclusion lambda must be positive");
  }
  constants_ = derive_constants(background_, inclusion_);
}

Mat2 kelvin_matrix(const std::array<double, 2>& x, const LameConstants& bg) {
  const double r2 = x[0] * x[0] + x[1] * x[1];
  if (r2 == 0.0) {
    throw DomainError("Kelvin matrix is singular at the origin");
  }
  const double a = bg.alpha() / (2.0 * std::numbers::pi);
  const double b = bg.beta() / (2.0 * std::numbers::pi);
  const double logr = 0.5 * std::log(r2);
  Mat2 g{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      g[i][j] = (i == j ? a * logr : 0.0) - b * x[i] * x[j] / r2;
    }
  }
  return g;
}

Mat2 elastic_tensor_apply(const LameConstants& bg, const Mat2& a) {
  const double tr = a[0][0] + a[1][1];
  Mat2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out[i][j] = 2.0 * bg.mu() * a[i][j] + (i == j ? bg.lambda() * tr : 0.0);
    }
  }
  return out;
}

}  // namespace emtrec
