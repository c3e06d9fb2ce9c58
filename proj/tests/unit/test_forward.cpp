#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "common.hpp"
#include "emtrec/error.hpp"
#include "emtrec/forward.hpp"

using namespace emtrec;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

std::vector<Complex> smooth_density(const BoundaryCurve& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Complex> a(9);
  for (auto& v : a) v = Complex(g(rng), g(rng));
  std::vector<Complex> phi(c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    for (int k = -4; k <= 4; ++k) phi[j] += a[k + 4] * std::exp(kI * (k * c.theta()[j])) / (1.0 + k * k);
  return phi;
}

double pairing(const BoundaryCurve& c, std::span<const Complex> u, std::span<const Complex> v) {
  double s = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) s += c.weight()[j] * (u[j] * std::conj(v[j])).real();
  return s;
}

}  // namespace

TEST(Quadrature, LogWeightsIntegrateFourierModes) {
  const std::size_t n = 32;
  const PeriodicQuadrature q(n);
  for (int m : {0, 1, 3, -5, 15}) {
    for (std::size_t j : {0u, 7u}) {
      Complex sum{};
      for (std::size_t k = 0; k < n; ++k) {
        sum += q.log_weight(std::ptrdiff_t(j) - std::ptrdiff_t(k)) * std::exp(kI * (2.0 * kPi * m * double(k) / n));
      }
      const Complex expected = m == 0 ? Complex(0.0) : -2.0 * kPi / std::abs(m) * std::exp(kI * (2.0 * kPi * m * double(j) / n));
      EXPECT_NEAR(std::abs(sum - expected), 0.0, 1e-12) << "m=" << m;
    }
  }
}

TEST(Quadrature, CotWeightsActAsHilbertTransform) {
  const std::size_t n = 32;
  const PeriodicQuadrature q(n);
  for (int m : {0, 1, 4, -6, 15}) {
    const std::size_t j = 5;
    Complex sum{};
    for (std::size_t k = 0; k < n; ++k) {
      sum += q.cot_weight(std::ptrdiff_t(j) - std::ptrdiff_t(k)) * std::exp(kI * (2.0 * kPi * m * double(k) / n));
    }
    const double sign = m > 0 ? 1.0 : (m < 0 ? -1.0 : 0.0);
    const Complex expected = kI * sign * std::exp(kI * (2.0 * kPi * m * double(j) / n));
    EXPECT_NEAR(std::abs(sum - expected), 0.0, 1e-12) << "m=" << m;
  }
}

TEST(BackgroundField, DisplacementFamilies) {
  const double kappa = LameConstants(1.5, 1.2).kappa();
  const Complex z(0.4, -1.1);
  EXPECT_NEAR(std::abs(BackgroundField(1, 1).displacement(z, kappa) - std::conj(z)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(BackgroundField(2, 2).displacement(z, kappa) - std::conj(kI * z * z)), 0.0, 1e-15);
  // f = z gives kappa z - z.
  EXPECT_NEAR(std::abs(BackgroundField(3, 1).displacement(z, kappa) - (kappa - 1.0) * z), 0.0, 1e-15);
  const Complex c(0.3, 0.2);
  EXPECT_NEAR(std::abs(BackgroundField(1, 3, c).displacement(z, kappa) - std::conj(std::pow(z - c, 3))), 0.0, 1e-14);
  EXPECT_THROW(BackgroundField(5, 1), ConfigError);
  EXPECT_THROW(BackgroundField(1, 0), ConfigError);
}

TEST(BackgroundField, TractionRoutesAgree) {
  const LameConstants bg(1.5, 1.2);
  const BoundaryCurve c(Kite{{0.6, 0.8}, 0.65}, 64);
  for (int family = 1; family <= 4; ++family) {
    for (int n = 1; n <= 5; ++n) {
      const BackgroundField f(family, n, {0.1, -0.2});
      const BackgroundTrace tr = evaluate_background(f, c, bg);
      for (std::size_t j = 0; j < c.size(); ++j) {
        const Complex direct = f.traction(c.z()[j], c.normal()[j], bg);
        EXPECT_NEAR(std::abs(tr.traction[j] - direct), 0.0, 1e-11 * (1.0 + std::abs(direct)));
      }
    }
  }
}

TEST(Operators, InteriorTractionBalancesRigidMotions) {
  // An interior single layer is in equilibrium, so (-1/2 + K*) phi has no
  // net force or torque for any density.
  const LameConstants bg(1.5, 1.2);
  const BoundaryCurve c(Kite{{0.6, 0.8}, 0.65}, 256);
  const PeriodicQuadrature q(c.size());
  const RealLinearOperator k = traction_operator(c, bg, q);
  const auto phi = smooth_density(c, 3);
  auto kphi = k.apply(phi);
  for (std::size_t j = 0; j < c.size(); ++j) kphi[j] -= 0.5 * phi[j];
  const double scale = pairing(c, phi, phi);
  for (int r = 0; r < 3; ++r) {
    std::vector<Complex> rigid(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) rigid[j] = r == 0 ? Complex(1.0) : r == 1 ? kI : -kI * c.z()[j];
    EXPECT_NEAR(pairing(c, kphi, rigid) / scale, 0.0, 1e-10) << "rigid mode " << r;
  }
}

TEST(Operators, SingleLayerIsSymmetric) {
  const LameConstants bg(1.5, 1.2);
  std::mt19937_64 rng(5);
  const BoundaryCurve c(fixtures::random_curve(rng), 256);
  const PeriodicQuadrature q(c.size());
  const RealLinearOperator s = single_layer_operator(c, bg, q);
  const auto a = smooth_density(c, 1);
  const auto b = smooth_density(c, 2);
  const double lhs = pairing(c, s.apply(a), b);
  const double rhs = pairing(c, a, s.apply(b));
  EXPECT_NEAR(lhs, rhs, 1e-10 * std::abs(lhs));
}

TEST(Operators, SingleLayerTraceMatchesOffCurveLimit) {
  // Far from the curve the trapezoid rule is exact to rounding; compare the
  // Nyström trace with the smooth off-curve evaluation through a point far away.
  const LameConstants bg(1.5, 1.2);
  const BoundaryCurve c(Ellipse{{}, 1.5, 0.8}, 128);
  const auto phi = smooth_density(c, 9);
  const Complex far(7.0, -4.0);
  const BoundaryCurve fine(Ellipse{{}, 1.5, 0.8}, 512);
  std::vector<Complex> phiFine(fine.size());
  // Same band-limited density sampled on the finer grid.
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  std::vector<Complex> a(9);
  for (auto& v : a) v = Complex(g(rng), g(rng));
  for (std::size_t j = 0; j < fine.size(); ++j)
    for (int k = -4; k <= 4; ++k) phiFine[j] += a[k + 4] * std::exp(kI * (k * fine.theta()[j])) / (1.0 + k * k);
  const Complex coarseVal = single_layer_at(c, bg, phi, far);
  const Complex fineVal = single_layer_at(fine, bg, phiFine, far);
  EXPECT_NEAR(std::abs(coarseVal - fineVal), 0.0, 1e-13);
}

TEST(Transmission, KiteResidualAndRigidOrthogonality) {
  const MaterialPair mp = fixtures::soft_pair();
  const BoundaryCurve c(Kite{{0.6, 0.8}, 0.65}, 256);
  const TransmissionSolver solver(c, mp);
  EXPECT_GT(solver.rcond(), 1e-14);
  for (int family = 1; family <= 4; ++family) {
    const BackgroundField f(family, 3);
    const DensityPair d = solver.solve(f);
    EXPECT_LT(solver.residual(d, f), 1e-10);
    for (double m : rigid_moments(c, d.phi)) EXPECT_NEAR(m, 0.0, 1e-10);
  }
}

TEST(Transmission, ConvergesWithNodeCount) {
  const MaterialPair mp = fixtures::stiff_pair();
  auto moment = [&](std::size_t n) {
    const BoundaryCurve c(Kite{{0.6, 0.8}, 0.65}, n);
    const DensityPair d = assemble_and_solve(c, mp, BackgroundField(1, 2));
    double s = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) s += c.weight()[j] * (std::conj(c.z()[j] * c.z()[j]) * std::conj(d.phi[j])).real();
    return s;
  };
  // Exponential convergence: the gap roughly squares with each doubling.
  const double m64 = moment(64);
  const double m128 = moment(128);
  const double m256 = moment(256);
  const double m512 = moment(512);
  EXPECT_LT(std::abs(m128 - m512), 1e-3 * std::abs(m64 - m512));
  EXPECT_NEAR(m256, m512, 1e-12 * std::abs(m512));
}

TEST(Transmission, ExteriorFieldFlagsNearPoints) {
  const MaterialPair mp = fixtures::soft_pair();
  const BoundaryCurve c(Disk{{}, 1.0}, 64);
  const BackgroundField f(1, 1);
  const DensityPair d = assemble_and_solve(c, mp, f);
  const std::vector<Complex> pts = {Complex(3.0, 0.0), Complex(1.0 + 1e-3, 0.0)};
  const ExteriorField ext = evaluate_exterior(c, mp, d, f, pts);
  ASSERT_EQ(ext.values.size(), 2u);
  ASSERT_EQ(ext.nearBoundary.size(), 1u);
  EXPECT_EQ(ext.nearBoundary[0], 1u);
}

TEST(Transmission, FarFieldDecays) {
  // The perturbation S[phi] decays like 1/|x| because phi carries no net force.
  const MaterialPair mp = fixtures::soft_pair();
  const BoundaryCurve c(Starfish{}, 128);
  const DensityPair d = assemble_and_solve(c, mp, BackgroundField(2, 1));
  const LameConstants& bg = mp.background();
  const double r1 = std::abs(single_layer_at(c, bg, d.phi, Complex(10.0, 3.0)));
  const double r2 = std::abs(single_layer_at(c, bg, d.phi, Complex(20.0, 6.0)));
  EXPECT_NEAR(r1 / r2, 2.0, 0.1);
}
