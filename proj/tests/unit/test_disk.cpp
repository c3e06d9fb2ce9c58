#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "common.hpp"
#include "emtrec/disk.hpp"
#include "emtrec/emt.hpp"
#include "emtrec/error.hpp"

using namespace emtrec;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
}  // namespace

TEST(DiskCoefficients, LeadingCoefficientIsM0) {
  const MaterialPair mp = fixtures::soft_pair();
  const auto [c, d] = disk_density_coefficients(mp, 1.0, 1, 1.0);
  EXPECT_NEAR(std::abs(c - mp.constants().m0), 0.0, 1e-14);
  const auto [c2, d2] = disk_density_coefficients(mp, 0.7, 1, 1.0);
  EXPECT_NEAR(std::abs(c2 - mp.constants().m0 * 0.7), 0.0, 1e-14);
}

TEST(DiskCoefficients, QScalingAndEqualShear) {
  const MaterialPair mp = fixtures::soft_pair();
  const auto [c1, d1] = disk_density_coefficients(mp, 1.2, 3, 1.0);
  const auto [ci, di] = disk_density_coefficients(mp, 1.2, 3, kI);
  EXPECT_NEAR(std::abs(ci + kI * c1), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(di + kI * d1), 0.0, 1e-14);

  const MaterialPair same(LameConstants(1.5, 1.2), LameConstants(2.5, 1.2));
  const auto [c0, d0] = disk_density_coefficients(same, 1.0, 2, 1.0);
  const DerivedConstants& k = same.constants();
  EXPECT_EQ(c0, Complex(0.0));
  EXPECT_NEAR(std::abs(d0 + 2.0 * 2.0 / (k.alphaTilde * 1.2 * (k.alpha + k.beta))), 0.0, 1e-14);
  EXPECT_THROW(disk_density_coefficients(mp, 1.0, 0, 1.0), ConfigError);
  EXPECT_THROW(disk_density_coefficients(mp, 1.0, 1, 2.0), ConfigError);
}

TEST(DiskFields, InteriorBasics) {
  const MaterialPair mp = fixtures::soft_pair();
  const DiskSolution sol = disk_solution(mp, {0.3, -0.2}, 0.8, 2, 1.0);
  EXPECT_EQ(disk_interior_field(sol, {0.3, -0.2}), Complex(0.0));
  EXPECT_THROW(disk_interior_field(sol, {2.0, 0.0}), DomainError);
  EXPECT_THROW(disk_exterior_field(sol, {0.3, -0.1}), DomainError);
}

TEST(DiskFields, MatchQuadratureOfLayerPotentials) {
  const MaterialPair mp = fixtures::soft_pair();
  for (int n : {1, 2, 4}) {
    for (Complex q : {Complex(1.0), kI}) {
      const Complex a0(-0.9, 1.2);
      const double gamma = 1.03;
      const DiskSolution sol = disk_solution(mp, a0, gamma, n, q);
      const BoundaryCurve c(Disk{a0, gamma}, 256);
      std::vector<Complex> phi(c.size()), psi(c.size());
      for (std::size_t j = 0; j < c.size(); ++j) {
        const Complex e = std::exp(-kI * (n * c.theta()[j])) / gamma;
        phi[j] = sol.cMinusN * e;
        psi[j] = sol.dMinusN * e;
      }
      const Complex zi = a0 + 0.3 * gamma * std::exp(kI * 0.4);
      const Complex ze = a0 + 3.0 * gamma * std::exp(kI * 2.1);
      EXPECT_NEAR(std::abs(disk_interior_field(sol, zi) - single_layer_at(c, mp.inclusion(), psi, zi)), 0.0, 1e-10);
      EXPECT_NEAR(std::abs(disk_exterior_field(sol, ze) - single_layer_at(c, mp.background(), phi, ze)), 0.0, 1e-10);
    }
  }
}

TEST(DiskFields, TraceTransmissionOnBoundary) {
  const MaterialPair mp = fixtures::stiff_pair();
  const double kappa = mp.constants().kappa;
  for (int n = 1; n <= 5; ++n) {
    for (int family = 1; family <= 2; ++family) {
      const Complex a0(0.4, -0.7);
      const double gamma = 0.9;
      const DiskSolution sol = disk_solution(mp, a0, gamma, n, family == 1 ? Complex(1.0) : kI);
      const BackgroundField h(family, n, a0);
      for (int j = 0; j < 64; ++j) {
        const Complex z = a0 + gamma * std::exp(kI * (2.0 * kPi * j / 64.0));
        const Complex outside = h.displacement(z, kappa) + disk_exterior_field(sol, z);
        EXPECT_NEAR(std::abs(outside - disk_interior_field(sol, z)), 0.0, 1e-10);
      }
    }
  }
}

TEST(DiskFields, ExteriorDecayAndVanishingCoefficient) {
  const MaterialPair mp = fixtures::soft_pair();
  const DiskSolution sol = disk_solution(mp, {}, 1.0, 1, 1.0);
  const double r1 = std::abs(disk_exterior_field(sol, {40.0, 0.0}));
  const double r2 = std::abs(disk_exterior_field(sol, {80.0, 0.0}));
  EXPECT_NEAR(r1 / r2, 2.0, 1e-3);
  DiskSolution zero = sol;
  zero.cMinusN = 0.0;
  EXPECT_EQ(disk_exterior_field(zero, {2.0, 1.0}), Complex(0.0));
}

TEST(DiskEmt, ModifiedValues) {
  const MaterialPair mp = fixtures::soft_pair();
  const double m0 = mp.constants().m0;
  EXPECT_NEAR(disk_modified_emt(mp, 1.0, 1, 1, 1, 1), 2.0 * kPi * m0, 1e-13);
  EXPECT_NEAR(disk_modified_emt(mp, 1.3, 3, 3, 2, 2), 2.0 * kPi * m0 * 3.0 * std::pow(1.3, 6), 1e-12);
  EXPECT_EQ(disk_modified_emt(mp, 1.0, 2, 3, 1, 1), 0.0);
  EXPECT_EQ(disk_modified_emt(mp, 1.0, 2, 2, 1, 2), 0.0);
  EXPECT_THROW(disk_modified_emt(mp, 1.0, 1, 1, 3, 1), ConfigError);
}

TEST(DiskEmt, GeneralReducesAndMatchesFirstOrderForms) {
  const MaterialPair mp = fixtures::soft_pair();
  const double m0 = mp.constants().m0;
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      EXPECT_NEAR(disk_emt_general(mp, 0.8, 0.0, n, m, 1, 1), disk_modified_emt(mp, 0.8, n, m, 1, 1), 1e-13);
  const Complex a0(0.3, -0.2);
  const double g = 0.7;
  EXPECT_NEAR(disk_emt_general(mp, g, a0, 1, 2, 1, 1), 2.0 * kPi * g * g * m0 * (a0 + std::conj(a0)).real(), 1e-13);
  EXPECT_NEAR(disk_emt_general(mp, g, a0, 1, 2, 1, 2), (2.0 * kPi * g * g * m0 * kI * (a0 - std::conj(a0))).real(), 1e-13);
}

TEST(DiskEmt, GeneralIsSymmetric) {
  const MaterialPair mp = fixtures::stiff_pair();
  const Complex a0(-0.9, 1.2);
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 5; ++m)
      for (int t = 1; t <= 2; ++t)
        for (int s = 1; s <= 2; ++s) {
          const double a = disk_emt_general(mp, 1.03, a0, n, m, t, s);
          EXPECT_NEAR(a, disk_emt_general(mp, 1.03, a0, m, n, s, t), 1e-12 * (1.0 + std::abs(a)));
        }
}

TEST(DiskEmt, MatchesNystromOffCentre) {
  const MaterialPair mp = fixtures::soft_pair();
  const Complex a0(-0.9, 1.2);
  const EmtTable t = emt_table(BoundaryCurve(Disk{a0, 1.03}, 256), mp, 6);
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 6; ++m)
      for (int tt = 1; tt <= 2; ++tt)
        for (int s = 1; s <= 2; ++s) EXPECT_NEAR(t.at(n, m, tt, s), disk_emt_general(mp, 1.03, a0, n, m, tt, s), 1e-8 * t.max_abs());
}

TEST(DiskEmt, SmallestNodeCountStillExact) {
  // Sixteen nodes resolve the degree-one disk problem to rounding.
  const MaterialPair mp = fixtures::soft_pair();
  const BoundaryCurve c(Disk{{}, 1.0}, 16);
  EXPECT_NEAR(contracted_emt(c, mp, 1, 1, 1, 1), 2.0 * kPi * mp.constants().m0, 1e-12);
}
