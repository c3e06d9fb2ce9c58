#include "emtrec/disk.hpp"

#include <cmath>
#include <numbers>

#include "emtrec/emt.hpp"
#include "emtrec/error.hpp"

namespace emtrec {
namespace {

// Points within this relative distance of the circle count as on it.
constexpr double kBoundarySlack = 1e-12;

void check_indices(int n, int m, int t, int s) {
  if (n < 1 || m < 1) throw ConfigError("EMT degrees must be positive");
  if (t < 1 || t > 2 || s < 1 || s > 2) throw ConfigError("disk closed forms cover families 1 and 2 only");
}

}  // namespace

std::pair<Complex, Complex> disk_density_coefficients(const MaterialPair& materials, double gamma, int n, Complex q) {
  if (n < 1) throw ConfigError("degree must be positive");
  if (!(gamma > 0.0)) throw ConfigError("disk radius must be positive");
  if (q != Complex(1.0, 0.0) && q != Complex(0.0, 1.0)) throw ConfigError("q must be 1 or i");
  const DerivedConstants& k = materials.constants();
  const double muB = materials.background().mu();
  const double muI = materials.inclusion().mu();
  const Complex factor =
      std::conj(q) * static_cast<double>(n) * std::pow(gamma, n) * 2.0 / (k.alphaTilde * (muI * k.alpha + muB * k.beta));
  return {factor * (muI * k.alphaTilde - muB * k.alphaTilde), -factor};
}

DiskSolution disk_solution(const MaterialPair& materials, Complex a0, double gamma, int n, Complex q) {
  const auto [c, d] = disk_density_coefficients(materials, gamma, n, q);
  return {a0, gamma, n, q, c, d, materials.constants()};
}

Complex disk_interior_field(const DiskSolution& sol, Complex z) {
  const Complex w = z - sol.a0;
  if (std::abs(w) > sol.gamma * (1.0 + kBoundarySlack)) throw DomainError("interior field requested outside the disk");
  const double n = sol.degree;
  return -0.5 * sol.constants.alphaTilde * (sol.dMinusN / n) * std::pow(sol.gamma, -n) * std::conj(std::pow(w, sol.degree));
}

Complex disk_exterior_field(const DiskSolution& sol, Complex z) {
  const Complex w = z - sol.a0;
  if (std::abs(w) < sol.gamma * (1.0 - kBoundarySlack)) throw DomainError("exterior field requested inside the disk");
  const int n = sol.degree;
  const double gn = std::pow(sol.gamma, n);
  const Complex c = sol.cMinusN;
  const Complex first = -sol.constants.alpha * (c / static_cast<double>(n)) * gn * std::pow(w, -n);
  const Complex second = -sol.constants.beta * std::conj(c) *
                         (w * gn * std::conj(std::pow(w, -n - 1)) - gn * sol.gamma * sol.gamma * std::conj(std::pow(w, -n - 2)));
  return 0.5 * (first + second);
}

double disk_modified_emt(const MaterialPair& materials, double gamma, int n, int m, int t, int s) {
  check_indices(n, m, t, s);
  if (t != s || n != m) return 0.0;
  return 2.0 * std::numbers::pi * materials.constants().m0 * n * std::pow(gamma, n + m);
}

double disk_emt_general(const MaterialPair& materials, double gamma, Complex a0, int n, int m, int t, int s) {
  check_indices(n, m, t, s);
  const int order = std::max(n, m);
  EmtTable centred(order);
  for (int k = 1; k <= order; ++k)
    for (int l = 1; l <= order; ++l)
      for (int tt = 1; tt <= 2; ++tt)
        for (int ss = 1; ss <= 2; ++ss) centred.at(k, l, tt, ss) = disk_modified_emt(materials, gamma, k, l, tt, ss);
  // Origin-based families expand in families centred at a0 with the shift -a0.
  return recenter(centred, -a0).at(n, m, t, s);
}

}  // namespace emtrec
