#include "emtrec/oracle.hpp"

#include <algorithm>
#include <cstdio>

#include "emtrec/disk.hpp"
#include "emtrec/emt.hpp"

namespace emtrec {
namespace {

std::string describe(const char* what, Complex a0, double gamma) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s a0=(%g,%g) gamma=%g", what, a0.real(), a0.imag(), gamma);
  return buf;
}

}  // namespace

std::vector<OracleCase> run_disk_oracle(const MaterialPair& materials, std::size_t nodes, int order, double tolerance) {
  std::vector<OracleCase> cases;
  for (Complex a0 : {Complex(0.0, 0.0), Complex(-0.9, 1.2)}) {
    for (double gamma : {0.7, 1.0, 1.3}) {
      const BoundaryCurve curve(Disk{a0, gamma}, nodes);
      const TransmissionSolver solver(curve, materials);

      const EmtTable table = emt_table(solver, order);
      double gap = 0.0;
      double scale = 0.0;
      for (int n = 1; n <= order; ++n)
        for (int m = 1; m <= order; ++m)
          for (int t = 1; t <= 2; ++t)
            for (int s = 1; s <= 2; ++s) {
              const double exact = disk_emt_general(materials, gamma, a0, n, m, t, s);
              gap = std::max(gap, std::abs(table.at(n, m, t, s) - exact));
              scale = std::max(scale, std::abs(exact));
            }
      cases.push_back({describe("emt", a0, gamma), gap / scale, tolerance});

      gap = 0.0;
      scale = 0.0;
      for (int n = 1; n <= order; ++n) {
        for (int t = 1; t <= 2; ++t) {
          const DensityPair d = solver.solve(BackgroundField(t, n, a0));
          const Complex q = t == 1 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
          const Complex c = disk_density_coefficients(materials, gamma, n, q).first;
          for (std::size_t j = 0; j < curve.size(); ++j) {
            const Complex exact = c / gamma * std::exp(Complex(0.0, -n * curve.theta()[j]));
            gap = std::max(gap, std::abs(d.phi[j] - exact));
            scale = std::max(scale, std::abs(exact));
          }
        }
      }
      cases.push_back({describe("density", a0, gamma), gap / scale, tolerance});
    }
  }
  return cases;
}

}  // namespace emtrec
