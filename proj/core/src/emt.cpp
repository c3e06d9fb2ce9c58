#include "emtrec/emt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "emtrec/error.hpp"

namespace emtrec {

NoiseModel::NoiseModel(double sigma2_, std::uint64_t seed_) : sigma2(sigma2_), seed(seed_) {
  if (!(sigma2 >= 0.0) || !std::isfinite(sigma2)) throw ConfigError("noise variance must be finite and nonnegative");
}

EmtTable::EmtTable(int order) : order_(order) {
  if (order < 1) throw ConfigError("EMT order must be at least 1");
  values_.assign(static_cast<std::size_t>(order) * order * 4, 0.0);
}

std::size_t EmtTable::index(int n, int m, int t, int s) const {
  if (n < 1 || n > order_ || m < 1 || m > order_ || t < 1 || t > 2 || s < 1 || s > 2) {
    throw DomainError("EMT index out of range");
  }
  return ((static_cast<std::size_t>(n - 1) * order_ + (m - 1)) * 2 + (t - 1)) * 2 + (s - 1);
}

double EmtTable::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double EmtTable::asymmetry() const {
  double worst = 0.0;
  for (int n = 1; n <= order_; ++n)
    for (int m = 1; m <= order_; ++m)
      for (int t = 1; t <= 2; ++t)
        for (int s = 1; s <= 2; ++s) worst = std::max(worst, std::abs(at(n, m, t, s) - at(m, n, s, t)));
  const double scale = max_abs();
  return scale > 0.0 ? worst / scale : worst;
}

EmtTable EmtTable::truncated(int order) const {
  if (order > order_) throw DomainError("cannot truncate an EMT table to a higher order");
  EmtTable out(order);
  for (int n = 1; n <= order; ++n)
    for (int m = 1; m <= order; ++m)
      for (int t = 1; t <= 2; ++t)
        for (int s = 1; s <= 2; ++s) out.at(n, m, t, s) = at(n, m, t, s);
  out.noise_ = noise_;
  return out;
}

double pair_with_density(const BoundaryCurve& curve, const BackgroundField& test, double kappa,
                         std::span<const Complex> phi) {
  double sum = 0.0;
  for (std::size_t j = 0; j < curve.size(); ++j) {
    const Complex f = test.displacement(curve.z()[j], kappa);
    sum += curve.weight()[j] * (f * std::conj(phi[j])).real();
  }
  return sum;
}

double contracted_emt(const BoundaryCurve& curve, const MaterialPair& materials, int n, int m, int t, int s) {
  const BackgroundField field(t, n);
  const BackgroundField test(s, m);
  const DensityPair d = assemble_and_solve(curve, materials, field);
  return pair_with_density(curve, test, materials.constants().kappa, d.phi);
}

EmtTable emt_table(const TransmissionSolver& solver, int order) {
  EmtTable table(order);
  const BoundaryCurve& curve = solver.curve();
  const double kappa = solver.materials().constants().kappa;
  for (int n = 1; n <= order; ++n) {
    for (int t = 1; t <= 2; ++t) {
      const DensityPair d = solver.solve(BackgroundField(t, n));
      for (int m = 1; m <= order; ++m) {
        for (int s = 1; s <= 2; ++s) table.at(n, m, t, s) = pair_with_density(curve, BackgroundField(s, m), kappa, d.phi);
      }
    }
  }
  return table;
}

EmtTable emt_table(const BoundaryCurve& curve, const MaterialPair& materials, int order) {
  if (order < 1) throw ConfigError("EMT order must be at least 1");
  return emt_table(TransmissionSolver(curve, materials), order);
}

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// c h^(t) = w[0] h^(1) + w[1] h^(2), since h^(2) = -i h^(1).
std::array<double, 2> split(Complex c, int t) {
  if (t == 1) return {c.real(), -c.imag()};
  return {c.imag(), c.real()};
}

}  // namespace

EmtTable recenter(const EmtTable& table, Complex a0) {
  const int ord = table.order();
  std::vector<std::vector<Complex>> c(ord + 1, std::vector<Complex>(ord + 1));
  for (int n = 1; n <= ord; ++n)
    for (int k = 1; k <= n; ++k) c[n][k] = binomial(n, k) * std::pow(-std::conj(a0), n - k);

  EmtTable out(ord);
  for (int n = 1; n <= ord; ++n)
    for (int m = 1; m <= ord; ++m)
      for (int t = 1; t <= 2; ++t)
        for (int s = 1; s <= 2; ++s) {
          double sum = 0.0;
          for (int k = 1; k <= n; ++k) {
            const auto wt = split(c[n][k], t);
            for (int l = 1; l <= m; ++l) {
              const auto ws = split(c[m][l], s);
              for (int tt = 1; tt <= 2; ++tt)
                for (int ss = 1; ss <= 2; ++ss) sum += wt[tt - 1] * ws[ss - 1] * table.at(k, l, tt, ss);
            }
          }
          out.at(n, m, t, s) = sum;
        }
  if (table.noise()) out.set_noise(*table.noise());
  return out;
}

GaussianStream::GaussianStream(std::uint64_t seed) : engine_(seed) {}

double GaussianStream::next() {
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * kScale;
  const double u2 = static_cast<double>(engine_() >> 11) * kScale;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

EmtTable apply_noise(const EmtTable& table, const NoiseModel& noise) {
  if (!table.exact()) throw ConfigError("noise can only be applied to an exact EMT table");
  EmtTable out = table;
  GaussianStream gauss(noise.seed);
  const double sd = std::sqrt(noise.sigma2);
  const int ord = table.order();
  for (int n = 1; n <= ord; ++n)
    for (int m = 1; m <= ord; ++m)
      for (int t = 1; t <= 2; ++t)
        for (int s = 1; s <= 2; ++s) out.at(n, m, t, s) = table.at(n, m, t, s) * (1.0 + sd * gauss.next());
  out.set_noise(noise);
  return out;
}

}  // namespace emtrec
