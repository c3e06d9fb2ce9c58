#include "emtrec/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "emtrec/disk.hpp"
#include "emtrec/error.hpp"

namespace emtrec {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

void require_contrast(const MaterialPair& materials) {
  if (materials.shear_contrast_vanishes()) {
    throw NumericalError("shear moduli coincide: M0 = 0 and the inversion formulas divide by zero");
  }
}

}  // namespace

DiskEstimate estimate_disk(const EmtTable& table, const MaterialPair& materials) {
  require_contrast(materials);
  if (table.order() < 2) throw ConfigError("disk fitting needs EMTs up to order 2");
  const double m0 = materials.constants().m0;
  const double ratio = table.at(1, 1, 1, 1) / m0;
  if (!(ratio > 0.0)) {
    std::ostringstream msg;
    msg << "cannot fit a disk: E^(1,1)_11 / M0 = " << ratio
        << " is not positive (the leading EMT has the wrong sign for this material contrast)";
    throw NumericalError(msg.str());
  }
  DiskEstimate est;
  est.gamma = std::sqrt(ratio / (2.0 * kPi));
  est.a0 = (table.at(1, 2, 1, 1) - kI * table.at(1, 2, 1, 2)) / (4.0 * kPi * est.gamma * est.gamma * m0);
  return est;
}

ModifiedEmtTable modified_emts(const EmtTable& table, Complex a0) { return {a0, recenter(table, a0)}; }

EmtTable deltas(const ModifiedEmtTable& modified, double gamma, const MaterialPair& materials) {
  if (!(gamma > 0.0)) throw ConfigError("disk radius must be positive");
  EmtTable out = modified.values;
  const int ord = out.order();
  for (int n = 1; n <= ord; ++n)
    for (int m = 1; m <= ord; ++m)
      for (int t = 1; t <= 2; ++t)
        for (int s = 1; s <= 2; ++s) out.at(n, m, t, s) -= disk_modified_emt(materials, gamma, n, m, t, s);
  return out;
}

ShapeEstimate fourier_coefficients(const EmtTable& delta, const DiskEstimate& disk, const MaterialPair& materials,
                                   int order) {
  require_contrast(materials);
  if (order < 1 || order > delta.order()) throw ConfigError("requested order exceeds the EMT table");
  if (!(disk.gamma > 0.0)) throw ConfigError("disk radius must be positive");
  const DerivedConstants& k = materials.constants();
  const double contrast = materials.inclusion().mu() - materials.background().mu();

  auto first = [&](int n, int m) {
    const Complex num = delta.at(n, m, 1, 1) + delta.at(n, m, 2, 2) - kI * (delta.at(n, m, 1, 2) - delta.at(n, m, 2, 1));
    return num / (16.0 * kPi * n * m * std::pow(disk.gamma, n + m) * contrast * k.m1);
  };
  auto second = [&](int n, int m) {
    const Complex num = delta.at(n, m, 1, 1) - delta.at(n, m, 2, 2) + kI * (delta.at(n, m, 1, 2) + delta.at(n, m, 2, 1));
    return num / (16.0 * kPi * n * m * std::pow(disk.gamma, n + m) * contrast * k.m1 * k.m2);
  };

  ShapeEstimate est;
  est.disk = disk;
  est.coeffs.resize(order);
  for (int j = 0; j < order; ++j) est.coeffs[j] = first(j + 1, 1);
  est.diagnostics.h0Imaginary = est.coeffs[0].imag();
  est.coeffs[0] = est.coeffs[0].real();

  for (int n = 1; n <= order; ++n) {
    ShapeDiagnostics::ChannelValue v;
    v.n = n;
    v.m = 1;
    v.index = n + 3;
    v.value = second(n, 1);
    if (v.index < order) v.gap = std::abs(v.value - est.coeffs[v.index]);
    est.diagnostics.secondChannel.push_back(v);
  }
  return est;
}

std::vector<Complex> reconstruct_curve(const ShapeEstimate& estimate, int thetaSamples) {
  if (thetaSamples < 1) throw ConfigError("theta sample count must be positive");
  std::vector<Complex> out(thetaSamples);
  for (int j = 0; j < thetaSamples; ++j) {
    const double t = 2.0 * kPi * j / thetaSamples;
    Complex sum{};
    for (std::size_t k = 0; k < estimate.coeffs.size(); ++k) sum += estimate.coeffs[k] * std::exp(kI * (double(k) * t));
    const Complex e = estimate.disk.gamma * std::exp(kI * t);
    out[j] = estimate.disk.a0 + e + 2.0 * sum.real() * e;
  }
  return out;
}

ShapeEstimate reconstruct(const EmtTable& table, const MaterialPair& materials, int order) {
  if (order < 2 || order > table.order()) throw ConfigError("order must be between 2 and the table order");
  const DiskEstimate disk = estimate_disk(table, materials);
  const ModifiedEmtTable modified = modified_emts(table.truncated(order), disk.a0);
  return fourier_coefficients(deltas(modified, disk.gamma, materials), disk, materials, order);
}

ShapeError shape_error(const std::vector<Complex>& estimate, const std::vector<Complex>& truth, Complex centre) {
  if (estimate.empty() || truth.empty()) throw ConfigError("shape_error needs nonempty sample sets");
  auto directed = [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double worst = 0.0;
    for (Complex p : a) {
      double best = std::numeric_limits<double>::infinity();
      for (Complex q : b) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  ShapeError err;
  err.hausdorff = std::max(directed(estimate, truth), directed(truth, estimate));

  // Truth radius as a periodic function of angle about the centre, by linear
  // interpolation between angle-sorted samples.
  std::vector<std::pair<double, double>> polar;
  polar.reserve(truth.size());
  for (Complex q : truth) polar.emplace_back(std::arg(q - centre), std::abs(q - centre));
  std::sort(polar.begin(), polar.end());
  auto radius_at = [&](double a) {
    auto hi = std::lower_bound(polar.begin(), polar.end(), std::make_pair(a, -1.0));
    const auto& right = hi == polar.end() ? polar.front() : *hi;
    const auto& left = hi == polar.begin() ? polar.back() : *(hi - 1);
    double a0 = left.first;
    double a1 = right.first;
    double x = a;
    if (a1 <= a0) a1 += 2.0 * kPi;
    if (x < a0) x += 2.0 * kPi;
    const double span = a1 - a0;
    const double u = span > 0.0 ? (x - a0) / span : 0.0;
    return left.second + u * (right.second - left.second);
  };
  double sum = 0.0;
  for (Complex p : estimate) {
    const double d = std::abs(p - centre) - radius_at(std::arg(p - centre));
    sum += d * d;
  }
  err.radialL2 = std::sqrt(sum / static_cast<double>(estimate.size()));
  return err;
}

}  // namespace emtrec
