#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "emtrec/forward.hpp"

namespace emtrec {

/// Multiplicative Gaussian measurement noise: E -> E (1 + g), g ~ N(0, sigma2).
struct NoiseModel {
  double sigma2 = 0.0;
  std::uint64_t seed = 0;

  NoiseModel() = default;
  NoiseModel(double sigma2, std::uint64_t seed);
};

/// Contracted EMTs E^{(t,s)}_{nm} for 1 <= n, m <= order and t, s in {1, 2}.
/// n and t index the background field h_n^(t), m and s the test field h_m^(s).
class EmtTable {
 public:
  explicit EmtTable(int order);

  int order() const { return order_; }

  double at(int n, int m, int t, int s) const { return values_[index(n, m, t, s)]; }
  double& at(int n, int m, int t, int s) { return values_[index(n, m, t, s)]; }

  /// Raw storage in canonical order: n outer, then m, t, s inner.
  const std::vector<double>& values() const { return values_; }

  /// Noise provenance; empty for exact tables.
  const std::optional<NoiseModel>& noise() const { return noise_; }
  void set_noise(const NoiseModel& model) { noise_ = model; }
  bool exact() const { return !noise_.has_value(); }

  /// Largest absolute entry.
  double max_abs() const;
  /// max |E^{(t,s)}_{nm} - E^{(s,t)}_{mn}| / max_abs().
  double asymmetry() const;

  /// Restriction to a lower order (provenance kept).
  EmtTable truncated(int order) const;

 private:
  std::size_t index(int n, int m, int t, int s) const;
  int order_;
  std::vector<double> values_;
  std::optional<NoiseModel> noise_;
};

/// sum_j w_j Re{F(z_j) conj(phi_j)}: the real pairing of a test field with a density.
double pair_with_density(const BoundaryCurve& curve, const BackgroundField& test, double kappa,
                         std::span<const Complex> phi);

/// One contracted EMT; t and s may be any of 1..4.
double contracted_emt(const BoundaryCurve& curve, const MaterialPair& materials, int n, int m, int t, int s);

/// Full table of order `order`, one factorization and 2 * order solves.
EmtTable emt_table(const BoundaryCurve& curve, const MaterialPair& materials, int order);
EmtTable emt_table(const TransmissionSolver& solver, int order);

/// Table for the families conj(q (z - a0)^n) recentred at a0, from a table
/// for the origin-based families. Uses conj((z - a0)^n) = sum_k c_nk conj(z^k)
/// with c_nk = binom(n, k) (-conj(a0))^{n-k} (constants carry no density), and
/// splits each complex multiple c h_k^(t) into real combinations of h_k^(1),
/// h_k^(2) because the density depends only real-linearly on the field.
EmtTable recenter(const EmtTable& table, Complex a0);

/// Standard normal draws from a 64-bit Mersenne Twister via Box-Muller.
/// The mapping from seed to sequence is fixed: each draw consumes two
/// mt19937_64 outputs u1, u2 turned into doubles in (0, 1] and [0, 1) with
/// 53-bit resolution, and returns sqrt(-2 ln u1) cos(2 pi u2).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed);
  double next();

 private:
  std::mt19937_64 engine_;
};

/// Each entry multiplied by (1 + sqrt(sigma2) * g) with g drawn in canonical
/// index order. Throws ConfigError on a table that is already noisy.
EmtTable apply_noise(const EmtTable& table, const NoiseModel& noise);

}  // namespace emtrec
