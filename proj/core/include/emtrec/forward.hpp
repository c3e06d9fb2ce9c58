#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "emtrec/elastic.hpp"
#include "emtrec/geometry.hpp"

namespace emtrec {

/// Polynomial background solution of the plane Lamé system, written through
/// holomorphic potentials (f, g) in the local variable w = z - center:
///   H = kappa f(w) - w conj(f'(w)) - conj(g(w)).
/// Family t = 1, 2: (f, g) = (0, -q w^n) with q = 1, i, i.e. H = conj(q w^n).
/// Family t = 3, 4: (f, g) = (p w^n, 0) with p = 1, i.
struct BackgroundField {
  int family = 1;
  int degree = 1;
  Complex center{};

  BackgroundField() = default;
  BackgroundField(int family, int degree, Complex center = {});

  /// Displacement H(z) for background constants with the given kappa.
  Complex displacement(Complex z, double kappa) const;
  /// Traction of H on a boundary point with outward unit normal, via the
  /// Wirtinger form 2(lambda + mu) Re(dH/dz) N + 2 mu conj(N) dH/dzbar.
  Complex traction(Complex z, Complex normal, const LameConstants& bg) const;
};

/// Nodal H and traction density of a background field on a sampled curve.
/// The traction is -2 i mu d/dtheta[f + w conj(f') + conj(g)] / |z'|.
struct BackgroundTrace {
  std::vector<Complex> displacement;
  std::vector<Complex> traction;
};

BackgroundTrace evaluate_background(const BackgroundField& field, const BoundaryCurve& curve, const LameConstants& bg);

/// Nodal transmission densities: psi represents the inclusion-side single
/// layer, phi the exterior one. phi is orthogonal to rigid motions.
struct DensityPair {
  std::vector<Complex> psi;
  std::vector<Complex> phi;
};

/// Spectral quadrature weights for periodic kernels on N = 2n uniform nodes.
/// log_weight(d): \int_0^{2pi} log(4 sin^2((t_j - s)/2)) f(s) ds ~ sum_k log_weight(j - k) f_k.
/// cot_weight(d): (1/2pi) p.v.\int cot((s - t_j)/2) f(s) ds ~ sum_k cot_weight(j - k) f_k.
class PeriodicQuadrature {
 public:
  explicit PeriodicQuadrature(std::size_t n);
  double log_weight(std::ptrdiff_t offset) const { return log_[wrap(offset)]; }
  double cot_weight(std::ptrdiff_t offset) const { return cot_[wrap(offset)]; }
  std::size_t size() const { return log_.size(); }

 private:
  std::size_t wrap(std::ptrdiff_t d) const;
  std::vector<double> log_;
  std::vector<double> cot_;
};

/// Nyström discretization of the boundary operators on one curve, as complex
/// real-linear maps out_j = sum_k A_jk p_k + B_jk conj(p_k).
struct RealLinearOperator {
  std::size_t n = 0;
  std::vector<Complex> a;  // row-major n x n
  std::vector<Complex> b;

  std::vector<Complex> apply(std::span<const Complex> p) const;
};

/// Single-layer trace S[phi] on the curve for the given Lamé constants.
RealLinearOperator single_layer_operator(const BoundaryCurve& curve, const LameConstants& lame,
                                         const PeriodicQuadrature& quad);
/// Principal-value traction operator K*[phi] on the curve.
RealLinearOperator traction_operator(const BoundaryCurve& curve, const LameConstants& lame,
                                     const PeriodicQuadrature& quad);

/// Factorized transmission system for a fixed curve and material pair;
/// solves for any number of background fields.
class TransmissionSolver {
 public:
  TransmissionSolver(const BoundaryCurve& curve, const MaterialPair& materials);
  ~TransmissionSolver();
  TransmissionSolver(TransmissionSolver&&) noexcept;
  TransmissionSolver& operator=(TransmissionSolver&&) noexcept;

  const BoundaryCurve& curve() const { return curve_; }
  const MaterialPair& materials() const { return materials_; }

  DensityPair solve(const BackgroundField& field) const;

  /// Max relative residual of the two discrete boundary equations for a
  /// computed pair (uses the assembled operators, not the factorization).
  double residual(const DensityPair& densities, const BackgroundField& field) const;

  /// Reciprocal condition estimate of the bordered system (LU based).
  double rcond() const;

 private:
  struct Impl;
  BoundaryCurve curve_;
  MaterialPair materials_;
  std::unique_ptr<Impl> impl_;
};

DensityPair assemble_and_solve(const BoundaryCurve& curve, const MaterialPair& materials,
                               const BackgroundField& field);

/// Three discrete rigid-motion moments of phi: sum w Re phi, sum w Im phi,
/// sum w Re{i conj(z) phi}.
std::array<double, 3> rigid_moments(const BoundaryCurve& curve, std::span<const Complex> phi);

struct ExteriorField {
  std::vector<Complex> values;
  /// Indices of points closer to the curve than one node spacing; the
  /// trapezoid rule is inaccurate there.
  std::vector<std::size_t> nearBoundary;
};

/// u = H + S[phi] at points outside the inclusion.
ExteriorField evaluate_exterior(const BoundaryCurve& curve, const MaterialPair& materials,
                                const DensityPair& densities, const BackgroundField& field,
                                std::span<const Complex> points);

/// S[phi](x) off the curve by the trapezoid rule.
Complex single_layer_at(const BoundaryCurve& curve, const LameConstants& lame, std::span<const Complex> density,
                        Complex x);

}  // namespace emtrec
