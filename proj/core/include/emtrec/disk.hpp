#pragma once

#include <utility>

#include "emtrec/elastic.hpp"

namespace emtrec {

/// Closed-form transmission solution on the disk |z - a0| < gamma for the
/// background field conj(q (z - a0)^n). The exterior density is
/// phi = cMinusN gamma^{-1} e^{-in theta}, the interior one
/// psi = dMinusN gamma^{-1} e^{-in theta}.
struct DiskSolution {
  Complex a0{};
  double gamma = 1.0;
  int degree = 1;
  Complex q{1.0, 0.0};
  Complex cMinusN{};
  Complex dMinusN{};
  DerivedConstants constants;
};

/// (c_{-n}, d_{-n}) = conj(q) n gamma^n 2 / (alpha~ (mu~ alpha + mu beta)) * (mu~ alpha~ - mu alpha~, -1).
/// q must be 1 or i.
std::pair<Complex, Complex> disk_density_coefficients(const MaterialPair& materials, double gamma, int n, Complex q);

DiskSolution disk_solution(const MaterialPair& materials, Complex a0, double gamma, int n, Complex q);

/// Interior single layer S~[psi](z) = -(alpha~/2) (d_{-n}/n) gamma^{-n} conj((z - a0)^n).
/// Throws DomainError outside the closed disk.
Complex disk_interior_field(const DiskSolution& sol, Complex z);

/// Exterior single layer S[phi](z). Throws DomainError inside the open disk.
Complex disk_exterior_field(const DiskSolution& sol, Complex z);

/// Contracted EMTs of the disk for families centred at its own centre:
/// 2 pi M0 n delta_nm gamma^{n+m} for (t,s) = (1,1), (2,2), zero for cross pairs.
double disk_modified_emt(const MaterialPair& materials, double gamma, int n, int m, int t, int s);

/// E^{(t,s)}_{nm} of the disk centred at a0, with origin-based families.
double disk_emt_general(const MaterialPair& materials, double gamma, Complex a0, int n, int m, int t, int s);

}  // namespace emtrec
