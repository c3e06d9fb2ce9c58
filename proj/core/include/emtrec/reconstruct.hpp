#pragma once

#include <vector>

#include "emtrec/emt.hpp"

namespace emtrec {

struct DiskEstimate {
  Complex a0{};
  double gamma = 1.0;
};

/// Contracted EMTs for the families conj(q (z - a0)^n) centred at the fitted disk.
struct ModifiedEmtTable {
  Complex a0{};
  EmtTable values;
};

struct ShapeDiagnostics {
  /// Imaginary part of the k = 0 coefficient before it was dropped.
  double h0Imaginary = 0.0;
  /// Second-channel estimates of eps*hhat_{n+m+2}, indexed by n+m+2, with
  /// the gap to the first-channel value of the same index where one exists.
  struct ChannelValue {
    int n = 0;
    int m = 0;
    int index = 0;
    Complex value{};
    double gap = -1.0;  // negative when no first-channel value is available
  };
  std::vector<ChannelValue> secondChannel;
};

struct ShapeEstimate {
  DiskEstimate disk;
  /// eps * hhat_k for k = 0 .. K-1.
  std::vector<Complex> coeffs;
  ShapeDiagnostics diagnostics;
};

/// Disk fit from the three leading entries. Throws NumericalError when
/// E^{(1,1)}_{11} / M0 <= 0 or the shear moduli coincide.
DiskEstimate estimate_disk(const EmtTable& table, const MaterialPair& materials);

ModifiedEmtTable modified_emts(const EmtTable& table, Complex a0);

/// Delta = E~(Omega) - E~(D) for the disk of radius gamma.
EmtTable deltas(const ModifiedEmtTable& modified, double gamma, const MaterialPair& materials);

/// eps*hhat_k for k = 0 .. order-1 from the (n, m) = (k+1, 1) entries; the
/// k = 0 value is made real. Second-channel values are filled into diagnostics.
ShapeEstimate fourier_coefficients(const EmtTable& delta, const DiskEstimate& disk, const MaterialPair& materials,
                                   int order);

/// a0 + gamma e^{it} + 2 Re{sum_k c_k e^{ikt}} gamma e^{it} at uniform t.
std::vector<Complex> reconstruct_curve(const ShapeEstimate& estimate, int thetaSamples);

/// estimate_disk, modified_emts, deltas and fourier_coefficients in sequence.
ShapeEstimate reconstruct(const EmtTable& table, const MaterialPair& materials, int order);

struct ShapeError {
  double hausdorff = 0.0;
  /// RMS over estimate samples of the radius gap about the fitted centre c;
  /// the truth radius is interpolated in angle, so truth must be star-shaped about c.
  double radialL2 = 0.0;
};

/// Errors between a reconstructed sample set and a truth sample set.
ShapeError shape_error(const std::vector<Complex>& estimate, const std::vector<Complex>& truth, Complex centre);

}  // namespace emtrec
