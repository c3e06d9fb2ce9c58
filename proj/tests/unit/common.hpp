#pragma once

#include <random>

#include "emtrec/elastic.hpp"
#include "emtrec/geometry.hpp"

namespace emtrec::fixtures {

// Background of the numerical experiments and the softest inclusion.
inline MaterialPair soft_pair() { return {LameConstants(1.5, 1.2), LameConstants(0.6, 0.4)}; }
inline MaterialPair stiff_pair() { return {LameConstants(1.5, 1.2), LameConstants(1.8, 1.5)}; }

// Smooth star-shaped curve with random low modes; amplitudes small enough to stay simple.
inline FourierCurve random_curve(std::mt19937_64& rng, Complex centre = {}) {
  std::normal_distribution<double> g;
  FourierCurve f;
  f.modes[0] = centre;
  f.modes[1] = 1.0;
  for (int k = -3; k <= 4; ++k) {
    if (k == 0 || k == 1) continue;
    f.modes[k] += Complex(g(rng), g(rng)) * (0.05 / (1.0 + k * k));
  }
  return f;
}

}  // namespace emtrec::fixtures
