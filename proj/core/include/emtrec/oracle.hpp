#pragma once

#include <string>
#include <vector>

#include "emtrec/elastic.hpp"

namespace emtrec {

struct OracleCase {
  std::string label;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass() const { return error < tolerance; }
};

/// Nyström results on disks against the closed forms. For each centre in
/// {0, -0.9+1.2i} and radius in {0.7, 1, 1.3}: the EMT table up to `order`
/// (error = max entry gap / max |closed form|, which keeps the vanishing
/// cross terms meaningful) and the exterior densities of h_n^(1), h_n^(2)
/// (max nodal gap / max |closed form|).
std::vector<OracleCase> run_disk_oracle(const MaterialPair& materials, std::size_t nodes = 256, int order = 6,
                                        double tolerance = 1e-8);

}  // namespace emtrec
