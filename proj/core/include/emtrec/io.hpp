#pragma once

#include <optional>
#include <string>

#include "emtrec/reconstruct.hpp"

namespace emtrec {

/// JSON text forms. Complex numbers are [re, im] pairs; parse errors and
/// invalid fields throw ConfigError.
std::string to_json(const CurveDescriptor& descriptor);
CurveDescriptor descriptor_from_json(const std::string& text);

std::string to_json(const EmtTable& table);
EmtTable emt_table_from_json(const std::string& text);

std::string to_json(const ShapeEstimate& estimate);
ShapeEstimate shape_estimate_from_json(const std::string& text);

/// One experiment: materials, shape, order and sampling, optional noise.
struct RunConfig {
  MaterialPair materials{LameConstants(1.5, 1.2), LameConstants(0.6, 0.4)};
  CurveDescriptor shape = Disk{};
  int order = 6;
  int nodes = static_cast<int>(BoundaryCurve::kDefaultNodes);
  std::optional<NoiseModel> noise;
  std::string outputDir = ".";
  int thetaSamples = 512;
};

/// {"materials": {"background": {"lambda", "mu"}, "inclusion": {...}},
///  "shape": {...}, "order", "nodes", "noise": {"sigma2", "seed"},
///  "outputDir", "thetaSamples"}; absent fields keep their defaults.
RunConfig run_config_from_json(const std::string& text);
std::string to_json(const RunConfig& config);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace emtrec
