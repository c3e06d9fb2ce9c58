// emtrec: forward EMTs, reconstruction, round trips and the disk oracle.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "emtrec/error.hpp"
#include "emtrec/io.hpp"
#include "emtrec/oracle.hpp"

namespace fs = std::filesystem;
using namespace emtrec;

namespace {

struct Overrides {
  std::string config;
  std::optional<int> order;
  std::optional<int> nodes;
  std::optional<double> noiseVar;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "run configuration (JSON)");
  cmd->add_option("--order", o.order, "highest EMT order");
  cmd->add_option("--nodes", o.nodes, "quadrature nodes on the boundary");
  cmd->add_option("--noise-var", o.noiseVar, "multiplicative noise variance");
  cmd->add_option("--seed", o.seed, "noise seed");
  cmd->add_option("--out", o.out, "output directory");
}

RunConfig load_config(const Overrides& o) {
  RunConfig cfg = o.config.empty() ? RunConfig{} : run_config_from_json(read_file(o.config));
  if (o.order) cfg.order = *o.order;
  if (o.nodes) cfg.nodes = *o.nodes;
  if (o.noiseVar || o.seed) {
    NoiseModel base = cfg.noise.value_or(NoiseModel{});
    cfg.noise = NoiseModel(o.noiseVar.value_or(base.sigma2), o.seed.value_or(base.seed));
  }
  if (o.out) cfg.outputDir = *o.out;
  if (cfg.order < 2) throw ConfigError("order must be at least 2");
  if (cfg.nodes < 16 || cfg.nodes % 2 != 0) throw ConfigError("nodes must be even and at least 16");
  fs::create_directories(cfg.outputDir);
  return cfg;
}

std::string path_in(const RunConfig& cfg, const char* name) { return (fs::path(cfg.outputDir) / name).string(); }

EmtTable forward_table(const RunConfig& cfg) {
  const BoundaryCurve curve(cfg.shape, static_cast<std::size_t>(cfg.nodes));
  EmtTable table = emt_table(curve, cfg.materials, cfg.order);
  if (cfg.noise && cfg.noise->sigma2 > 0.0) table = apply_noise(table, *cfg.noise);
  return table;
}

std::string boundary_csv(const std::vector<Complex>& pts) {
  std::ostringstream out;
  out << "theta,x,y\n";
  char line[96];
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(pts.size());
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", t, pts[j].real(), pts[j].imag());
    out << line;
  }
  return out.str();
}

// Gray truth, black reconstruction, y axis pointing up.
std::string overlay_svg(const std::vector<Complex>& truth, const std::vector<Complex>& rec) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const auto* set : {&truth, &rec})
    for (Complex p : *set) {
      xmin = std::min(xmin, p.real());
      xmax = std::max(xmax, p.real());
      ymin = std::min(ymin, p.imag());
      ymax = std::max(ymax, p.imag());
    }
  const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
  xmin -= pad;
  ymin -= pad;
  const double w = xmax - xmin + pad;
  const double h = ymax - ymin + pad;
  const double size = 480.0;
  const double scale = size / std::max(w, h);
  auto poly = [&](const std::vector<Complex>& pts, const char* colour) {
    std::ostringstream s;
    s << "  <polygon fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    char buf[64];
    for (Complex p : pts) {
      std::snprintf(buf, sizeof buf, "%.3f,%.3f ", (p.real() - xmin) * scale, (ymin + h - p.imag()) * scale);
      s << buf;
    }
    s << "\"/>\n";
    return s.str();
  };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * scale << "\" height=\"" << h * scale << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!truth.empty()) svg << poly(truth, "#999999");
  svg << poly(rec, "#000000");
  svg << "</svg>\n";
  return svg.str();
}

std::vector<Complex> truth_samples(const RunConfig& cfg) {
  const BoundaryCurve curve(cfg.shape, static_cast<std::size_t>(std::max(16, cfg.thetaSamples + cfg.thetaSamples % 2)));
  return {curve.z().begin(), curve.z().end()};
}

void write_reconstruction(const RunConfig& cfg, const ShapeEstimate& est, bool withTruth) {
  const auto rec = reconstruct_curve(est, cfg.thetaSamples);
  write_file(path_in(cfg, "estimate.json"), to_json(est));
  write_file(path_in(cfg, "boundary.csv"), boundary_csv(rec));
  write_file(path_in(cfg, "overlay.svg"), overlay_svg(withTruth ? truth_samples(cfg) : std::vector<Complex>{}, rec));
}

int cmd_forward(const Overrides& o) {
  const RunConfig cfg = load_config(o);
  const EmtTable table = forward_table(cfg);
  const auto path = path_in(cfg, "emt_table.json");
  write_file(path, to_json(table));
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_reconstruct(const Overrides& o, const std::string& tablePath) {
  const RunConfig cfg = load_config(o);
  const EmtTable table = emt_table_from_json(read_file(tablePath));
  const int order = o.order ? *o.order : std::min(cfg.order, table.order());
  const ShapeEstimate est = reconstruct(table, cfg.materials, order);
  write_reconstruction(cfg, est, !o.config.empty());
  std::cout << "a0 = " << est.disk.a0 << ", gamma = " << est.disk.gamma << "\n";
  return 0;
}

int cmd_roundtrip(const Overrides& o) {
  const RunConfig cfg = load_config(o);
  const EmtTable table = forward_table(cfg);
  write_file(path_in(cfg, "emt_table.json"), to_json(table));
  const ShapeEstimate est = reconstruct(table, cfg.materials, cfg.order);
  write_reconstruction(cfg, est, true);
  const auto rec = reconstruct_curve(est, cfg.thetaSamples);
  const ShapeError err = shape_error(rec, truth_samples(cfg), est.disk.a0);
  // The output directory is left out so runs into different places compare equal.
  auto config = nlohmann::ordered_json::parse(to_json(cfg));
  config.erase("outputDir");
  nlohmann::ordered_json report = {
      {"config", config},
      {"a0", {est.disk.a0.real(), est.disk.a0.imag()}},
      {"gamma", est.disk.gamma},
      {"hausdorff", err.hausdorff},
      {"radialL2", err.radialL2},
      {"h0Imaginary", est.diagnostics.h0Imaginary}};
  write_file(path_in(cfg, "report.json"), report.dump(2));
  std::cout << "hausdorff = " << err.hausdorff << ", radial L2 = " << err.radialL2 << "\n";
  return 0;
}

int cmd_oracle(const Overrides& o) {
  const RunConfig cfg = o.config.empty() ? RunConfig{} : run_config_from_json(read_file(o.config));
  const std::size_t nodes = static_cast<std::size_t>(o.nodes.value_or(cfg.nodes));
  const auto cases = run_disk_oracle(cfg.materials, nodes, o.order.value_or(6));
  bool all = true;
  for (const auto& c : cases) {
    std::printf("%-4s %-40s %.3e (tol %.0e)\n", c.pass() ? "PASS" : "FAIL", c.label.c_str(), c.error, c.tolerance);
    all = all && c.pass();
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elastic moment tensors of planar inclusions and analytic shape reconstruction"};
  app.require_subcommand(1);
  Overrides o;
  std::string tablePath;

  auto* forward = app.add_subcommand("forward", "compute the contracted EMT table of a shape");
  add_overrides(forward, o);
  auto* recon = app.add_subcommand("reconstruct", "reconstruct a boundary from an EMT table");
  add_overrides(recon, o);
  recon->add_option("--table", tablePath, "EMT table (JSON)")->required();
  auto* roundtrip = app.add_subcommand("roundtrip", "forward, optional noise, reconstruct and score");
  add_overrides(roundtrip, o);
  auto* oracle = app.add_subcommand("oracle", "compare the Nyström solver with disk closed forms");
  oracle->add_option("--config", o.config, "run configuration (JSON); only materials are used");
  oracle->add_option("--nodes", o.nodes, "quadrature nodes on the boundary");
  oracle->add_option("--order", o.order, "highest EMT order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*forward) return cmd_forward(o);
    if (*recon) return cmd_reconstruct(o, tablePath);
    if (*roundtrip) return cmd_roundtrip(o);
    if (*oracle) return cmd_oracle(o);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
