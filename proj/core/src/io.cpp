#include "emtrec/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "emtrec/error.hpp"

namespace emtrec {
namespace {

using json = nlohmann::ordered_json;

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError("expected a complex number as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("field \"") + key + "\" has the wrong type");
  }
}

template <class T>
T field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

Complex complex_field_or(const json& j, const char* key, Complex fallback) {
  return j.contains(key) ? complex_from(j.at(key)) : fallback;
}

json descriptor_json(const CurveDescriptor& d) {
  struct Visitor {
    json operator()(const Disk& x) const {
      return {{"kind", "disk"}, {"center", complex_json(x.center)}, {"radius", x.radius}};
    }
    json operator()(const Ellipse& x) const {
      return {{"kind", "ellipse"},
              {"center", complex_json(x.center)},
              {"semiAxisA", x.semiAxisA},
              {"semiAxisB", x.semiAxisB}};
    }
    json operator()(const Kite& x) const {
      return {{"kind", "kite"}, {"center", complex_json(x.center)}, {"coefficient", x.coefficient}};
    }
    json operator()(const Starfish& x) const {
      return {{"kind", "starfish"},
              {"center", complex_json(x.center)},
              {"modeAmplitude", x.modeAmplitude},
              {"modeIndex", x.modeIndex}};
    }
    json operator()(const PerturbedDisk& x) const {
      json c = json::array();
      for (Complex v : x.coefficients) c.push_back(complex_json(v));
      return {{"kind", "perturbedDisk"}, {"center", complex_json(x.center)}, {"radius", x.radius}, {"coefficients", c}};
    }
    json operator()(const FourierCurve& x) const {
      json modes = json::array();
      for (const auto& [k, a] : x.modes) modes.push_back({{"k", k}, {"value", complex_json(a)}});
      return {{"kind", "fourierCurve"}, {"modes", modes}};
    }
  };
  return std::visit(Visitor{}, d);
}

CurveDescriptor descriptor_from(const json& j) {
  if (!j.is_object()) throw ConfigError("shape must be a JSON object");
  const auto kind = field<std::string>(j, "kind");
  if (kind == "disk") return Disk{complex_field_or(j, "center", {}), field_or(j, "radius", 1.0)};
  if (kind == "ellipse") {
    return Ellipse{complex_field_or(j, "center", {}), field<double>(j, "semiAxisA"), field<double>(j, "semiAxisB")};
  }
  if (kind == "kite") return Kite{complex_field_or(j, "center", {}), field_or(j, "coefficient", 0.65)};
  if (kind == "starfish") {
    return Starfish{complex_field_or(j, "center", {}), field_or(j, "modeAmplitude", 0.125), field_or(j, "modeIndex", 5)};
  }
  if (kind == "perturbedDisk") {
    PerturbedDisk p{complex_field_or(j, "center", {}), field_or(j, "radius", 1.0), {}};
    if (j.contains("coefficients")) {
      if (!j["coefficients"].is_array()) throw ConfigError("coefficients must be an array");
      for (const auto& c : j["coefficients"]) p.coefficients.push_back(complex_from(c));
    }
    return p;
  }
  if (kind == "fourierCurve") {
    FourierCurve f;
    if (!j.contains("modes") || !j["modes"].is_array()) throw ConfigError("fourierCurve needs a modes array");
    for (const auto& m : j["modes"]) f.modes[field<int>(m, "k")] = complex_from(m.at("value"));
    return f;
  }
  throw ConfigError("unknown shape kind \"" + kind + "\"");
}

json noise_json(const std::optional<NoiseModel>& noise) {
  if (!noise) return {{"kind", "exact"}};
  return {{"kind", "noisy"}, {"sigma2", noise->sigma2}, {"seed", noise->seed}};
}

LameConstants lame_from(const json& j) {
  if (!j.is_object()) throw ConfigError("Lamé constants must be an object with lambda and mu");
  return LameConstants(field<double>(j, "lambda"), field<double>(j, "mu"));
}

}  // namespace

std::string to_json(const CurveDescriptor& descriptor) { return descriptor_json(descriptor).dump(2); }

CurveDescriptor descriptor_from_json(const std::string& text) { return descriptor_from(parse(text)); }

std::string to_json(const EmtTable& table) {
  json entries = json::array();
  const int ord = table.order();
  for (int n = 1; n <= ord; ++n)
    for (int m = 1; m <= ord; ++m)
      for (int t = 1; t <= 2; ++t)
        for (int s = 1; s <= 2; ++s)
          entries.push_back({{"n", n}, {"m", m}, {"t", t}, {"s", s}, {"value", table.at(n, m, t, s)}});
  json j = {{"order", ord}, {"provenance", noise_json(table.noise())}, {"entries", entries}};
  return j.dump(2);
}

EmtTable emt_table_from_json(const std::string& text) {
  const json j = parse(text);
  EmtTable table(field<int>(j, "order"));
  if (!j.contains("entries") || !j["entries"].is_array()) throw ConfigError("EMT table needs an entries array");
  const std::size_t expected = static_cast<std::size_t>(table.order()) * table.order() * 4;
  if (j["entries"].size() != expected) throw ConfigError("EMT table entry count does not match its order");
  for (const auto& e : j["entries"]) {
    try {
      table.at(field<int>(e, "n"), field<int>(e, "m"), field<int>(e, "t"), field<int>(e, "s")) = field<double>(e, "value");
    } catch (const DomainError& err) {
      throw ConfigError(std::string("EMT entry: ") + err.what());
    }
  }
  if (j.contains("provenance")) {
    const json& p = j["provenance"];
    if (field_or<std::string>(p, "kind", "exact") == "noisy") {
      table.set_noise(NoiseModel(field<double>(p, "sigma2"), field<std::uint64_t>(p, "seed")));
    }
  }
  return table;
}

std::string to_json(const ShapeEstimate& estimate) {
  json coeffs = json::array();
  for (Complex c : estimate.coeffs) coeffs.push_back(complex_json(c));
  json second = json::array();
  for (const auto& v : estimate.diagnostics.secondChannel) {
    json item = {{"n", v.n}, {"m", v.m}, {"index", v.index}, {"value", complex_json(v.value)}};
    if (v.gap >= 0.0) item["gap"] = v.gap;
    second.push_back(item);
  }
  json j = {{"a0", complex_json(estimate.disk.a0)},
            {"gamma", estimate.disk.gamma},
            {"coeffs", coeffs},
            {"diagnostics", {{"h0Imaginary", estimate.diagnostics.h0Imaginary}, {"secondChannel", second}}}};
  return j.dump(2);
}

ShapeEstimate shape_estimate_from_json(const std::string& text) {
  const json j = parse(text);
  ShapeEstimate est;
  est.disk.a0 = complex_from(j.at("a0"));
  est.disk.gamma = field<double>(j, "gamma");
  if (!(est.disk.gamma > 0.0)) throw ConfigError("gamma must be positive");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ConfigError("shape estimate needs a coeffs array");
  for (const auto& c : j["coeffs"]) est.coeffs.push_back(complex_from(c));
  if (j.contains("diagnostics")) {
    const json& d = j["diagnostics"];
    est.diagnostics.h0Imaginary = field_or(d, "h0Imaginary", 0.0);
    if (d.contains("secondChannel")) {
      for (const auto& item : d["secondChannel"]) {
        ShapeDiagnostics::ChannelValue v;
        v.n = field<int>(item, "n");
        v.m = field<int>(item, "m");
        v.index = field<int>(item, "index");
        v.value = complex_from(item.at("value"));
        v.gap = field_or(item, "gap", -1.0);
        est.diagnostics.secondChannel.push_back(v);
      }
    }
  }
  return est;
}

RunConfig run_config_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig cfg;
  if (j.contains("materials")) {
    const json& m = j["materials"];
    cfg.materials = MaterialPair(lame_from(m.at("background")), lame_from(m.at("inclusion")));
  }
  if (j.contains("shape")) cfg.shape = descriptor_from(j["shape"]);
  cfg.order = field_or(j, "order", cfg.order);
  cfg.nodes = field_or(j, "nodes", cfg.nodes);
  cfg.outputDir = field_or(j, "outputDir", cfg.outputDir);
  cfg.thetaSamples = field_or(j, "thetaSamples", cfg.thetaSamples);
  if (j.contains("noise") && !j["noise"].is_null()) {
    const json& n = j["noise"];
    cfg.noise = NoiseModel(field<double>(n, "sigma2"), field_or<std::uint64_t>(n, "seed", 0));
  }
  if (cfg.order < 2) throw ConfigError("order must be at least 2");
  if (cfg.nodes < 16 || cfg.nodes % 2 != 0) throw ConfigError("nodes must be even and at least 16");
  if (cfg.thetaSamples < 1) throw ConfigError("thetaSamples must be positive");
  return cfg;
}

std::string to_json(const RunConfig& config) {
  const auto lame = [](const LameConstants& l) { return json{{"lambda", l.lambda()}, {"mu", l.mu()}}; };
  json j = {{"materials",
             {{"background", lame(config.materials.background())}, {"inclusion", lame(config.materials.inclusion())}}},
            {"shape", descriptor_json(config.shape)},
            {"order", config.order},
            {"nodes", config.nodes},
            {"outputDir", config.outputDir},
            {"thetaSamples", config.thetaSamples}};
  if (config.noise) j["noise"] = {{"sigma2", config.noise->sigma2}, {"seed", config.noise->seed}};
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << contents;
  if (contents.empty() || contents.back() != '\n') out << '\n';
}

}  // namespace emtrec
