#include "monopole_spectra/run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace monopole {

namespace {

using nlohmann::json;

[[noreturn]] void config_fail(const std::string& origin, const std::string& what) {
  throw ConfigError(origin + ": " + what);
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& origin, const std::string& block) {
  if (!obj.is_object()) config_fail(origin, block + " must be an object");
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      config_fail(origin, "unknown key \"" + item.key() + "\" in " + block);
    }
  }
}

double get_number(const json& obj, const char* key, double fallback,
                  const std::string& origin) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) config_fail(origin, std::string(key) + " must be a number");
  return obj[key].get<double>();
}

}  // namespace

std::optional<OutputFormat> parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

RunConfig parse_config(const std::string& json_text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    config_fail(origin, std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) config_fail(origin, "top-level document must be an object");
  check_keys(doc, {"constants", "geometry", "kratzer", "screening", "grid", "series", "output"},
             origin, "config");

  RunConfig cfg;

  const json constants = doc.value("constants", json::object());
  check_keys(constants, {"hbar", "mass", "charge"}, origin, "constants");
  cfg.params.constants.hbar = get_number(constants, "hbar", 1.0, origin);
  cfg.params.constants.mass = get_number(constants, "mass", 1.0, origin);
  cfg.params.constants.charge = get_number(constants, "charge", 1.0, origin);

  if (!doc.contains("geometry")) config_fail(origin, "missing required block \"geometry\"");
  check_keys(doc["geometry"], {"alpha"}, origin, "geometry");
  if (!doc["geometry"].contains("alpha")) config_fail(origin, "geometry.alpha is required");
  cfg.params.geometry.alpha = get_number(doc["geometry"], "alpha", 1.0, origin);

  if (!doc.contains("kratzer")) config_fail(origin, "missing required block \"kratzer\"");
  check_keys(doc["kratzer"], {"A", "D"}, origin, "kratzer");
  if (!doc["kratzer"].contains("A") || !doc["kratzer"].contains("D")) {
    config_fail(origin, "kratzer.A and kratzer.D are required");
  }
  cfg.params.kratzer.A = get_number(doc["kratzer"], "A", 1.0, origin);
  cfg.params.kratzer.D = get_number(doc["kratzer"], "D", 1.0, origin);

  const json screening = doc.value("screening", json::object());
  check_keys(screening, {"delta"}, origin, "screening");
  cfg.params.screening.delta = get_number(screening, "delta", 0.0, origin);

  const json grid = doc.value("grid", json::object());
  check_keys(grid, {"r_min", "r_max", "points"}, origin, "grid");
  if (grid.contains("r_min")) cfg.grid.r_min = get_number(grid, "r_min", 0.0, origin);
  if (grid.contains("r_max")) cfg.grid.r_max = get_number(grid, "r_max", 0.0, origin);
  cfg.grid.points = static_cast<int>(get_number(grid, "points", 40000, origin));

  const json series = doc.value("series", json::object());
  check_keys(series, {"tolerance", "max_terms"}, origin, "series");
  cfg.series.tolerance = get_number(series, "tolerance", 1e-10, origin);
  cfg.series.max_terms = static_cast<long>(get_number(series, "max_terms", 2'000'000, origin));

  const json output = doc.value("output", json::object());
  check_keys(output, {"path", "format"}, origin, "output");
  if (output.contains("path")) {
    if (!output["path"].is_string()) config_fail(origin, "output.path must be a string");
    cfg.output.path = output["path"].get<std::string>();
  }
  if (output.contains("format")) {
    if (!output["format"].is_string()) config_fail(origin, "output.format must be a string");
    const auto fmt = parse_output_format(output["format"].get<std::string>());
    if (!fmt) config_fail(origin, "output.format must be \"csv\" or \"json\"");
    cfg.output.format = *fmt;
  }

  // Mirror the upstream invariants here so a bad file fails at load time
  // with a configuration (not physics) diagnostic.
  try {
    cfg.params.validate();
  } catch (const InvalidParameterError& e) {
    config_fail(origin, e.what());
  }
  if (cfg.grid.points < 100) config_fail(origin, "grid.points must be >= 100");
  if (cfg.grid.r_min && cfg.grid.r_max && !(*cfg.grid.r_min < *cfg.grid.r_max)) {
    config_fail(origin, "grid requires r_min < r_max");
  }
  if (cfg.grid.r_min && !(*cfg.grid.r_min > 0.0)) config_fail(origin, "grid.r_min must be > 0");
  if (!(cfg.series.tolerance > 0.0)) config_fail(origin, "series.tolerance must be > 0");
  if (cfg.series.max_terms < 10) config_fail(origin, "series.max_terms must be >= 10");

  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

}  // namespace monopole
