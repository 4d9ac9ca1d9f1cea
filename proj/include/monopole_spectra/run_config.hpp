#pragma once

#include <optional>
#include <string>

#include "monopole_spectra/model.hpp"

namespace monopole {

enum class OutputFormat { csv, json };

std::optional<OutputFormat> parse_output_format(const std::string& name);

struct GridConfig {
  std::optional<double> r_min;  // unset = automatic placement
  std::optional<double> r_max;
  int points = 40000;
};

struct SeriesConfig {
  double tolerance = 1e-10;
  long max_terms = 2'000'000;
};

struct OutputConfig {
  std::string path;  // empty = stdout (tables) / current directory (figures)
  OutputFormat format = OutputFormat::csv;
};

/// Everything a CLI run needs: the physical model plus numerical and output
/// settings. Mirrors all upstream invariants at load time.
struct RunConfig {
  ModelParams params;
  GridConfig grid;
  SeriesConfig series;
  OutputConfig output;
};

/// Name of the environment variable consulted when --config is not given.
inline constexpr const char* kConfigEnvVar = "MONOPOLE_SPECTRA_CONFIG";

/// Parses and validates a JSON config document. `origin` is used in error
/// messages (file name or "<inline>"). Throws ConfigError with line context
/// on parse failures and with the violated invariant on validation failures.
RunConfig parse_config(const std::string& json_text, const std::string& origin);

/// Reads the file at `path` and parses it. Throws ConfigError if unreadable.
RunConfig load_config(const std::string& path);

}  // namespace monopole
