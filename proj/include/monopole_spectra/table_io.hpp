#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "monopole_spectra/run_config.hpp"

namespace monopole {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

/// Column-ordered record table; the single serialization point for every
/// artifact the CLI emits. Formatting is locale-independent and
/// deterministic: identical tables serialize to identical bytes.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest-exact decimal rendering used in CSV cells (17 significant
/// digits, '.' separator).
std::string format_double(double x);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

/// Serializes in the requested format to `path`, or to stdout when `path`
/// is empty.
void write_table(const Table& table, const std::string& path, OutputFormat format);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace monopole
