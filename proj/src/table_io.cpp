#include "monopole_spectra/table_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace monopole {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::string format_cell(const Cell& cell) {
  switch (cell.index()) {
    case 0: return std::to_string(std::get<std::int64_t>(cell));
    case 1: return format_double(std::get<double>(cell));
    case 2: return std::get<std::string>(cell);
    default: return std::get<bool>(cell) ? "true" : "false";
  }
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& key = table.columns[i];
      switch (row[i].index()) {
        case 0: obj[key] = std::get<std::int64_t>(row[i]); break;
        case 1: obj[key] = std::get<double>(row[i]); break;
        case 2: obj[key] = std::get<std::string>(row[i]); break;
        default: obj[key] = std::get<bool>(row[i]); break;
      }
    }
    rows.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SpectraError(path + ": cannot open for writing");
  out << content;
  if (!out) throw SpectraError(path + ": write failed");
}

void write_table(const Table& table, const std::string& path, OutputFormat format) {
  const std::string payload = format == OutputFormat::csv ? to_csv(table) : to_json(table);
  if (path.empty()) {
    std::cout << payload;
  } else {
    write_text_file(path, payload);
  }
}

}  // namespace monopole
