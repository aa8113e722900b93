#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lrinv/error.hpp"

namespace lrinv::io {

/// Locale-independent rendering with 17 significant digits, which
/// round-trips any double.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline std::string format_cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

/// Comma-separated table preceded by `# key: value` metadata lines.
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void meta(std::string key, std::string value) { metadata.emplace_back(std::move(key), std::move(value)); }
  void meta(std::string key, double value) { meta(std::move(key), format_double(value)); }

  void add_row(std::vector<std::string> cells) {
    if (cells.size() != columns.size()) throw Error("row width does not match the header");
    rows.push_back(std::move(cells));
  }
  void add_row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    for (double v : values) cells.push_back(format_double(v));
    add_row(std::move(cells));
  }

  void write(std::ostream& out) const {
    for (const auto& [k, v] : metadata) out << "# " << k << ": " << v << '\n';
    write_line(out, columns);
    for (const auto& r : rows) write_line(out, r);
  }

  void save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    write(out);
    if (!out) throw Error("failed writing '" + path + "'");
  }

 private:
  static void write_line(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  }
};

}  // namespace lrinv::io
