#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cosmo/rational.hpp"

namespace cosmo {

using Cell = std::variant<bool, std::int64_t, double, std::string, Rational>;

// Homogeneous table: every row has one cell per column.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

// NaN cells compare equal to each other.
bool same_table(const Table& a, const Table& b);

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(std::string_view name);

// CSV: header row, RFC 4180 quoting, 17 significant digits, rationals as
// "num/den". JSON: array of objects in column order, rationals as
// {"num": .., "den": ..}, NaN as null.
void emit_report(const Table& table, ReportFormat format, std::ostream& out);
// Throws std::runtime_error when the destination cannot be written.
void emit_report(const Table& table, ReportFormat format, const std::filesystem::path& destination);

std::string format_double(double v);

// Inverse of the JSON form. An empty array yields a table without columns.
Table parse_json_report(std::string_view text);

}  // namespace cosmo
