#include "cosmo/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace cosmo {
namespace {

using Json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string csv_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(const std::string& s) const { return csv_field(s); }
    std::string operator()(const Rational& r) const {
      return r.get_num().get_str() + "/" + r.get_den().get_str();
    }
  };
  return std::visit(Visitor{}, cell);
}

Json json_integer(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("rational component must be an integer or a digit string");
}

Json json_cell(const Cell& cell) {
  struct Visitor {
    Json operator()(bool b) const { return Json(b); }
    Json operator()(std::int64_t i) const { return Json(i); }
    Json operator()(double d) const { return std::isfinite(d) ? Json(d) : Json(nullptr); }
    Json operator()(const std::string& s) const { return Json(s); }
    Json operator()(const Rational& r) const {
      Json o = Json::object();
      o["num"] = json_integer(r.get_num());
      o["den"] = json_integer(r.get_den());
      return o;
    }
  };
  return std::visit(Visitor{}, cell);
}

Cell cell_from_json(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den")) {
    Rational r(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
    r.canonicalize();
    return r;
  }
  throw std::invalid_argument("unsupported JSON cell: " + j.dump());
}

bool same_cell(const Cell& a, const Cell& b) {
  if (a.index() != b.index()) return false;
  if (const double* x = std::get_if<double>(&a)) {
    const double y = std::get<double>(b);
    return (std::isnan(*x) && std::isnan(y)) || *x == y;
  }
  return a == b;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, table has " +
                                std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

bool same_table(const Table& a, const Table& b) {
  if (a.columns != b.columns || a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    for (std::size_t j = 0; j < a.columns.size(); ++j) {
      if (!same_cell(a.rows[i][j], b.rows[i][j])) return false;
    }
  }
  return true;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_report(const Table& table, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::csv) {
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
      out << (j ? "," : "") << csv_field(table.columns[j]);
    }
    out << "\r\n";
    for (const auto& row : table.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_cell(row[j]);
      out << "\r\n";
    }
  } else {
    Json array = Json::array();
    for (const auto& row : table.rows) {
      Json obj = Json::object();
      for (std::size_t j = 0; j < row.size(); ++j) obj[table.columns[j]] = json_cell(row[j]);
      array.push_back(std::move(obj));
    }
    out << array.dump(2) << "\n";
  }
  if (!out) throw std::runtime_error("failed writing report");
}

void emit_report(const Table& table, ReportFormat format, const std::filesystem::path& destination) {
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + destination.string() + "' for writing");
  emit_report(table, format, file);
  file.close();
  if (!file) throw std::runtime_error("failed writing '" + destination.string() + "'");
}

Table parse_json_report(std::string_view text) {
  const Json doc = Json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("report must be a JSON array");
  Table table;
  for (const Json& obj : doc) {
    if (!obj.is_object()) throw std::invalid_argument("report rows must be objects");
    if (table.columns.empty() && table.rows.empty()) {
      for (auto it = obj.begin(); it != obj.end(); ++it) table.columns.push_back(it.key());
    }
    std::vector<Cell> row;
    row.reserve(table.columns.size());
    if (obj.size() != table.columns.size()) throw std::invalid_argument("rows have differing fields");
    for (const auto& name : table.columns) {
      if (!obj.contains(name)) throw std::invalid_argument("row lacks field '" + name + "'");
      row.push_back(cell_from_json(obj.at(name)));
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace cosmo
