#include "cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace escrate::cli {

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match the header");
  rows.push_back(std::move(row));
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

struct CsvText {
  std::string operator()(const std::string& s) const { return s; }
  std::string operator()(double x) const { return format_double(x); }
  std::string operator()(long long n) const { return std::to_string(n); }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(const Rational& q) const { return to_string(q); }
  std::string operator()(const std::vector<std::string>& items) const {
    std::string joined;
    for (std::size_t i = 0; i < items.size(); ++i) joined += (i ? ";" : "") + items[i];
    return joined;
  }
};

struct JsonValue {
  nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  nlohmann::ordered_json operator()(double x) const {
    if (std::isfinite(x)) return x;
    return format_double(x);
  }
  nlohmann::ordered_json operator()(long long n) const { return n; }
  nlohmann::ordered_json operator()(bool b) const { return b; }
  nlohmann::ordered_json operator()(const Rational& q) const { return to_string(q); }
  nlohmann::ordered_json operator()(const std::vector<std::string>& items) const { return items; }
};

} // namespace

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(std::visit(CsvText{}, row[i]));
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = std::visit(JsonValue{}, row[i]);
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& table, Format format) {
  if (format == Format::csv) write_csv(out, table);
  else write_json(out, table);
}

} // namespace escrate::cli
