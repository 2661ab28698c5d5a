#pragma once

#include "escrate/rational.hpp"

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace escrate::cli {

/// One output cell. Lists print as ';'-joined text in CSV and as arrays in JSON.
using Cell = std::variant<std::string, double, long long, bool, Rational, std::vector<std::string>>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

enum class Format { csv, json };

std::string format_double(double x);

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);
void write_table(std::ostream& out, const Table& table, Format format);

} // namespace escrate::cli
