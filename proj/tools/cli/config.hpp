#pragma once

#include "cli/table.hpp"
#include "escrate/measures.hpp"
#include "escrate/words.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace escrate::cli {

/// Option values as given on the command line or in a JSON config, keyed by
/// the long option name without dashes.
using RawOptions = std::map<std::string, std::string>;

/// Every recognised option name; JSON configs may use exactly these keys.
const std::vector<std::string>& option_names();
/// Options that take no value.
const std::vector<std::string>& flag_names();

struct Grid {
  std::string name;
  std::vector<Rational> values;
};

struct RunConfig {
  std::string command;
  std::string figure;
  Alphabet alphabet = Alphabet::letters(2);
  std::optional<Word> word;
  std::optional<Measure> measure;
  std::vector<std::size_t> lengths;
  Rational tol;
  Format format = Format::csv;
  std::optional<std::string> out;
  unsigned jobs = 1;
  std::uint64_t cap;
  std::optional<Grid> grid;
  std::optional<std::vector<Rational>> markov_grid;
  std::size_t n = 20;
  bool pairs = false;
  bool series = false;
};

std::vector<Rational> parse_rational_list(const std::string& text);
/// "5" or "2:40" (inclusive).
std::vector<std::size_t> parse_length_range(const std::string& text);
/// "lo:hi:step" (inclusive of hi when hit exactly) or "v1,v2,...".
std::vector<Rational> parse_values(const std::string& text);
/// "name=values"; the name defaults to "p".
Grid parse_grid(const std::string& text);

/// Builds a typed configuration. Throws ParseError or InvalidArgument on bad input.
RunConfig build_config(const std::string& command, const RawOptions& raw);

/// Reads a JSON object whose keys are option names; values may be strings,
/// numbers, booleans or arrays of those (arrays are joined with commas).
RawOptions read_json_config(const std::string& path);

} // namespace escrate::cli
