#include "cli/config.hpp"

#include "escrate/errors.hpp"
#include "escrate/roots.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include <json.hpp>

namespace escrate::cli {

const std::vector<std::string>& option_names() {
  static const std::vector<std::string> names{"word", "bernoulli", "p",    "markov", "alphabet",    "r",
                                              "tol",  "format",    "out",  "jobs",   "cap",         "grid",
                                              "markov-grid",       "n",    "pairs",  "series"};
  return names;
}

const std::vector<std::string>& flag_names() {
  static const std::vector<std::string> names{"pairs", "series"};
  return names;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t parse_unsigned(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("invalid " + what + ": '" + text + "'");
  return value;
}

bool parse_bool(const std::string& text, const std::string& what) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0" || text.empty()) return false;
  throw ParseError("invalid " + what + ": '" + text + "'");
}

} // namespace

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> values;
  for (const std::string& part : split(text, ',')) values.push_back(parse_rational(part));
  return values;
}

std::vector<std::size_t> parse_length_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() > 2) throw ParseError("length range must be 'r' or 'lo:hi'");
  const std::uint64_t lo = parse_unsigned(parts[0], "length");
  const std::uint64_t hi = parts.size() == 2 ? parse_unsigned(parts[1], "length") : lo;
  if (lo == 0 || hi < lo) throw ParseError("invalid length range '" + text + "'");
  if (hi > 4096) throw ParseError("word length too large");
  std::vector<std::size_t> out;
  for (std::uint64_t r = lo; r <= hi; ++r) out.push_back(static_cast<std::size_t>(r));
  return out;
}

std::vector<Rational> parse_values(const std::string& text) {
  if (text.find(':') == std::string::npos) return parse_rational_list(text);
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ParseError("range must be 'lo:hi:step'");
  const Rational lo = parse_rational(parts[0]);
  const Rational hi = parse_rational(parts[1]);
  const Rational step = parse_rational(parts[2]);
  if (step <= 0 || hi < lo) throw ParseError("invalid range '" + text + "'");
  std::vector<Rational> values;
  for (Rational v = lo; v <= hi; v += step) {
    values.push_back(v);
    if (values.size() > 1'000'000) throw ParseError("range has too many points");
  }
  return values;
}

Grid parse_grid(const std::string& text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos) return {"p", parse_values(text)};
  return {text.substr(0, eq), parse_values(text.substr(eq + 1))};
}

RunConfig build_config(const std::string& command, const RawOptions& raw) {
  auto get = [&](const std::string& key) -> std::optional<std::string> {
    auto it = raw.find(key);
    if (it == raw.end() || it->second.empty()) return std::nullopt;
    return it->second;
  };

  RunConfig cfg;
  cfg.command = command;
  cfg.tol = default_tolerance();
  cfg.cap = default_enumeration_cap;

  const int measure_kinds = (get("bernoulli") ? 1 : 0) + (get("p") ? 1 : 0) + (get("markov") ? 1 : 0);
  if (measure_kinds > 1) throw ParseError("give at most one of --bernoulli, --p, --markov");
  if (auto s = get("bernoulli")) cfg.measure = BernoulliMeasure(parse_rational_list(*s));
  if (auto s = get("p")) cfg.measure = BernoulliMeasure::two_symbols(parse_rational(*s));
  if (auto s = get("markov")) {
    const auto v = parse_rational_list(*s);
    if (v.size() != 4) throw ParseError("--markov needs four entries pi_aa,pi_ab,pi_ba,pi_bb");
    cfg.measure = MarkovChain(Matrix2{{{v[0], v[1]}, {v[2], v[3]}}});
  }

  if (auto s = get("alphabet")) cfg.alphabet = Alphabet(split(*s, ','));
  else if (cfg.measure) cfg.alphabet = Alphabet::letters(alphabet_size(*cfg.measure));
  if (cfg.measure && alphabet_size(*cfg.measure) != cfg.alphabet.size())
    throw AlphabetMismatch("alphabet and measure have different sizes");

  if (auto s = get("word")) cfg.word = parse_word(*s, cfg.alphabet);
  if (auto s = get("r")) cfg.lengths = parse_length_range(*s);
  if (auto s = get("tol")) {
    cfg.tol = parse_rational(*s);
    if (cfg.tol <= 0 || cfg.tol > decimal_power(-6)) throw ParseError("--tol must lie in (0, 1e-6]");
  }
  if (auto s = get("format")) {
    if (*s == "csv") cfg.format = Format::csv;
    else if (*s == "json") cfg.format = Format::json;
    else throw ParseError("--format must be csv or json");
  }
  cfg.out = get("out");
  if (auto s = get("jobs")) {
    const auto jobs = parse_unsigned(*s, "job count");
    if (jobs == 0 || jobs > 1024) throw ParseError("--jobs must lie in [1, 1024]");
    cfg.jobs = static_cast<unsigned>(jobs);
  }
  if (auto s = get("cap")) cfg.cap = parse_unsigned(*s, "cap");
  if (auto s = get("grid")) cfg.grid = parse_grid(*s);
  if (auto s = get("markov-grid")) {
    cfg.markov_grid = parse_values(*s);
    for (const Rational& v : *cfg.markov_grid)
      if (v <= 0 || v >= 1) throw ParseError("markov grid values must lie in (0, 1)");
  }
  if (auto s = get("n")) cfg.n = parse_unsigned(*s, "series length");
  if (auto s = get("pairs")) cfg.pairs = parse_bool(*s, "--pairs");
  if (auto s = get("series")) cfg.series = parse_bool(*s, "--series");
  return cfg;
}

RawOptions read_json_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON config: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("JSON config must be an object");
  auto scalar = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    throw ParseError("config values must be strings, numbers or booleans");
  };
  RawOptions raw;
  const auto& known = option_names();
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ParseError("unknown config key '" + key + "'");
    if (value.is_array()) {
      std::string joined;
      for (std::size_t i = 0; i < value.size(); ++i) joined += (i ? "," : "") + scalar(value[i]);
      raw[key] = joined;
    } else {
      raw[key] = scalar(value);
    }
  }
  return raw;
}

} // namespace escrate::cli
