#include "cli/commands.hpp"

#include "escrate/errors.hpp"
#include "escrate/extremal.hpp"
#include "escrate/oracle.hpp"
#include "escrate/parallel.hpp"
#include "escrate/polynomial.hpp"
#include "escrate/roots.hpp"

#include <functional>

namespace escrate::cli {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"rate", "scan", "max", "bounds", "oracle",
                                              "families", "markov-scan", "figure"};
  return names;
}

namespace {

using Row = std::vector<Cell>;
using Rows = std::vector<Row>;

constexpr double infinity = std::numeric_limits<double>::infinity();

std::string name(const Word& w, const Alphabet& alphabet) { return format_word(w, alphabet); }

std::vector<std::string> names(const std::vector<Word>& words, const Alphabet& alphabet) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(name(w, alphabet));
  return out;
}

void append_rate(Row& row, const std::optional<RootResult>& g) {
  if (!g) {
    row.insert(row.end(), {infinity, infinity, infinity, infinity});
    return;
  }
  row.insert(row.end(), {g->z0, g->gamma, g->gamma_lower, g->gamma_upper});
}

const std::vector<std::string> rate_columns{"z0", "gamma", "gamma_lower", "gamma_upper"};

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const Measure& require_measure(const RunConfig& cfg) {
  if (!cfg.measure) throw ParseError("a measure is required (--bernoulli, --p or --markov)");
  return *cfg.measure;
}

const Word& require_word(const RunConfig& cfg) {
  if (!cfg.word) throw ParseError("--word is required");
  return *cfg.word;
}

std::size_t single_length(const RunConfig& cfg, std::optional<std::size_t> fallback = std::nullopt) {
  if (cfg.lengths.empty()) {
    if (fallback) return *fallback;
    throw ParseError("--r is required");
  }
  if (cfg.lengths.size() != 1) throw ParseError("this command takes a single length --r");
  return cfg.lengths.front();
}

const BernoulliMeasure& as_bernoulli(const Measure& m, const std::string& command) {
  if (const auto* mu = std::get_if<BernoulliMeasure>(&m)) return *mu;
  throw InvalidArgument(command + " needs a Bernoulli measure");
}

const MarkovChain& as_markov(const Measure& m, const std::string& command) {
  if (const auto* mc = std::get_if<MarkovChain>(&m)) return *mc;
  throw InvalidArgument(command + " needs a Markov measure");
}

MarkovChain markov_point(const Rational& pi_aa, const Rational& pi_bb) {
  return MarkovChain(Matrix2{{{pi_aa, 1 - pi_aa}, {1 - pi_bb, pi_bb}}});
}

// A measure together with the grid coordinates that produced it.
struct Point {
  Row prefix;
  Measure measure;
};

struct Sweep {
  std::vector<std::string> columns;
  std::vector<Point> points;
};

Sweep markov_sweep(const std::vector<Rational>& values) {
  Sweep s{{"pi_aa", "pi_bb", "chi"}, {}};
  for (const Rational& a : values)
    for (const Rational& b : values) {
      MarkovChain mc = markov_point(a, b);
      Row prefix{a, b, mc.chi()};
      s.points.push_back({std::move(prefix), std::move(mc)});
    }
  return s;
}

Sweep p_sweep(const Grid& grid) {
  if (grid.name != "p") throw ParseError("only grids over 'p' are supported");
  Sweep s{{"p"}, {}};
  for (const Rational& p : grid.values) s.points.push_back({Row{p}, BernoulliMeasure::two_symbols(p)});
  return s;
}

Sweep sweep_of(const RunConfig& cfg) {
  const int sources = (cfg.measure ? 1 : 0) + (cfg.grid ? 1 : 0) + (cfg.markov_grid ? 1 : 0);
  if (sources > 1) throw ParseError("give either a measure, --grid or --markov-grid");
  if (cfg.markov_grid) return markov_sweep(*cfg.markov_grid);
  if (cfg.grid) return p_sweep(*cfg.grid);
  return Sweep{{}, {Point{{}, require_measure(cfg)}}};
}

// Evaluates fn on every point (in parallel when jobs > 1) and concatenates
// the per-point rows in grid order.
Rows map_points(const Sweep& sweep, unsigned jobs, const std::function<Rows(const Point&)>& fn) {
  std::vector<Rows> parts(sweep.points.size());
  parallel_for(sweep.points.size(), jobs, [&](std::size_t i) { parts[i] = fn(sweep.points[i]); });
  Rows all;
  for (auto& part : parts)
    for (auto& row : part) all.push_back(std::move(row));
  return all;
}

Table finish(std::vector<std::string> columns, Rows rows) {
  Table t{std::move(columns), {}};
  for (auto& row : rows) t.add(std::move(row));
  return t;
}

Row with_prefix(const Point& pt, Row row) {
  Row full = pt.prefix;
  full.insert(full.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
  return full;
}

ScanOptions scan_options(const RunConfig& cfg, bool parallel_inner) {
  return ScanOptions{cfg.tol, cfg.cap, parallel_inner ? cfg.jobs : 1u};
}

Table cmd_rate(const RunConfig& cfg) {
  const Word& w = require_word(cfg);
  const Measure& measure = require_measure(cfg);
  if (w.alphabet_size() != alphabet_size(measure)) throw AlphabetMismatch("word and measure use different alphabets");
  const bool markov = std::holds_alternative<MarkovChain>(measure);
  std::vector<std::string> columns{"word", "measure"};
  if (markov) columns.push_back("mu_tilde");
  columns = concat(columns, {"tau", "z0_lower", "z0_upper"});
  columns = concat(columns, rate_columns);
  columns = concat(columns, {"prime", "min_period"});

  Row row{name(w, cfg.alphabet)};
  RationalPolynomial t;
  if (markov) {
    const auto& mc = std::get<MarkovChain>(measure);
    const HoleWeights hw = markov_weights(w, mc);
    row.insert(row.end(), {hw.m_pi, hw.mu_tilde});
    t = tau_markov(w, mc);
  } else {
    const auto& mu = std::get<BernoulliMeasure>(measure);
    row.push_back(hole_measure(w, mu));
    t = tau(w, mu);
  }
  const RootResult g = escape_rate(w, measure, cfg.tol);
  row.insert(row.end(), {t.to_strings(), g.lower, g.upper});
  append_rate(row, g);
  row.insert(row.end(), {is_prime(w), static_cast<long long>(minimal_period(w))});
  return finish(columns, {row});
}

Rows ordering_rows(const Point& pt, std::size_t r, const RunConfig& cfg, bool parallel_inner) {
  const ScanOptions opts = scan_options(cfg, parallel_inner);
  const auto rows = std::holds_alternative<MarkovChain>(pt.measure)
                        ? ordering_table(r, std::get<MarkovChain>(pt.measure), opts)
                        : ordering_table(r, std::get<BernoulliMeasure>(pt.measure), opts);
  Rows out;
  for (const auto& o : rows) {
    Row row{name(o.word, cfg.alphabet), o.measure};
    if (o.mu_tilde) row.push_back(*o.mu_tilde);
    append_rate(row, o.gamma);
    row.insert(row.end(), {o.prime, static_cast<long long>(o.min_period), static_cast<long long>(o.tie_group)});
    out.push_back(with_prefix(pt, std::move(row)));
  }
  return out;
}

std::vector<std::string> ordering_columns(bool markov) {
  std::vector<std::string> columns{"word", "measure"};
  if (markov) columns.push_back("mu_tilde");
  return concat(concat(columns, rate_columns), {"prime", "min_period", "rank"});
}

Table cmd_scan(const RunConfig& cfg) {
  const std::size_t r = single_length(cfg);
  const Sweep sweep = sweep_of(cfg);
  const bool markov = std::holds_alternative<MarkovChain>(sweep.points.front().measure);
  const bool inner = sweep.points.size() == 1;
  Rows rows = map_points(sweep, inner ? 1 : cfg.jobs,
                         [&](const Point& pt) { return ordering_rows(pt, r, cfg, inner); });
  return finish(concat(sweep.columns, ordering_columns(markov)), std::move(rows));
}

Rows max_rows(const Point& pt, const RunConfig& cfg) {
  const BernoulliMeasure& mu = as_bernoulli(pt.measure, "max");
  Rows out;
  for (std::size_t r : cfg.lengths) {
    std::string reason;
    RegimeReport report{Regime::tie, {}, {}};
    const bool two = mu.alphabet_size() == 2;
    if (two && mu.prob(0) >= Rational(1, 2)) {
      report = gamma_max_two_symbols(r, mu.prob(0), cfg.tol);
      reason = "two_symbol_regimes";
    } else {
      report = gamma_max(r, mu, scan_options(cfg, false));
      reason = "representatives";
      if (!two) {
        const MultiSymbolReport multi = multi_symbol_analysis(r, mu, cfg.tol);
        reason = std::string(to_string(multi.reason));
      }
    }
    Row row{static_cast<long long>(r), std::string(to_string(report.regime)), reason};
    append_rate(row, report.gamma_max);
    row.push_back(names(report.witnesses, cfg.alphabet));
    out.push_back(with_prefix(pt, std::move(row)));
  }
  return out;
}

Table cmd_max(const RunConfig& cfg) {
  if (cfg.lengths.empty()) throw ParseError("--r is required");
  const Sweep sweep = sweep_of(cfg);
  Rows rows = map_points(sweep, cfg.jobs, [&](const Point& pt) { return max_rows(pt, cfg); });
  return finish(concat(concat(sweep.columns, {"r", "regime", "reason"}), concat(rate_columns, {"witnesses"})),
                std::move(rows));
}

Table cmd_bounds(const RunConfig& cfg) {
  if (cfg.lengths.empty()) throw ParseError("--r is required");
  Sweep sweep = sweep_of(cfg);
  Rows rows = map_points(sweep, cfg.jobs, [&](const Point& pt) {
    const BernoulliMeasure& mu = as_bernoulli(pt.measure, "bounds");
    if (mu.alphabet_size() != 2) throw InvalidArgument("bounds needs a two-symbol measure");
    const Rational& p = mu.prob(0);
    Rows out;
    for (std::size_t r : cfg.lengths) {
      const MaxBounds b = gamma_max_bounds(r, p);
      const RootResult g = gamma_max_two_symbols(r, p, cfg.tol).gamma_max;
      const bool sandwich = b.bounds.lower <= g.gamma_upper && g.gamma_lower <= b.bounds.upper;
      out.push_back({p, static_cast<long long>(r), static_cast<long long>(b.regime_case), b.bounds.lower, g.gamma,
                     g.gamma_lower, g.gamma_upper, b.bounds.upper, (g.gamma - b.bounds.lower) / g.gamma, sandwich});
    }
    return out;
  });
  return finish({"p", "r", "case", "lower", "gamma", "gamma_lower", "gamma_upper", "upper", "rel_err", "sandwich"},
                std::move(rows));
}

Table cmd_oracle(const RunConfig& cfg) {
  const Word& w = require_word(cfg);
  const Measure& measure = require_measure(cfg);
  const std::size_t r = w.size();
  const std::size_t N = cfg.n;
  const SurvivalSeries series = survival_series(w, measure, N);
  const RationalGenFun gf = genfun(w, measure);
  const std::vector<Rational> expansion = gf.series(N + 1);

  std::size_t direct_len = 0;
  while (direct_len < N + r && word_count(w.alphabet_size(), direct_len + 1) <= default_direct_cap) ++direct_len;
  const std::vector<Rational> direct = direct_enumeration_profile(w, measure, direct_len);

  auto direct_state = [&](std::size_t n) -> std::string {
    if (n + r > direct_len) return "skipped";
    return direct[n + r] == series.values[n] ? "true" : "false";
  };

  if (cfg.series) {
    Rows rows;
    for (std::size_t n = 0; n <= N; ++n) {
      const double ratio = n == 0 ? std::numeric_limits<double>::quiet_NaN()
                                  : -log_rational(series.values[n] / series.values[n - 1]);
      rows.push_back({static_cast<long long>(n), series.values[n], to_double(series.values[n]), ratio,
                      expansion[n] == series.values[n], direct_state(n)});
    }
    return finish({"n", "p_n", "value", "ratio", "genfun_agrees", "direct_agrees"}, std::move(rows));
  }

  bool genfun_ok = true;
  bool direct_ok = true;
  long long direct_checked = -1;
  for (std::size_t n = 0; n <= N; ++n) {
    genfun_ok = genfun_ok && expansion[n] == series.values[n];
    const std::string d = direct_state(n);
    if (d == "skipped") continue;
    direct_ok = direct_ok && d == "true";
    direct_checked = static_cast<long long>(n);
  }
  const RationalPolynomial expected = std::holds_alternative<MarkovChain>(measure)
                                          ? tau_markov(w, std::get<MarkovChain>(measure))
                                          : tau(w, std::get<BernoulliMeasure>(measure));
  const RootResult pole = smallest_positive_root(gf.denominator, cfg.tol);
  const RootResult rate = escape_rate(w, measure, cfg.tol);
  const bool pole_ok = !(pole.upper < rate.lower || rate.upper < pole.lower);

  Row row{name(w, cfg.alphabet), static_cast<long long>(N), genfun_ok, direct_ok, direct_checked,
          gf.denominator == expected, gf.denominator.to_strings(), gf.numerator.to_strings(), pole_ok};
  append_rate(row, rate);
  if (N + 1 >= 10) {
    const RateEstimate est = empirical_rate(series);
    row.insert(row.end(), {est.ratio, est.cumulative, est.converged});
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.insert(row.end(), {nan, nan, false});
  }
  return finish(concat(concat({"word", "n", "genfun_agrees", "direct_agrees", "direct_checked_to",
                               "denominator_is_tau", "denominator", "numerator", "pole_in_enclosure"},
                              rate_columns),
                       {"ratio_estimate", "cumulative_estimate", "converged"}),
                {row});
}

Table cmd_families(const RunConfig& cfg) {
  if (cfg.lengths.empty()) throw ParseError("--r is required");
  const BernoulliMeasure& mu = as_bernoulli(require_measure(cfg), "families");
  Rows rows;
  for (std::size_t r : cfg.lengths) {
    const HoleFamilies f = families(r, mu, cfg.cap);
    auto emit = [&](const char* family, const std::vector<Word>& words, const Rational& m) {
      for (const Word& w : words)
        rows.push_back({static_cast<long long>(r), std::string(family), name(w, cfg.alphabet), m, is_prime(w),
                        static_cast<long long>(minimal_period(w))});
    };
    emit("P", f.primes_max, f.mu_P);
    emit("M", f.measure_max, f.mu_M);
  }
  return finish({"r", "family", "word", "measure", "prime", "min_period"}, std::move(rows));
}

std::string order_symbol(std::weak_ordering o) { return o > 0 ? ">" : o < 0 ? "<" : "="; }

Table cmd_markov_scan(const RunConfig& cfg) {
  const std::size_t r = single_length(cfg);
  const Sweep sweep = sweep_of(cfg);
  if (!cfg.markov_grid) {
    const MarkovChain& mc = as_markov(sweep.points.front().measure, "markov-scan");
    const MarkovScan scan = markov_scan(r, mc, scan_options(cfg, true));
    if (cfg.pairs) {
      Rows rows;
      for (const auto& pc : scan.pairs)
        rows.push_back({name(pc.prime_word, cfg.alphabet), name(pc.other_word, cfg.alphabet),
                        std::string(to_string(pc.pair_case)), order_symbol(pc.observed), pc.holds});
      return finish({"prime_word", "other_word", "case", "order", "holds"}, std::move(rows));
    }
    Rows rows;
    for (const auto& o : scan.rows) {
      Row row{name(o.word, cfg.alphabet), o.measure, *o.mu_tilde};
      append_rate(row, o.gamma);
      row.insert(row.end(), {o.prime, static_cast<long long>(o.min_period), static_cast<long long>(o.tie_group),
                             o.tie_group == 0});
      rows.push_back(std::move(row));
    }
    return finish(concat(concat({"word", "measure", "mu_tilde"}, rate_columns), {"prime", "min_period", "rank", "argmax"}),
                  std::move(rows));
  }
  Rows rows = map_points(sweep, cfg.jobs, [&](const Point& pt) {
    const MarkovChain& mc = std::get<MarkovChain>(pt.measure);
    const MarkovScan scan = markov_scan(r, mc, scan_options(cfg, false));
    long long covered = 0;
    long long violated = 0;
    for (const auto& pc : scan.pairs) {
      if (pc.pair_case == PairCase::not_covered) continue;
      ++covered;
      if (!pc.holds) ++violated;
    }
    Row row{names(scan.maximum.argmax, cfg.alphabet)};
    append_rate(row, scan.maximum.gamma);
    row.insert(row.end(), {covered, violated});
    if (r >= 3) {
      const ClosedWordComparison c = compare_closed_word(r, mc, cfg.tol);
      row.insert(row.end(), {c.predicted_closed_wins, c.closed_wins});
    } else {
      row.insert(row.end(), {std::string(), std::string()});
    }
    return Rows{with_prefix(pt, std::move(row))};
  });
  return finish(concat(concat(sweep.columns, {"argmax"}),
                       concat(rate_columns, {"pairs_checked", "pairs_violated", "closed_predicted", "closed_observed"})),
                std::move(rows));
}

Table figure_fig1(RunConfig cfg) {
  const std::size_t r = single_length(cfg, 4);
  if (!cfg.grid) cfg.grid = Grid{"p", parse_values("1/2:99/100:1/200")};
  cfg.measure.reset();
  const Sweep sweep = sweep_of(cfg);
  Rows rows = map_points(sweep, cfg.jobs, [&](const Point& pt) { return ordering_rows(pt, r, cfg, false); });
  return finish(concat(sweep.columns, ordering_columns(false)), std::move(rows));
}

Table figure_relerr(RunConfig cfg) {
  if (cfg.lengths.empty()) cfg.lengths = parse_length_range("2:40");
  if (!cfg.grid) cfg.grid = Grid{"p", parse_values("17/20,9/10,19/20")};
  cfg.measure.reset();
  Table t = cmd_bounds(cfg);
  Table out{{"p", "r", "gamma_max", "lower", "upper", "rel_err"}, {}};
  for (const auto& row : t.rows) out.add({row[0], row[1], row[4], row[3], row[7], row[8]});
  return out;
}

Table figure_markov(RunConfig cfg) {
  const std::size_t r = single_length(cfg, 3);
  if (!cfg.markov_grid) cfg.markov_grid = parse_values("1/50:49/50:1/50");
  cfg.measure.reset();
  cfg.grid.reset();
  const Sweep sweep = sweep_of(cfg);
  std::vector<std::string> columns = sweep.columns;
  for (const Word& w : enumerate_words(2, r, cfg.cap)) columns.push_back("gamma_" + name(w, cfg.alphabet));
  columns.push_back("argmax");
  Rows rows = map_points(sweep, cfg.jobs, [&](const Point& pt) {
    const MarkovChain& mc = std::get<MarkovChain>(pt.measure);
    const MarkovScan scan = markov_scan(r, mc, scan_options(cfg, false));
    Row row;
    std::size_t k = 0;
    for (const Word& w : enumerate_words(2, r, cfg.cap)) {
      if (k < scan.rows.size() && scan.rows[k].word == w) {
        const auto& g = scan.rows[k++].gamma;
        row.push_back(g ? g->gamma : infinity);
      } else {
        row.push_back(std::numeric_limits<double>::quiet_NaN()); // forbidden word
      }
    }
    row.push_back(names(scan.maximum.argmax, cfg.alphabet));
    return Rows{with_prefix(pt, std::move(row))};
  });
  return finish(std::move(columns), std::move(rows));
}

Table cmd_figure(const RunConfig& cfg) {
  if (cfg.figure == "fig1") return figure_fig1(cfg);
  if (cfg.figure == "relerr") return figure_relerr(cfg);
  if (cfg.figure == "markov-r3") return figure_markov(cfg);
  throw ParseError("unknown figure '" + cfg.figure + "'");
}

} // namespace

Table run_command(const RunConfig& cfg) {
  if (cfg.command == "rate") return cmd_rate(cfg);
  if (cfg.command == "scan") return cmd_scan(cfg);
  if (cfg.command == "max") return cmd_max(cfg);
  if (cfg.command == "bounds") return cmd_bounds(cfg);
  if (cfg.command == "oracle") return cmd_oracle(cfg);
  if (cfg.command == "families") return cmd_families(cfg);
  if (cfg.command == "markov-scan") return cmd_markov_scan(cfg);
  if (cfg.command == "figure") return cmd_figure(cfg);
  throw ParseError("unknown command '" + cfg.command + "'");
}

} // namespace escrate::cli
