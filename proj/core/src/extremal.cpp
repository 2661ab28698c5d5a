#include "escrate/extremal.hpp"

#include "escrate/errors.hpp"
#include "escrate/parallel.hpp"
#include "escrate/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace escrate {

namespace {

void require_length(std::size_t r, std::size_t min) {
  if (r < min) throw InvalidArgument("word length must be at least " + std::to_string(min));
}

void require_two_symbol_p(const Rational& p) {
  if (p < Rational(1, 2) || p >= 1) throw InvalidArgument("p must lie in [1/2, 1)");
}

Word prime_representative(Symbol a, Symbol b, std::size_t r, std::size_t alphabet) {
  std::vector<Symbol> letters(r - 1, a);
  letters.push_back(b);
  return Word(std::move(letters), alphabet);
}

Word prime_mirror(Symbol a, Symbol b, std::size_t r, std::size_t alphabet) {
  std::vector<Symbol> letters(r, a);
  letters.front() = b;
  return Word(std::move(letters), alphabet);
}

// nullopt stands for an infinite escape rate.
std::weak_ordering compare_rates(std::optional<RootResult>& a, std::optional<RootResult>& b) {
  if (!a && !b) return std::weak_ordering::equivalent;
  if (!a) return std::weak_ordering::greater;
  if (!b) return std::weak_ordering::less;
  return compare(*a, *b);
}

struct RootScan {
  std::vector<std::size_t> index;                // word -> distinct polynomial
  std::vector<std::optional<RootResult>> roots;  // per distinct polynomial
};

template <class PolyOf>
RootScan scan_roots(const std::vector<Word>& words, PolyOf poly_of, const ScanOptions& opts) {
  RootScan scan;
  std::map<std::vector<Rational>, std::size_t> seen;
  std::vector<RationalPolynomial> polys;
  scan.index.reserve(words.size());
  for (const Word& w : words) {
    RationalPolynomial p = poly_of(w);
    auto [it, inserted] = seen.try_emplace(p.coeffs(), polys.size());
    if (inserted) polys.push_back(std::move(p));
    scan.index.push_back(it->second);
  }
  scan.roots.resize(polys.size());
  parallel_for(polys.size(), opts.jobs, [&](std::size_t i) {
    try {
      scan.roots[i] = smallest_positive_root(polys[i], opts.tol);
    } catch (const NoPositiveRoot&) {
      scan.roots[i] = std::nullopt;
    }
  });
  return scan;
}

std::vector<Word> all_words(std::size_t alphabet, std::size_t r, std::uint64_t cap) {
  std::vector<Word> words;
  for (const Word& w : enumerate_words(alphabet, r, cap)) words.push_back(w);
  return words;
}

std::vector<Word> allowed_words(std::size_t r, const MarkovChain& mc, std::uint64_t cap) {
  std::vector<Word> words;
  for (const Word& w : enumerate_words(2, r, cap))
    if (is_allowed(w, mc)) words.push_back(w);
  return words;
}

ScanMaximum maximum_of(const std::vector<Word>& words, RootScan& scan) {
  ScanMaximum result;
  if (scan.roots.empty()) return result;
  std::size_t best = 0;
  for (std::size_t i = 1; i < scan.roots.size(); ++i)
    if (compare_rates(scan.roots[i], scan.roots[best]) > 0) best = i;
  std::vector<char> is_max(scan.roots.size(), 0);
  for (std::size_t i = 0; i < scan.roots.size(); ++i)
    is_max[i] = i == best || compare_rates(scan.roots[i], scan.roots[best]) == 0;
  for (std::size_t k = 0; k < words.size(); ++k)
    if (is_max[scan.index[k]]) result.argmax.push_back(words[k]);
  result.gamma = scan.roots[best];
  return result;
}

// Tie group of each distinct polynomial, 0 for the largest escape rate.
std::vector<std::size_t> tie_groups(RootScan& scan) {
  std::vector<std::size_t> order(scan.roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return compare_rates(scan.roots[x], scan.roots[y]) > 0;
  });
  std::vector<std::size_t> group(scan.roots.size(), 0);
  std::size_t g = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && compare_rates(scan.roots[order[k - 1]], scan.roots[order[k]]) != 0) ++g;
    group[order[k]] = g;
  }
  return group;
}

void sort_rows(std::vector<OrderingRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const OrderingRow& x, const OrderingRow& y) {
    return x.tie_group < y.tie_group;
  });
}

std::vector<OrderingRow> markov_rows(std::size_t r, const MarkovChain& mc, const ScanOptions& opts) {
  const std::vector<Word> words = allowed_words(r, mc, opts.cap);
  RootScan scan = scan_roots(words, [&](const Word& w) { return tau_markov(w, mc); }, opts);
  const std::vector<std::size_t> group = tie_groups(scan);
  std::vector<OrderingRow> rows;
  rows.reserve(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    const HoleWeights hw = markov_weights(words[k], mc);
    rows.push_back({words[k], hw.m_pi, hw.mu_tilde, scan.roots[scan.index[k]],
                    minimal_period(words[k]), is_prime(words[k]), group[scan.index[k]]});
  }
  return rows;
}

} // namespace

HoleFamilies families(std::size_t r, const BernoulliMeasure& mu, std::uint64_t cap) {
  require_length(r, 1);
  HoleFamilies f;
  bool have_prime = false;
  bool have_any = false;
  for (const Word& w : enumerate_words(mu.alphabet_size(), r, cap)) {
    const Rational m = hole_measure(w, mu);
    if (!have_any || m > f.mu_M) {
      f.mu_M = m;
      f.measure_max.clear();
      have_any = true;
    }
    if (m == f.mu_M) f.measure_max.push_back(w);
    if (!is_prime(w)) continue;
    if (!have_prime || m > f.mu_P) {
      f.mu_P = m;
      f.primes_max.clear();
      have_prime = true;
    }
    if (m == f.mu_P) f.primes_max.push_back(w);
  }
  return f;
}

std::string_view to_string(Regime regime) {
  switch (regime) {
  case Regime::prime_low: return "PRIME_LOW";
  case Regime::prime_flat: return "PRIME_FLAT";
  case Regime::measure_max: return "MEASURE_MAX";
  case Regime::tie: return "TIE";
  }
  return "?";
}

RegimeReport gamma_max(std::size_t r, const BernoulliMeasure& mu, const ScanOptions& opts) {
  require_length(r, 2);
  const std::size_t A = mu.alphabet_size();
  const auto [a, b] = mu.two_most_probable();
  const Rational& p = mu.prob(a);
  const Word wp = prime_representative(a, b, r, A);
  const bool same = mu.prob(b) == p;
  const Word wm = same ? wp : Word::repeat(a, r, A);

  RootResult gp = escape_rate(wp, mu, opts.tol);
  RootResult gm = same ? gp : escape_rate(wm, mu, opts.tol);
  const auto order = compare(gp, gm);

  RegimeReport report{Regime::measure_max, gm, {}};
  if (same || order > 0) {
    const bool flat = A == 2 && p >= 1 - Rational(1, r);
    report.regime = flat ? Regime::prime_flat : Regime::prime_low;
    report.gamma_max = gp;
  } else if (order == 0) {
    report.regime = Regime::tie;
  }

  const bool want_primes = report.regime != Regime::measure_max;
  const bool want_measure = report.regime == Regime::measure_max || report.regime == Regime::tie;
  if (word_count(A, r) <= opts.cap) {
    HoleFamilies f = families(r, mu, opts.cap);
    if (want_primes) report.witnesses = f.primes_max;
    if (want_measure)
      report.witnesses.insert(report.witnesses.end(), f.measure_max.begin(), f.measure_max.end());
    std::sort(report.witnesses.begin(), report.witnesses.end());
    report.witnesses.erase(std::unique(report.witnesses.begin(), report.witnesses.end()),
                           report.witnesses.end());
  } else {
    if (want_primes) report.witnesses = {wp, prime_mirror(a, b, r, A)};
    if (want_measure && !same) report.witnesses.push_back(wm);
  }
  return report;
}

RegimeReport gamma_max_two_symbols(std::size_t r, const Rational& p, const Rational& tol) {
  require_length(r, 2);
  require_two_symbol_p(p);
  const Word wp = prime_representative(0, 1, r, 2);
  const Word wp_mirror = prime_mirror(0, 1, r, 2);
  const Word wm = Word::repeat(0, r, 2);
  const Rational low = 1 - Rational(1, r);
  const Rational high = 1 - Rational(1, r + 1);
  const RationalPolynomial geometric{Rational(1), Rational(-p)};

  if (p < low) {
    RootResult g = smallest_positive_root(divide_exact(tau_bar(r, p), geometric), tol);
    return {Regime::prime_low, g, {wp, wp_mirror}};
  }
  if (p > high) {
    RootResult g = smallest_positive_root(divide_exact(tau_bar(r + 1, p), geometric), tol);
    return {Regime::measure_max, g, {wm}};
  }
  RootResult g = RootResult::exact_root(tau_bar(r, p), 1 / p);
  if (p == high) return {Regime::tie, g, {wp, wp_mirror, wm}};
  return {Regime::prime_flat, g, {wp, wp_mirror}};
}

ScanMaximum brute_force_gamma_max(std::size_t r, const BernoulliMeasure& mu, const ScanOptions& opts) {
  require_length(r, 1);
  const std::vector<Word> words = all_words(mu.alphabet_size(), r, opts.cap);
  RootScan scan = scan_roots(words, [&](const Word& w) { return tau(w, mu); }, opts);
  return maximum_of(words, scan);
}

ScanMaximum brute_force_gamma_max(std::size_t r, const MarkovChain& mc, const ScanOptions& opts) {
  require_length(r, 1);
  const std::vector<Word> words = allowed_words(r, mc, opts.cap);
  RootScan scan = scan_roots(words, [&](const Word& w) { return tau_markov(w, mc); }, opts);
  return maximum_of(words, scan);
}

Bounds prime_hole_bounds(std::size_t r, const Rational& m) {
  require_length(r, 2);
  if (m <= 0) throw InvalidArgument("hole measure must be positive");
  if (m > critical_measure(r)) throw InvalidArgument("hole measure exceeds the critical value m*_r");
  const double rd = static_cast<double>(r);
  const double md = to_double(m);
  const double disc = std::max(0.0, 1.0 - rd * md * (2.0 + (rd - 2.0) * md));
  const double lower = std::log1p(2.0 * md / (1.0 - rd * md + std::sqrt(disc)));
  const double upper = -log_rational(Rational(r) * m) / (rd - 1.0);
  return {lower, upper};
}

MaxBounds gamma_max_bounds(std::size_t r, const Rational& p) {
  require_length(r, 2);
  require_two_symbol_p(p);
  const Rational low = 1 - Rational(1, r);
  const Rational high = 1 - Rational(1, r + 1);
  const double log_inv_p = -log_rational(p);
  if (p < low) return {1, prime_hole_bounds(r, pow(p, r - 1) * (1 - p))};
  if (p <= high) return {2, {log_inv_p, log_inv_p}};
  const Rational q = 1 - p;
  const double lower = log_inv_p - log_rational(Rational(r + 1) * q) / static_cast<double>(r);
  const double pd = to_double(p);
  const double qd = to_double(q);
  const double upper = std::log((-qd + std::sqrt(qd * qd + 4.0 * pd * qd)) / (2.0 * pd * qd));
  return {3, {lower, upper}};
}

std::vector<OrderingRow> ordering_table(std::size_t r, const BernoulliMeasure& mu, const ScanOptions& opts) {
  require_length(r, 1);
  const std::vector<Word> words = all_words(mu.alphabet_size(), r, opts.cap);
  RootScan scan = scan_roots(words, [&](const Word& w) { return tau(w, mu); }, opts);
  const std::vector<std::size_t> group = tie_groups(scan);
  std::vector<OrderingRow> rows;
  rows.reserve(words.size());
  for (std::size_t k = 0; k < words.size(); ++k)
    rows.push_back({words[k], hole_measure(words[k], mu), std::nullopt, scan.roots[scan.index[k]],
                    minimal_period(words[k]), is_prime(words[k]), group[scan.index[k]]});
  sort_rows(rows);
  return rows;
}

std::vector<OrderingRow> ordering_table(std::size_t r, const MarkovChain& mc, const ScanOptions& opts) {
  require_length(r, 1);
  std::vector<OrderingRow> rows = markov_rows(r, mc, opts);
  sort_rows(rows);
  return rows;
}

std::string_view to_string(MultiSymbolReason reason) {
  switch (reason) {
  case MultiSymbolReason::p_above_threshold: return "p_above_threshold";
  case MultiSymbolReason::q_below_p_one_minus_p: return "q_below_p_one_minus_p";
  case MultiSymbolReason::direct_comparison: return "direct_comparison";
  }
  return "?";
}

MultiSymbolReport multi_symbol_analysis(std::size_t r, const BernoulliMeasure& mu, const Rational& tol) {
  require_length(r, 2);
  const std::size_t A = mu.alphabet_size();
  if (A < 3) throw InvalidArgument("multi-symbol analysis needs at least three symbols");
  const auto [a, b] = mu.two_most_probable();
  const Rational& p = mu.prob(a);
  const Rational& q = mu.prob(b);
  const Word wp = prime_representative(a, b, r, A);
  const Word wm = q == p ? wp : Word::repeat(a, r, A);
  MultiSymbolReport report{Regime::measure_max, MultiSymbolReason::direct_comparison, wp, wm,
                           escape_rate(wp, mu, tol), escape_rate(wm, mu, tol)};
  if (p >= 1 - Rational(1, r + 1)) {
    report.reason = MultiSymbolReason::p_above_threshold;
  } else if (q < p * (1 - p)) {
    report.reason = MultiSymbolReason::q_below_p_one_minus_p;
  } else {
    const auto order = compare(report.gamma_prime, report.gamma_measure);
    report.regime = order > 0 || wp == wm ? Regime::prime_low
                    : order == 0          ? Regime::tie
                                          : Regime::measure_max;
  }
  return report;
}

std::optional<Rational> find_prime_maximal_q(std::size_t r, const Rational& p, unsigned steps,
                                             const Rational& tol) {
  if (p <= Rational(1, 3) || p >= 1) throw InvalidArgument("p must lie in (1/3, 1)");
  if (steps == 0) throw InvalidArgument("steps must be positive");
  const Rational rest = 1 - p;
  for (unsigned k = 0; k < steps; ++k) {
    const Rational q = rest * (Rational(1, 2) + ratio(k, 2 * static_cast<long>(steps)));
    if (q > p) break;
    const BernoulliMeasure mu({p, q, rest - q});
    const Word wp = prime_representative(0, 1, r, 3);
    const Word wm = Word::repeat(0, r, 3);
    RootResult gp = escape_rate(wp, mu, tol);
    RootResult gm = escape_rate(wm, mu, tol);
    if (compare(gp, gm) > 0) return q;
  }
  return std::nullopt;
}

std::string_view to_string(PairCase c) {
  switch (c) {
  case PairCase::both_prime: return "both_prime";
  case PairCase::chi_positive: return "chi_positive";
  case PairCase::chi_negative_distinct_ends: return "chi_negative_distinct_ends";
  case PairCase::not_covered: return "not_covered";
  }
  return "?";
}

MarkovScan markov_scan(std::size_t r, const MarkovChain& mc, const ScanOptions& opts) {
  require_length(r, 1);
  MarkovScan result;
  result.rows = markov_rows(r, mc, opts);

  for (const auto& row : result.rows) {
    if (row.tie_group != 0) continue;
    if (result.maximum.argmax.empty()) result.maximum.gamma = row.gamma;
    result.maximum.argmax.push_back(row.word);
  }

  const int chi = sign(mc.chi());
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    auto& prime_row = result.rows[i];
    if (!prime_row.prime) continue;
    for (std::size_t j = 0; j < result.rows.size(); ++j) {
      auto& other = result.rows[j];
      if (i == j || *other.mu_tilde != *prime_row.mu_tilde) continue;
      if (other.prime && j < i) continue;
      PairCase c = PairCase::not_covered;
      if (other.prime) c = PairCase::both_prime;
      else if (chi > 0) c = PairCase::chi_positive;
      else if (chi < 0 && other.word.front() != other.word.back()) c = PairCase::chi_negative_distinct_ends;
      const auto observed = compare_rates(prime_row.gamma, other.gamma);
      bool holds = true;
      if (c == PairCase::both_prime) holds = observed == 0;
      else if (c != PairCase::not_covered) holds = observed > 0;
      result.pairs.push_back({prime_row.word, other.word, c, observed, holds});
    }
  }
  return result;
}

ClosedWordComparison compare_closed_word(std::size_t r, const MarkovChain& mc, const Rational& tol) {
  require_length(r, 3);
  std::vector<Symbol> first(r, 1);
  first[0] = first[1] = 0;
  std::vector<Symbol> second(r, 1);
  second.front() = second.back() = 0;
  const Word w1(std::move(first), 2);
  const Word w2(std::move(second), 2);
  ClosedWordComparison out{escape_rate(w1, mc, tol), escape_rate(w2, mc, tol), false, false};

  const Rational threshold = 1 / (1 + mc.chi());
  RootResult& z1 = out.gamma_prime;
  for (const Rational& t : {decimal_power(-20), equality_tolerance()}) {
    if (z1.upper < threshold || z1.lower >= threshold) break;
    z1.refine(t);
  }
  out.predicted_closed_wins = z1.upper < threshold;
  out.closed_wins = compare(out.gamma_closed, out.gamma_prime) > 0;
  return out;
}

OrderSwitch locate_order_switch(const Word& w, const Word& other, const Rational& p_lo,
                                const Rational& p_hi, const Rational& width, const Rational& tol) {
  if (w.alphabet_size() != 2 || other.alphabet_size() != 2)
    throw AlphabetMismatch("order switches are located for two-symbol words");
  if (!(0 < p_lo && p_lo < p_hi && p_hi < 1)) throw InvalidArgument("need 0 < p_lo < p_hi < 1");
  if (width <= 0) throw InvalidArgument("width must be positive");
  auto sign_at = [&](const Rational& p) {
    const BernoulliMeasure mu = BernoulliMeasure::two_symbols(p);
    RootResult g1 = escape_rate(w, mu, tol);
    RootResult g2 = escape_rate(other, mu, tol);
    const auto o = compare(g1, g2);
    return o > 0 ? 1 : o < 0 ? -1 : 0;
  };
  OrderSwitch s{p_lo, p_hi, sign_at(p_lo), sign_at(p_hi)};
  if (s.sign_below == 0 || s.sign_above == 0 || s.sign_below == s.sign_above)
    throw InvalidArgument("escape-rate order does not change sign on the interval");
  while (s.upper - s.lower > width) {
    const Rational mid = (s.lower + s.upper) / 2;
    const int sm = sign_at(mid);
    if (sm == 0) {
      s.lower = s.upper = mid;
      break;
    }
    (sm == s.sign_below ? s.lower : s.upper) = mid;
  }
  return s;
}

} // namespace escrate
