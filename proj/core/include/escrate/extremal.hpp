#pragma once

#include "escrate/measures.hpp"
#include "escrate/rational.hpp"
#include "escrate/roots.hpp"
#include "escrate/words.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace escrate {

struct ScanOptions {
  Rational tol = default_tolerance();
  std::uint64_t cap = default_enumeration_cap;
  unsigned jobs = 1;
};

/// P^r (prime words of maximal measure among primes) and M^r (words of
/// maximal measure), found by exhaustive scan.
struct HoleFamilies {
  std::vector<Word> primes_max;
  std::vector<Word> measure_max;
  Rational mu_P;
  Rational mu_M;
};

HoleFamilies families(std::size_t r, const BernoulliMeasure& mu,
                      std::uint64_t cap = default_enumeration_cap);

enum class Regime { prime_low, prime_flat, measure_max, tie };

std::string_view to_string(Regime regime);

struct RegimeReport {
  Regime regime;
  RootResult gamma_max;
  std::vector<Word> witnesses;
};

/// Maximal escape rate over words of length r, obtained by comparing one
/// representative of P^r with one of M^r.
RegimeReport gamma_max(std::size_t r, const BernoulliMeasure& mu, const ScanOptions& opts = {});

/// Closed regime table for two symbols with p = p_a in [1/2, 1). Witnesses are
/// the canonical representatives (a..ab), (ba..a) and/or (a..a); on the
/// boundary p = 1 - 1/(r+1) the regime is `tie` and all three are listed.
RegimeReport gamma_max_two_symbols(std::size_t r, const Rational& p,
                                   const Rational& tol = default_tolerance());

/// Result of an exhaustive scan. A missing gamma means the survival
/// probability vanishes after finitely many steps (infinite escape rate);
/// this only happens for Markov measures with zero transitions.
struct ScanMaximum {
  std::optional<RootResult> gamma;
  std::vector<Word> argmax;
};

ScanMaximum brute_force_gamma_max(std::size_t r, const BernoulliMeasure& mu,
                                  const ScanOptions& opts = {});
/// Scans allowed words only.
ScanMaximum brute_force_gamma_max(std::size_t r, const MarkovChain& mc,
                                  const ScanOptions& opts = {});

struct Bounds {
  double lower;
  double upper;
};

/// Bracket for the escape rate of any prime hole of length r and measure m.
/// Requires 0 < m <= m*_r.
Bounds prime_hole_bounds(std::size_t r, const Rational& m);

struct MaxBounds {
  int regime_case; ///< 1, 2 or 3 for p below, between, above the two thresholds
  Bounds bounds;
};

/// Two-symbol bracket for the maximal escape rate, p in [1/2, 1).
MaxBounds gamma_max_bounds(std::size_t r, const Rational& p);

struct OrderingRow {
  Word word;
  Rational measure;                  ///< mu(w), or m_Pi(w) for Markov measures
  std::optional<Rational> mu_tilde;  ///< Markov only
  std::optional<RootResult> gamma;   ///< empty: infinite escape rate
  std::size_t min_period;
  bool prime;
  std::size_t tie_group;             ///< rows with equal gamma share a group
};

/// All words of length r sorted by escape rate, largest first. Ties keep
/// lexicographic order and share a tie_group.
std::vector<OrderingRow> ordering_table(std::size_t r, const BernoulliMeasure& mu,
                                        const ScanOptions& opts = {});
/// Allowed words only.
std::vector<OrderingRow> ordering_table(std::size_t r, const MarkovChain& mc,
                                        const ScanOptions& opts = {});

enum class MultiSymbolReason { p_above_threshold, q_below_p_one_minus_p, direct_comparison };

std::string_view to_string(MultiSymbolReason reason);

struct MultiSymbolReport {
  Regime regime;
  MultiSymbolReason reason;
  Word prime_representative;
  Word measure_representative;
  RootResult gamma_prime;
  RootResult gamma_measure;
};

/// Classification for alphabets with at least three symbols.
MultiSymbolReport multi_symbol_analysis(std::size_t r, const BernoulliMeasure& mu,
                                        const Rational& tol = default_tolerance());

/// Three-symbol measures (p, q, 1-p-q) with q stepping up from (1-p)/2 towards
/// 1-p; returns the first q for which the prime representative wins.
std::optional<Rational> find_prime_maximal_q(std::size_t r, const Rational& p, unsigned steps,
                                             const Rational& tol = default_tolerance());

enum class PairCase { both_prime, chi_positive, chi_negative_distinct_ends, not_covered };

std::string_view to_string(PairCase c);

/// A prime word and another word of the same length and equal mu~.
struct PairCheck {
  Word prime_word;
  Word other_word;
  PairCase pair_case;
  std::weak_ordering observed; ///< gamma(prime_word) <=> gamma(other_word)
  bool holds;                  ///< the predicted relation holds (vacuous if not_covered)
};

struct MarkovScan {
  std::vector<OrderingRow> rows; ///< lexicographic order
  ScanMaximum maximum;
  std::vector<PairCheck> pairs;
};

MarkovScan markov_scan(std::size_t r, const MarkovChain& mc, const ScanOptions& opts = {});

/// Compares w1 = (a a b..b) with w2 = (a b..b a), r >= 3.
struct ClosedWordComparison {
  RootResult gamma_prime;  ///< w1
  RootResult gamma_closed; ///< w2
  bool predicted_closed_wins; ///< z0(w1) < 1/(1 + chi)
  bool closed_wins;           ///< gamma(w2) > gamma(w1), observed
};

ClosedWordComparison compare_closed_word(std::size_t r, const MarkovChain& mc,
                                         const Rational& tol = default_tolerance());

/// Enclosure of the probability p* at which the escape-rate order of two
/// words flips, for two-symbol measures (p, 1-p).
struct OrderSwitch {
  Rational lower;
  Rational upper;
  int sign_below; ///< sign of gamma(w) - gamma(other) at the lower end
  int sign_above;
};

/// Bisection on the certified sign of gamma(w) - gamma(other). Throws
/// InvalidArgument when the signs at p_lo and p_hi do not differ.
OrderSwitch locate_order_switch(const Word& w, const Word& other, const Rational& p_lo,
                                const Rational& p_hi, const Rational& width,
                                const Rational& tol = default_tolerance());

} // namespace escrate
