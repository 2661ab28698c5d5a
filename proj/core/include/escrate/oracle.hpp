#pragma once

#include "escrate/measures.hpp"
#include "escrate/polynomial.hpp"
#include "escrate/rational.hpp"
#include "escrate/words.hpp"

#include <cstdint>
#include <vector>

namespace escrate {

/// KMP automaton recognising the first occurrence of a word. States 0..r-1
/// count the matched prefix; state r is absorbing.
class AvoidanceAutomaton {
public:
  explicit AvoidanceAutomaton(const Word& w);

  const Word& word() const noexcept { return word_; }
  std::size_t absorbing() const noexcept { return word_.size(); }
  std::size_t next(std::size_t state, Symbol s) const { return table_.at(state).at(s); }

private:
  Word word_;
  std::vector<std::vector<std::size_t>> table_;
};

/// Builds the automaton; for a Markov measure w must be allowed.
AvoidanceAutomaton build_automaton(const Word& w, const Measure& measure);

/// p_0, ..., p_N: p_n is the measure of the words of length n + r avoiding w.
struct SurvivalSeries {
  std::vector<Rational> values;
};

SurvivalSeries survival_series(const Word& w, const Measure& measure, std::size_t N);

/// W_0, ..., W_L: W_l is the measure of the words of length l in which w
/// occurs exactly once, as a suffix.
std::vector<Rational> first_occurrence_series(const Word& w, const Measure& measure, std::size_t L);

/// Default cap on A^l for direct enumeration.
inline constexpr std::uint64_t default_direct_cap = std::uint64_t{1} << 20;

/// Measure of the length-l words that do not contain w, by explicit search.
Rational direct_enumeration(const Word& w, const Measure& measure, std::size_t l,
                            std::uint64_t cap = default_direct_cap);

/// direct_enumeration for every l in [0, max_length] from one traversal.
std::vector<Rational> direct_enumeration_profile(const Word& w, const Measure& measure,
                                                 std::size_t max_length,
                                                 std::uint64_t cap = default_direct_cap);

/// P(z) = sum_n p_n z^n as numerator / denominator.
struct RationalGenFun {
  RationalPolynomial numerator;
  RationalPolynomial denominator;

  /// First `count` Taylor coefficients.
  std::vector<Rational> series(std::size_t count) const;
};

/// Denominator tau_w (Bernoulli) or tau_{w,Pi} (Markov).
RationalGenFun genfun(const Word& w, const Measure& measure);

struct RateEstimate {
  double ratio;      ///< -log(p_N / p_{N-1})
  double cumulative; ///< -log(p_N) / N
  bool converged;    ///< the last five ratio values agree to 1e-6
  std::size_t n;     ///< N
};

/// Needs at least 10 values, all positive.
RateEstimate empirical_rate(const SurvivalSeries& series);

/// Exact series up to N <= 500; beyond that a floating-point log-domain
/// iteration of the automaton.
RateEstimate empirical_rate(const Word& w, const Measure& measure, std::size_t N);

} // namespace escrate
