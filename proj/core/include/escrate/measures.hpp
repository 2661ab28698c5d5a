#pragma once

#include "escrate/rational.hpp"
#include "escrate/words.hpp"

#include <array>
#include <utility>
#include <variant>
#include <vector>

namespace escrate {

/// Shift-invariant product measure given by one probability per symbol.
class BernoulliMeasure {
public:
  /// Every entry must be > 0 and the entries must sum to exactly 1.
  explicit BernoulliMeasure(std::vector<Rational> probs);

  /// Two-symbol measure (p, 1 - p).
  static BernoulliMeasure two_symbols(const Rational& p);

  std::size_t alphabet_size() const noexcept { return probs_.size(); }
  const Rational& prob(Symbol s) const { return probs_.at(s); }
  const std::vector<Rational>& probs() const noexcept { return probs_; }

  /// The most and second most probable symbols; ties go to the smaller index.
  std::pair<Symbol, Symbol> two_most_probable() const;

private:
  std::vector<Rational> probs_;
};

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

/// Stationary vector (p_a, p_b) of an irreducible aperiodic 2x2 stochastic matrix.
std::array<Rational, 2> stationary(const Matrix2& pi);

/// Two-symbol Markov measure. Construction rejects matrices that are not
/// stochastic or not irreducible and aperiodic.
class MarkovChain {
public:
  explicit MarkovChain(Matrix2 pi);

  const Matrix2& matrix() const noexcept { return pi_; }
  const Rational& transition(Symbol from, Symbol to) const { return pi_.at(from).at(to); }
  const std::array<Rational, 2>& stationary() const noexcept { return stationary_; }
  /// pi_aa + pi_bb - 1.
  const Rational& chi() const noexcept { return chi_; }

  static constexpr std::size_t alphabet_size() noexcept { return 2; }

  /// The product measure with p_a = pi_ba, p_b = pi_ab; only meaningful when chi == 0.
  BernoulliMeasure induced_product() const;

private:
  Matrix2 pi_;
  std::array<Rational, 2> stationary_;
  Rational chi_;
};

using Measure = std::variant<BernoulliMeasure, MarkovChain>;

std::size_t alphabet_size(const Measure& m);

/// prod_a p_a^{N_w(a)}.
Rational hole_measure(const Word& w, const BernoulliMeasure& mu);

struct HoleWeights {
  Rational mu_pi;    ///< prod_{j<r-1} pi(w_j, w_{j+1})
  Rational mu_tilde; ///< mu_pi * pi(w_{r-1}, w_0)
  Rational m_pi;     ///< p_{w_0} * mu_pi, the Markov measure of the cylinder
};

bool is_allowed(const Word& w, const MarkovChain& mc);

/// Throws ForbiddenWord if some transition of w has probability zero.
HoleWeights markov_weights(const Word& w, const MarkovChain& mc);

/// Markov measure of an arbitrary word; zero for forbidden words.
Rational markov_measure(const Word& w, const MarkovChain& mc);

} // namespace escrate
