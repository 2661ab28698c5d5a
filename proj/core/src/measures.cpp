#include "escrate/measures.hpp"

#include "escrate/errors.hpp"

namespace escrate {

namespace {

void require_alphabet(const Word& w, std::size_t size) {
  if (w.alphabet_size() != size)
    throw AlphabetMismatch("word over an alphabet of size " + std::to_string(w.alphabet_size()) +
                           " used with a measure on " + std::to_string(size) + " symbols");
}

Matrix2 square(const Matrix2& m) {
  Matrix2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = m[i][0] * m[0][j] + m[i][1] * m[1][j];
  return out;
}

bool all_positive(const Matrix2& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (sgn(x) <= 0) return false;
  return true;
}

void validate_stochastic(const Matrix2& pi) {
  for (const auto& row : pi) {
    for (const auto& x : row)
      if (sgn(x) < 0) throw InvalidMeasure("transition probabilities must be non-negative");
    if (row[0] + row[1] != 1) throw InvalidMeasure("rows of the transition matrix must sum to 1");
  }
  // For 2x2 matrices irreducible + aperiodic is equivalent to Pi or Pi^2 positive.
  if (!all_positive(pi) && !all_positive(square(pi)))
    throw InvalidMeasure("transition matrix is not irreducible and aperiodic");
}

} // namespace

BernoulliMeasure::BernoulliMeasure(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) throw InvalidMeasure("a measure needs at least two symbols");
  Rational total = 0;
  for (const auto& p : probs_) {
    if (sgn(p) <= 0) throw InvalidMeasure("symbol probabilities must be positive");
    total += p;
  }
  if (total != 1) throw InvalidMeasure("symbol probabilities must sum to 1, got " + to_string(total));
}

BernoulliMeasure BernoulliMeasure::two_symbols(const Rational& p) {
  return BernoulliMeasure({p, Rational(1 - p)});
}

std::pair<Symbol, Symbol> BernoulliMeasure::two_most_probable() const {
  Symbol first = 0;
  for (Symbol s = 1; s < probs_.size(); ++s)
    if (probs_[s] > probs_[first]) first = s;
  Symbol second = first == 0 ? 1 : 0;
  for (Symbol s = 0; s < probs_.size(); ++s)
    if (s != first && probs_[s] > probs_[second]) second = s;
  return {first, second};
}

std::array<Rational, 2> stationary(const Matrix2& pi) {
  validate_stochastic(pi);
  Rational out_flow = pi[0][1] + pi[1][0];
  Rational pa = pi[1][0] / out_flow;
  return {pa, Rational(1 - pa)};
}

MarkovChain::MarkovChain(Matrix2 pi)
    : pi_(std::move(pi)), stationary_(escrate::stationary(pi_)), chi_(pi_[0][0] + pi_[1][1] - 1) {}

BernoulliMeasure MarkovChain::induced_product() const {
  if (sgn(chi_) != 0) throw InvalidArgument("the Markov measure is a product measure only when chi = 0");
  return BernoulliMeasure({pi_[1][0], pi_[0][1]});
}

std::size_t alphabet_size(const Measure& m) {
  return std::visit([](const auto& x) { return x.alphabet_size(); }, m);
}

Rational hole_measure(const Word& w, const BernoulliMeasure& mu) {
  require_alphabet(w, mu.alphabet_size());
  Rational result = 1;
  for (Symbol s : w.letters()) result *= mu.prob(s);
  return result;
}

bool is_allowed(const Word& w, const MarkovChain& mc) {
  require_alphabet(w, 2);
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    if (sgn(mc.transition(w[j], w[j + 1])) == 0) return false;
  return true;
}

HoleWeights markov_weights(const Word& w, const MarkovChain& mc) {
  if (!is_allowed(w, mc)) throw ForbiddenWord("word uses a transition of probability zero");
  HoleWeights weights;
  weights.mu_pi = 1;
  for (std::size_t j = 0; j + 1 < w.size(); ++j) weights.mu_pi *= mc.transition(w[j], w[j + 1]);
  weights.mu_tilde = weights.mu_pi * mc.transition(w.back(), w.front());
  weights.m_pi = mc.stationary()[w.front()] * weights.mu_pi;
  return weights;
}

Rational markov_measure(const Word& w, const MarkovChain& mc) {
  require_alphabet(w, 2);
  Rational m = mc.stationary()[w.front()];
  for (std::size_t j = 0; j + 1 < w.size(); ++j) m *= mc.transition(w[j], w[j + 1]);
  return m;
}

} // namespace escrate
