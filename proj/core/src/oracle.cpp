#include "escrate/oracle.hpp"

#include "escrate/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace escrate {

AvoidanceAutomaton::AvoidanceAutomaton(const Word& w) : word_(w) {
  const std::size_t r = w.size();
  const std::size_t A = w.alphabet_size();
  const std::vector<std::size_t> fail = failure_function(w);
  table_.assign(r + 1, std::vector<std::size_t>(A, 0));
  for (std::size_t s = 0; s <= r; ++s) {
    for (Symbol a = 0; a < A; ++a) {
      if (s == r) table_[s][a] = r;
      else if (w[s] == a) table_[s][a] = s + 1;
      else if (s > 0) table_[s][a] = table_[fail[s - 1]][a];
    }
  }
}

AvoidanceAutomaton build_automaton(const Word& w, const Measure& measure) {
  if (w.alphabet_size() != alphabet_size(measure))
    throw AlphabetMismatch("word and measure use different alphabets");
  if (const auto* mc = std::get_if<MarkovChain>(&measure); mc && !is_allowed(w, *mc))
    throw ForbiddenWord("word uses a transition of probability zero");
  return AvoidanceAutomaton(w);
}

namespace {

Rational convert(const Rational& q, const Rational*) { return q; }
double convert(const Rational& q, const double*) { return to_double(q); }

// Weighted walk over the automaton. Slot = kmp state, or kmp state x last
// symbol for Markov measures.
template <class T>
class Walk {
public:
  Walk(const AvoidanceAutomaton& aut, const Measure& measure)
      : aut_(aut), A_(aut.word().alphabet_size()), markov_(std::holds_alternative<MarkovChain>(measure)) {
    const T* tag = nullptr;
    initial_.resize(A_);
    transition_.assign(A_, std::vector<T>(A_));
    if (markov_) {
      const auto& mc = std::get<MarkovChain>(measure);
      for (Symbol a = 0; a < A_; ++a) {
        initial_[a] = convert(mc.stationary()[a], tag);
        for (Symbol b = 0; b < A_; ++b) transition_[a][b] = convert(mc.transition(a, b), tag);
      }
    } else {
      const auto& mu = std::get<BernoulliMeasure>(measure);
      for (Symbol a = 0; a < A_; ++a) {
        initial_[a] = convert(mu.prob(a), tag);
        for (Symbol b = 0; b < A_; ++b) transition_[b][a] = initial_[a];
      }
    }
    lasts_ = markov_ ? A_ : 1;
    dist_.assign(aut.absorbing() * lasts_, T(0));
  }

  std::size_t length() const { return length_; }

  T total() const {
    if (length_ == 0) return T(1);
    T sum(0);
    for (const T& x : dist_) sum += x;
    return sum;
  }

  // Advances one letter and returns the weight absorbed by this step.
  T step() {
    const std::size_t r = aut_.absorbing();
    std::vector<T> next(dist_.size(), T(0));
    T absorbed(0);
    auto push = [&](std::size_t state, Symbol a, const T& weight) {
      const std::size_t to = aut_.next(state, a);
      if (to == r) absorbed += weight;
      else next[to * lasts_ + (markov_ ? a : 0)] += weight;
    };
    if (length_ == 0) {
      for (Symbol a = 0; a < A_; ++a) push(0, a, initial_[a]);
    } else {
      for (std::size_t slot = 0; slot < dist_.size(); ++slot) {
        if (dist_[slot] == T(0)) continue;
        const std::size_t state = slot / lasts_;
        const Symbol last = static_cast<Symbol>(slot % lasts_);
        for (Symbol a = 0; a < A_; ++a) {
          if (transition_[last][a] == T(0)) continue;
          push(state, a, dist_[slot] * transition_[last][a]);
        }
      }
    }
    dist_ = std::move(next);
    ++length_;
    return absorbed;
  }

  // Divides the surviving weights by `factor`.
  void rescale(const T& factor) {
    for (T& x : dist_) x /= factor;
  }

private:
  const AvoidanceAutomaton& aut_;
  std::size_t A_;
  bool markov_;
  std::size_t lasts_ = 1;
  std::vector<T> initial_;
  std::vector<std::vector<T>> transition_;
  std::vector<T> dist_;
  std::size_t length_ = 0;
};

void check_measure(const Word& w, const Measure& measure) {
  if (w.alphabet_size() != alphabet_size(measure))
    throw AlphabetMismatch("word and measure use different alphabets");
}

} // namespace

SurvivalSeries survival_series(const Word& w, const Measure& measure, std::size_t N) {
  const AvoidanceAutomaton aut = build_automaton(w, measure);
  Walk<Rational> walk(aut, measure);
  SurvivalSeries out;
  out.values.reserve(N + 1);
  while (walk.length() < w.size()) walk.step();
  out.values.push_back(walk.total());
  for (std::size_t n = 1; n <= N; ++n) {
    walk.step();
    out.values.push_back(walk.total());
  }
  return out;
}

std::vector<Rational> first_occurrence_series(const Word& w, const Measure& measure, std::size_t L) {
  const AvoidanceAutomaton aut = build_automaton(w, measure);
  Walk<Rational> walk(aut, measure);
  std::vector<Rational> out{Rational(0)};
  for (std::size_t l = 1; l <= L; ++l) out.push_back(walk.step());
  return out;
}

std::vector<Rational> direct_enumeration_profile(const Word& w, const Measure& measure,
                                                 std::size_t max_length, std::uint64_t cap) {
  check_measure(w, measure);
  const std::size_t A = w.alphabet_size();
  const std::size_t r = w.size();
  if (word_count(A, max_length) > cap)
    throw CapExceeded("direct enumeration of A^l words exceeds the cap");
  const auto* mc = std::get_if<MarkovChain>(&measure);
  if (mc && !is_allowed(w, *mc)) throw ForbiddenWord("word uses a transition of probability zero");

  // Histogram per length keyed by letter counts (Bernoulli) or by first letter
  // and transition counts (Markov); the weight depends only on the key.
  const std::size_t key_size = mc ? 1 + A * A : A;
  std::vector<std::map<std::vector<std::uint32_t>, std::uint64_t>> hist(max_length + 1);
  std::vector<Symbol> prefix;
  std::vector<std::uint32_t> key(key_size, 0);

  auto contains_suffix = [&] {
    if (prefix.size() < r) return false;
    return std::equal(w.letters().begin(), w.letters().end(), prefix.end() - static_cast<std::ptrdiff_t>(r));
  };

  auto visit = [&](auto&& self) -> void {
    ++hist[prefix.size()][key];
    if (prefix.size() == max_length) return;
    for (Symbol a = 0; a < A; ++a) {
      std::size_t slot;
      if (!mc) slot = a;
      else if (prefix.empty()) slot = 0;
      else slot = 1 + prefix.back() * A + a;
      const std::uint32_t saved = key[slot];
      if (mc && prefix.empty()) key[0] = a;
      else ++key[slot];
      prefix.push_back(a);
      if (!contains_suffix()) self(self);
      prefix.pop_back();
      key[slot] = saved;
    }
  };
  visit(visit);

  std::vector<Rational> out;
  out.reserve(max_length + 1);
  for (std::size_t l = 0; l <= max_length; ++l) {
    Rational total = 0;
    for (const auto& [k, count] : hist[l]) {
      Rational weight = 1;
      if (!mc) {
        const auto& mu = std::get<BernoulliMeasure>(measure);
        for (Symbol a = 0; a < A; ++a) weight *= pow(mu.prob(a), k[a]);
      } else if (l > 0) {
        weight = mc->stationary()[k[0]];
        for (Symbol a = 0; a < A; ++a)
          for (Symbol b = 0; b < A; ++b) weight *= pow(mc->transition(a, b), k[1 + a * A + b]);
      }
      total += Rational(Integer(static_cast<unsigned long>(count))) * weight;
    }
    out.push_back(total);
  }
  return out;
}

Rational direct_enumeration(const Word& w, const Measure& measure, std::size_t l, std::uint64_t cap) {
  return direct_enumeration_profile(w, measure, l, cap).back();
}

std::vector<Rational> RationalGenFun::series(std::size_t count) const {
  if (denominator.is_zero() || denominator.coeff(0) == 0)
    throw InvalidArgument("generating function denominator vanishes at 0");
  const Rational& d0 = denominator.coeffs()[0];
  const std::size_t deg = static_cast<std::size_t>(denominator.degree());
  std::vector<Rational> a;
  a.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Rational v = numerator.coeff(n);
    for (std::size_t k = 1; k <= std::min(n, deg); ++k) v -= denominator.coeffs()[k] * a[n - k];
    a.push_back(v / d0);
  }
  return a;
}

RationalGenFun genfun(const Word& w, const Measure& measure) {
  check_measure(w, measure);
  const std::size_t r = w.size();
  if (const auto* mu = std::get_if<BernoulliMeasure>(&measure)) {
    // P(z) = z^{-r} (c_w / tau_w - (1 + z + ... + z^{r-1})).
    const RationalPolynomial t = tau(w, *mu);
    RationalPolynomial geometric(std::vector<Rational>(r, Rational(1)));
    const RationalPolynomial shifted = weighted_autocorr_poly(w, *mu) - t * geometric;
    std::vector<Rational> c = shifted.coeffs();
    for (std::size_t k = 0; k < std::min(r, c.size()); ++k)
      if (c[k] != 0) throw std::logic_error("numerator not divisible by z^r");
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(r, c.size())));
    return {RationalPolynomial(std::move(c)), t};
  }
  // Markov: the numerator has degree below r and is fixed by p_0..p_{r-1}.
  const auto& mc = std::get<MarkovChain>(measure);
  const RationalPolynomial t = tau_markov(w, mc);
  const SurvivalSeries head = survival_series(w, measure, r - 1);
  return {(t * RationalPolynomial(head.values)).truncated(r), t};
}

namespace {

constexpr double convergence_tolerance = 1e-6;
constexpr std::size_t convergence_window = 5;
constexpr std::size_t exact_limit = 500;

void require_estimable(std::size_t count) {
  if (count < 10) throw InvalidArgument("empirical rate needs at least 10 survival values");
}

[[noreturn]] void zero_survival(std::size_t n) {
  throw InvalidArgument("survival probability vanishes at n = " + std::to_string(n));
}

bool window_agrees(const std::vector<double>& ratios) {
  const auto first = ratios.end() - static_cast<std::ptrdiff_t>(convergence_window);
  const auto [lo, hi] = std::minmax_element(first, ratios.end());
  return *hi - *lo <= convergence_tolerance;
}

} // namespace

RateEstimate empirical_rate(const SurvivalSeries& series) {
  const auto& v = series.values;
  require_estimable(v.size());
  for (std::size_t n = 0; n < v.size(); ++n)
    if (v[n] <= 0) zero_survival(n);
  std::vector<double> ratios;
  for (std::size_t n = 1; n < v.size(); ++n) ratios.push_back(-log_rational(v[n] / v[n - 1]));
  const std::size_t N = v.size() - 1;
  return {ratios.back(), -log_rational(v.back()) / static_cast<double>(N), window_agrees(ratios), N};
}

RateEstimate empirical_rate(const Word& w, const Measure& measure, std::size_t N) {
  require_estimable(N + 1);
  if (N <= exact_limit) return empirical_rate(survival_series(w, measure, N));
  const AvoidanceAutomaton aut = build_automaton(w, measure);
  Walk<double> walk(aut, measure);
  // log p_n accumulates the per-step normalisations.
  double log_p = 0.0;
  auto advance = [&] {
    walk.step();
    const double s = walk.total();
    if (!(s > 0.0)) zero_survival(walk.length() < w.size() ? 0 : walk.length() - w.size());
    walk.rescale(s);
    log_p += std::log(s);
    return s;
  };
  while (walk.length() < w.size()) advance();
  std::vector<double> ratios;
  for (std::size_t n = 1; n <= N; ++n) ratios.push_back(-std::log(advance()));
  return {ratios.back(), -log_p / static_cast<double>(N), window_agrees(ratios), N};
}

} // namespace escrate
