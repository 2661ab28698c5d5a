#include "escrate/errors.hpp"
#include "escrate/extremal.hpp"
#include "escrate/polynomial.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

using namespace escrate;

namespace {

const Alphabet ab = Alphabet::letters(2);
Word w2(const char* text) { return parse_word(text, ab); }
Rational q(long n, long d) { return ratio(n, d); }
MarkovChain chain(Rational aa, Rational bb) { return MarkovChain(Matrix2{{{aa, 1 - aa}, {1 - bb, bb}}}); }

std::vector<std::string> names(const std::vector<Word>& words, const Alphabet& alphabet = ab) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(format_word(w, alphabet));
  return out;
}

using Names = std::vector<std::string>;

// Escape rates of every word of length r, sharing results between equal polynomials.
std::vector<RootResult> all_rates(std::size_t r, const BernoulliMeasure& mu, std::vector<Word>& words) {
  words = support::all_words(mu.alphabet_size(), r);
  std::map<std::vector<Rational>, RootResult> cache;
  std::vector<RootResult> out;
  for (const Word& w : words) {
    const RationalPolynomial t = tau(w, mu);
    auto it = cache.find(t.coeffs());
    if (it == cache.end()) it = cache.emplace(t.coeffs(), escape_rate(w, mu)).first;
    out.push_back(it->second);
  }
  return out;
}

std::vector<BernoulliMeasure> sample_measures(std::size_t A, int count, std::uint64_t seed) {
  support::Rng rng(seed);
  std::vector<BernoulliMeasure> out;
  if (A == 2) out.push_back(BernoulliMeasure::two_symbols(q(1, 2)));
  while (static_cast<int>(out.size()) < count) out.push_back(support::random_bernoulli(rng, A, 12));
  return out;
}

} // namespace

TEST(Families, Examples) {
  const HoleFamilies f = families(3, BernoulliMeasure::two_symbols(q(3, 5)));
  EXPECT_EQ(names(f.primes_max), (Names{"aab", "baa"}));
  EXPECT_EQ(f.mu_P, q(18, 125));
  EXPECT_EQ(names(f.measure_max), (Names{"aaa"}));
  EXPECT_EQ(f.mu_M, q(27, 125));

  const HoleFamilies half = families(4, BernoulliMeasure::two_symbols(q(1, 2)));
  const auto& P = half.primes_max;
  const auto& M = half.measure_max;
  EXPECT_NE(std::find(P.begin(), P.end(), w2("aaab")), P.end());
  EXPECT_NE(std::find(M.begin(), M.end(), w2("aaab")), M.end());
  EXPECT_EQ(M.size(), 16u);
}

TEST(Families, DisjointWhenSecondSymbolIsLessLikely) {
  for (const auto& mu : sample_measures(3, 8, 41)) {
    const auto [a, b] = mu.two_most_probable();
    if (mu.prob(a) == mu.prob(b)) continue;
    for (std::size_t r = 2; r <= 5; ++r) {
      const HoleFamilies f = families(r, mu);
      EXPECT_EQ(f.measure_max, (std::vector<Word>{Word::repeat(a, r, 3)}));
      EXPECT_EQ(f.mu_P, pow(mu.prob(a), r - 1) * mu.prob(b));
      for (const Word& w : f.primes_max) EXPECT_TRUE(is_prime(w));
    }
  }
}

TEST(GammaMax, TwoSymbolExamples) {
  const RegimeReport r2 = gamma_max(2, BernoulliMeasure::two_symbols(q(3, 5)));
  EXPECT_EQ(names(r2.witnesses), (Names{"ab", "ba"}));
  EXPECT_NEAR(r2.gamma_max.gamma, std::log(5.0 / 3.0), 1e-13);
  EXPECT_EQ(names(gamma_max(2, BernoulliMeasure::two_symbols(q(3, 4))).witnesses), (Names{"aa"}));
  const RegimeReport r4 = gamma_max(4, BernoulliMeasure::two_symbols(q(9, 10)));
  EXPECT_EQ(r4.regime, Regime::measure_max);
  EXPECT_EQ(names(r4.witnesses), (Names{"aaaa"}));
}

TEST(GammaMaxTwoSymbols, RegimeTable) {
  const RegimeReport flat = gamma_max_two_symbols(5, q(4, 5));
  EXPECT_EQ(flat.regime, Regime::prime_flat);
  EXPECT_TRUE(flat.gamma_max.exact());
  EXPECT_EQ(flat.gamma_max.lower, q(5, 4));

  const RegimeReport tie = gamma_max_two_symbols(4, q(4, 5));
  EXPECT_EQ(tie.regime, Regime::tie);
  EXPECT_EQ(tie.gamma_max.lower, q(5, 4));
  EXPECT_EQ(names(tie.witnesses), (Names{"aaab", "baaa", "aaaa"}));

  const RegimeReport low = gamma_max_two_symbols(3, q(1, 2));
  EXPECT_EQ(low.regime, Regime::prime_low);
  RootResult brute = *brute_force_gamma_max(3, BernoulliMeasure::two_symbols(q(1, 2))).gamma;
  RootResult g = low.gamma_max;
  EXPECT_EQ(compare(g, brute), std::weak_ordering::equivalent);

  EXPECT_THROW(gamma_max_two_symbols(3, q(2, 5)), InvalidArgument);
  EXPECT_THROW(gamma_max_two_symbols(3, Rational(1)), InvalidArgument);
  EXPECT_THROW(gamma_max_two_symbols(1, q(3, 5)), InvalidArgument);
}

TEST(GammaMaxTwoSymbols, BoundaryCandidatesCoincide) {
  for (std::size_t r = 2; r <= 10; ++r) {
    const Rational low = 1 - q(1, r);
    const Rational high = 1 - q(1, r + 1);
    if (low >= q(1, 2)) {
      const RootResult deflated =
          smallest_positive_root(divide_exact(tau_bar(r, low), RationalPolynomial{Rational(1), -low}));
      EXPECT_NEAR(deflated.gamma, -std::log(to_double(low)), 1e-12) << r;
      EXPECT_EQ(gamma_max_two_symbols(r, low).regime, Regime::prime_flat);
    }
    const auto mu = BernoulliMeasure::two_symbols(high);
    std::vector<Symbol> prime(r, 0);
    prime.back() = 1;
    RootResult gp = escape_rate(Word(prime, 2), mu);
    RootResult gm = escape_rate(Word::repeat(0, r, 2), mu);
    EXPECT_NEAR(gp.gamma, gm.gamma, 1e-12) << r;
    EXPECT_EQ(compare(gp, gm), std::weak_ordering::equivalent) << r;
  }
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(names(brute_force_gamma_max(2, BernoulliMeasure::two_symbols(q(3, 5))).argmax), (Names{"ab", "ba"}));
  EXPECT_EQ(names(brute_force_gamma_max(2, BernoulliMeasure::two_symbols(q(3, 4))).argmax), (Names{"aa"}));
  EXPECT_THROW(brute_force_gamma_max(25, BernoulliMeasure::two_symbols(q(3, 4))), CapExceeded);
}

TEST(BruteForce, ParallelScanIsDeterministic) {
  const auto mu = BernoulliMeasure({q(1, 2), q(3, 10), q(1, 5)});
  const ScanMaximum one = brute_force_gamma_max(5, mu, {default_tolerance(), default_enumeration_cap, 1});
  const ScanMaximum four = brute_force_gamma_max(5, mu, {default_tolerance(), default_enumeration_cap, 4});
  EXPECT_EQ(one.argmax, four.argmax);
  EXPECT_EQ(one.gamma->lower, four.gamma->lower);
  EXPECT_EQ(one.gamma->upper, four.gamma->upper);
}

TEST(BruteForce, AgreesWithFamilyRepresentatives) {
  for (std::size_t A = 2; A <= 3; ++A)
    for (const auto& mu : sample_measures(A, 5, 43 + A))
      for (std::size_t r = 2; r <= (A == 2 ? 6u : 5u); ++r) {
        const ScanMaximum brute = brute_force_gamma_max(r, mu);
        RegimeReport report = gamma_max(r, mu);
        RootResult bg = *brute.gamma;
        ASSERT_EQ(compare(report.gamma_max, bg), std::weak_ordering::equivalent) << "A=" << A << " r=" << r;
        for (const Word& w : report.witnesses)
          ASSERT_NE(std::find(brute.argmax.begin(), brute.argmax.end(), w), brute.argmax.end());
      }
}

TEST(EqualLengthOrdering, PrimeWordsLeadTheirMeasureClass) {
  for (std::size_t A = 2; A <= 3; ++A)
    for (const auto& mu : sample_measures(A, 3, 53 + A))
      for (std::size_t r = 2; r <= (A == 2 ? 6u : 5u); ++r) {
        std::vector<Word> words;
        std::vector<RootResult> rates = all_rates(r, mu, words);
        for (std::size_t i = 0; i < words.size(); ++i) {
          if (!is_prime(words[i])) continue;
          const Rational mi = hole_measure(words[i], mu);
          for (std::size_t j = 0; j < words.size(); ++j) {
            if (i == j) continue;
            const Rational mj = hole_measure(words[j], mu);
            const auto order = compare(rates[i], rates[j]);
            if (mi == mj) {
              if (is_prime(words[j])) ASSERT_EQ(order, std::weak_ordering::equivalent);
              else ASSERT_EQ(order, std::weak_ordering::greater);
            } else if (mi > mj && is_prime(words[j])) {
              ASSERT_EQ(order, std::weak_ordering::greater);
            }
          }
        }
      }
}

TEST(EqualLengthOrdering, ConstantWordsOrderedByProbability) {
  support::Rng rng(59);
  for (std::size_t A = 2; A <= 4; ++A)
    for (int trial = 0; trial < 6; ++trial) {
      const auto mu = support::random_bernoulli(rng, A, 30);
      for (std::size_t r = 1; r <= 6; ++r)
        for (Symbol a = 0; a < A; ++a)
          for (Symbol b = 0; b < A; ++b) {
            if (!(mu.prob(a) > mu.prob(b))) continue;
            RootResult ga = escape_rate(Word::repeat(a, r, A), mu);
            RootResult gb = escape_rate(Word::repeat(b, r, A), mu);
            ASSERT_EQ(compare(ga, gb), std::weak_ordering::greater);
          }
    }
}

TEST(PrimeHoleBounds, SandwichEveryPrimeWord) {
  for (std::size_t A = 2; A <= 3; ++A)
    for (const auto& mu : sample_measures(A, 4, 61 + A))
      for (std::size_t r = 2; r <= 7; ++r) {
        for (const Word& w : enumerate_words(A, r)) {
          if (!is_prime(w)) continue;
          const Rational m = hole_measure(w, mu);
          if (m > critical_measure(r)) continue;
          const Bounds b = prime_hole_bounds(r, m);
          const RootResult g = escape_rate(w, mu);
          ASSERT_LE(b.lower, g.gamma_upper);
          ASSERT_LE(g.gamma_lower, b.upper);
        }
      }
}

TEST(PrimeHoleBounds, Examples) {
  for (std::size_t r = 2; r <= 9; ++r)
    EXPECT_NEAR(prime_hole_bounds(r, critical_measure(r)).upper, std::log(double(r) / double(r - 1)), 1e-14);
  EXPECT_NEAR(prime_hole_bounds(2, q(1, 4)).upper, std::log(2.0), 1e-15);
  EXPECT_THROW(prime_hole_bounds(3, q(1, 5)), InvalidArgument);
  // The stable lower-bound form equals the textbook expression.
  const std::size_t r = 5;
  const double m = 1.0 / 100;
  const double disc = 1 - r * m * (2 + (r - 2.0) * m);
  const double textbook = std::log((1 + r * (r - 2.0) * m - std::sqrt(disc)) / (r * (r - 1.0) * m));
  EXPECT_NEAR(prime_hole_bounds(r, q(1, 100)).lower, textbook, 1e-14);
}

TEST(GammaMaxBounds, Regimes) {
  const MaxBounds mid = gamma_max_bounds(5, q(4, 5));
  EXPECT_EQ(mid.regime_case, 2);
  EXPECT_EQ(mid.bounds.lower, mid.bounds.upper);
  EXPECT_NEAR(mid.bounds.lower, std::log(5.0 / 4.0), 1e-15);
  const double p = 0.9;
  const MaxBounds high = gamma_max_bounds(4, q(9, 10));
  EXPECT_EQ(high.regime_case, 3);
  EXPECT_NEAR(high.bounds.upper, std::log((-1 + p + std::sqrt((1 - p) * (1 - p) + 4 * p * (1 - p))) / (2 * p * (1 - p))),
              1e-14);
  EXPECT_NEAR(high.bounds.lower, std::log(1 / p) + 0.25 * std::log(1 / (5 * (1 - p))), 1e-14);
  EXPECT_EQ(gamma_max_bounds(4, q(3, 5)).regime_case, 1);
  EXPECT_THROW(gamma_max_bounds(4, q(2, 5)), InvalidArgument);
}

TEST(GammaMaxBounds, SandwichOnGrid) {
  for (std::size_t r = 2; r <= 16; ++r)
    for (int k = 0; k < 100; k += 3) {
      const Rational p = q(1, 2) + q(k, 200);
      const MaxBounds b = gamma_max_bounds(r, p);
      const RootResult g = gamma_max_two_symbols(r, p).gamma_max;
      ASSERT_LE(b.bounds.lower, g.gamma_upper) << r << " " << k;
      ASSERT_LE(g.gamma_lower, b.bounds.upper) << r << " " << k;
    }
}

TEST(OrderingTable, EquiprobableFollowsMinimalPeriod) {
  const auto rows = ordering_table(4, BernoulliMeasure::two_symbols(q(1, 2)));
  ASSERT_EQ(rows.size(), 16u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i - 1].min_period, rows[i].min_period);
    if (rows[i - 1].min_period > rows[i].min_period) {
      EXPECT_LT(rows[i - 1].tie_group, rows[i].tie_group);
    }
  }
  EXPECT_TRUE(rows.front().prime);
  EXPECT_EQ(rows.back().min_period, 1u);
}

TEST(OrderingTable, TieGroupsAndStableOrder) {
  const auto rows = ordering_table(2, BernoulliMeasure::two_symbols(q(2, 3)));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(format_word(rows[0].word, ab), "aa");
  EXPECT_EQ(format_word(rows[1].word, ab), "ab");
  EXPECT_EQ(format_word(rows[2].word, ab), "ba");
  EXPECT_EQ(rows[0].tie_group, 0u);
  EXPECT_EQ(rows[2].tie_group, 0u);
  EXPECT_EQ(rows[3].tie_group, 1u);
}

TEST(OrderSwitch, AabbaaVersusBaaaab) {
  const Word w = w2("aabbaa");
  const Word v = w2("baaaab");
  EXPECT_EQ(minimal_period(w), 4u);
  EXPECT_EQ(minimal_period(v), 5u);
  const OrderSwitch s = locate_order_switch(w, v, q(70, 100), q(72, 100), decimal_power(-8));
  EXPECT_GT(s.lower, q(70, 100));
  EXPECT_LT(s.upper, q(72, 100));
  EXPECT_NE(s.sign_below, s.sign_above);
  EXPECT_NEAR(to_double(s.lower), std::sqrt(0.5), 0.01);
  EXPECT_THROW(locate_order_switch(w, v, q(1, 2), q(6, 10), decimal_power(-3)), InvalidArgument);
}

TEST(MultiSymbol, Examples) {
  const MultiSymbolReport low_q = multi_symbol_analysis(3, BernoulliMeasure({q(7, 10), q(15, 100), q(15, 100)}));
  EXPECT_EQ(low_q.regime, Regime::measure_max);
  EXPECT_EQ(low_q.reason, MultiSymbolReason::q_below_p_one_minus_p);
  RootResult gp = low_q.gamma_prime;
  RootResult gm = low_q.gamma_measure;
  EXPECT_EQ(compare(gp, gm), std::weak_ordering::less);

  const MultiSymbolReport close = multi_symbol_analysis(4, BernoulliMeasure({q(3, 5), q(39, 100), q(1, 100)}));
  EXPECT_EQ(close.reason, MultiSymbolReason::direct_comparison);
  EXPECT_EQ(close.regime, Regime::prime_low);

  const MultiSymbolReport high = multi_symbol_analysis(3, BernoulliMeasure({q(4, 5), q(1, 10), q(1, 10)}));
  EXPECT_EQ(high.reason, MultiSymbolReason::p_above_threshold);
  EXPECT_EQ(high.regime, Regime::measure_max);

  EXPECT_THROW(multi_symbol_analysis(3, BernoulliMeasure::two_symbols(q(3, 5))), InvalidArgument);
  const auto found = find_prime_maximal_q(4, q(3, 5), 40);
  ASSERT_TRUE(found);
  EXPECT_GT(*found, q(3, 5) * q(2, 5));
}

TEST(MultiSymbol, ShortcutReasonsAgreeWithDirectComparison) {
  support::Rng rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const auto mu = support::random_bernoulli(rng, 3 + trial % 2, 30);
    for (std::size_t r = 2; r <= 5; ++r) {
      const MultiSymbolReport rep = multi_symbol_analysis(r, mu);
      RootResult gp = rep.gamma_prime;
      RootResult gm = rep.gamma_measure;
      const auto order = compare(gp, gm);
      if (rep.reason != MultiSymbolReason::direct_comparison) {
        ASSERT_NE(order, std::weak_ordering::greater);
      } else if (rep.prime_representative != rep.measure_representative) {
        ASSERT_EQ(rep.regime == Regime::prime_low, order == std::weak_ordering::greater);
      }
    }
  }
}

TEST(MarkovScan, PairClassificationHolds) {
  for (int i = 1; i < 10; ++i)
    for (int j = 1; j < 10; ++j) {
      const MarkovChain mc = chain(q(i, 10), q(j, 10));
      for (std::size_t r = 2; r <= 4; ++r) {
        const MarkovScan scan = markov_scan(r, mc);
        for (const auto& pc : scan.pairs)
          ASSERT_TRUE(pc.holds) << format_word(pc.prime_word, ab) << " vs " << format_word(pc.other_word, ab) << " at "
                                << i << "," << j << " case " << to_string(pc.pair_case);
      }
    }
}

TEST(MarkovScan, GreenRegionExample) {
  const MarkovScan scan = markov_scan(3, chain(q(1, 10), q(1, 10)));
  EXPECT_LT(scan.rows.size(), 9u);
  EXPECT_EQ(names(scan.maximum.argmax), (Names{"aba", "bab"}));
}

TEST(MarkovScan, ForbiddenWordsAreSkipped) {
  const MarkovScan scan = markov_scan(3, chain(Rational(0), q(1, 2)));
  for (const auto& row : scan.rows) EXPECT_TRUE(is_allowed(row.word, chain(Rational(0), q(1, 2))));
  EXPECT_EQ(scan.rows.size(), 5u);
}

TEST(ClosedWordCriterion, PredictionMatchesObservation) {
  for (std::size_t r = 3; r <= 5; ++r)
    for (int i = 1; i < 20; ++i)
      for (int j = 1; j < 20; ++j) {
        const ClosedWordComparison c = compare_closed_word(r, chain(q(i, 20), q(j, 20)));
        ASSERT_EQ(c.predicted_closed_wins, c.closed_wins) << r << " " << i << " " << j;
      }
}
