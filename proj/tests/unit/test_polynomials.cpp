#include "escrate/errors.hpp"
#include "escrate/polynomial.hpp"
#include "escrate/roots.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

using namespace escrate;

namespace {

const Alphabet ab = Alphabet::letters(2);
Word w2(const char* text) { return parse_word(text, ab); }
Rational q(long n, long d) { return ratio(n, d); }
MarkovChain chain(Rational aa, Rational bb) { return MarkovChain(Matrix2{{{aa, 1 - aa}, {1 - bb, bb}}}); }

} // namespace

TEST(Polynomial, ArithmeticAndTrimming) {
  const RationalPolynomial p{Rational(1), Rational(-1)};
  const RationalPolynomial r{Rational(1), Rational(1)};
  EXPECT_EQ(p * r, (RationalPolynomial{Rational(1), Rational(0), Rational(-1)}));
  EXPECT_EQ((p + r).degree(), 0);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(RationalPolynomial({Rational(1), Rational(0), Rational(0)}).degree(), 0);
  EXPECT_EQ(p(q(1, 3)), q(2, 3));
  EXPECT_EQ(p.shifted(2).coeffs(), (std::vector<Rational>{0, 0, 1, -1}));
  EXPECT_EQ((p * r).truncated(2), RationalPolynomial::constant(1));
}

TEST(Polynomial, DivisionAndGcd) {
  const RationalPolynomial a{Rational(-1), Rational(0), Rational(1)};  // z^2 - 1
  const RationalPolynomial b{Rational(1), Rational(1)};                // z + 1
  EXPECT_EQ(divide_exact(a, b), (RationalPolynomial{Rational(-1), Rational(1)}));
  EXPECT_THROW(divide_exact(a, RationalPolynomial{Rational(2), Rational(1)}), InvalidArgument);
  EXPECT_EQ(gcd(a * q(3, 1), b * (RationalPolynomial{Rational(2), Rational(1)})), b);
  const auto [quo, rem] = divmod(a, RationalPolynomial{Rational(2), Rational(1)});
  EXPECT_EQ(quo * (RationalPolynomial{Rational(2), Rational(1)}) + rem, a);
}

TEST(Polynomial, JsonGolden) {
  EXPECT_EQ(to_json(RationalPolynomial{Rational(1), q(-2, 5), q(6, 25)}), R"(["1/1","-2/5","6/25"])");
  EXPECT_EQ(to_json(RationalPolynomial{}), "[]");
}

TEST(WeightedAutocorrelation, Examples) {
  const Rational p = q(3, 5);
  const auto mu = BernoulliMeasure::two_symbols(p);
  EXPECT_EQ(weighted_autocorr_poly(w2("aa"), mu), (RationalPolynomial{Rational(1), p}));
  EXPECT_EQ(weighted_autocorr_poly(w2("ab"), mu), RationalPolynomial::constant(1));
  for (std::size_t r = 1; r <= 6; ++r) {
    std::vector<Rational> expect;
    for (std::size_t j = 0; j < r; ++j) expect.push_back(pow(p, j));
    EXPECT_EQ(weighted_autocorr_poly(Word::repeat(0, r, 2), mu), RationalPolynomial(expect));
  }
}

TEST(Tau, ShortWordClosedForms) {
  const Rational p = q(7, 10);
  const Rational qq = 1 - p;
  const auto mu = BernoulliMeasure::two_symbols(p);
  EXPECT_EQ(tau(w2("aa"), mu), (RationalPolynomial{Rational(1), -qq, -p * qq}));
  EXPECT_EQ(tau(w2("ab"), mu), (RationalPolynomial{Rational(1), -p} * RationalPolynomial{Rational(1), -qq}));
  EXPECT_EQ(tau(w2("aab"), mu), tau_prime_form(3, p * p * qq));
}

TEST(Tau, PropertiesOverAllShortWords) {
  support::Rng rng(17);
  for (std::size_t A = 2; A <= 3; ++A)
    for (int trial = 0; trial < 4; ++trial) {
      const auto mu = support::random_bernoulli(rng, A);
      for (std::size_t r = 1; r <= 6; ++r)
        for (const Word& w : enumerate_words(A, r)) {
          const RationalPolynomial t = tau(w, mu);
          ASSERT_EQ(t.degree(), static_cast<int>(r));
          ASSERT_EQ(t(Rational(1)), hole_measure(w, mu));
          ASSERT_EQ(t.coeff(0), 1);
          for (int k = 0; k <= 20; ++k) ASSERT_GT(t(q(k, 20)), 0);
          if (r >= 2 && is_prime(w)) {
            ASSERT_EQ(t, tau_prime_form(r, hole_measure(w, mu)));
          }
        }
    }
}

TEST(Tau, ConstantWordNumeratorIdentity) {
  support::Rng rng(19);
  for (std::size_t A = 2; A <= 4; ++A)
    for (int trial = 0; trial < 5; ++trial) {
      const auto mu = support::random_bernoulli(rng, A);
      for (Symbol a = 0; a < A; ++a)
        for (std::size_t r = 1; r <= 8; ++r) {
          const Rational& pa = mu.prob(a);
          const RationalPolynomial lhs = RationalPolynomial{Rational(1), -pa} * tau(Word::repeat(a, r, A), mu);
          RationalPolynomial rhs = RationalPolynomial::monomial(pow(pa, r) * (1 - pa), r + 1);
          rhs += RationalPolynomial{Rational(1), Rational(-1)};
          ASSERT_EQ(lhs, rhs);
          if (A == 2 && a == 0) {
            ASSERT_EQ(lhs, tau_bar(r + 1, pa));
          }
        }
    }
}

TEST(PrimeForm, Examples) {
  EXPECT_EQ(tau_prime_form(2, q(1, 4)), (RationalPolynomial{Rational(1), Rational(-1), q(1, 4)}));
  const RationalPolynomial f3 = tau_prime_form(3, q(4, 27));
  EXPECT_EQ(f3(q(3, 2)), 0);
  EXPECT_EQ(f3.derivative()(q(3, 2)), 0);
  EXPECT_EQ(tau_prime_form(4, q(27, 256))(q(4, 3)), 0);
  EXPECT_THROW(tau_prime_form(1, q(1, 4)), InvalidArgument);
  EXPECT_THROW(tau_prime_form(3, Rational(0)), InvalidArgument);
}

TEST(TauBar, VanishesAtInverseP) {
  EXPECT_EQ(tau_bar(2, q(1, 2)), (RationalPolynomial{Rational(1), Rational(-1), q(1, 4)}));
  const RationalPolynomial t = tau_bar(3, q(2, 3));
  EXPECT_EQ(t(q(3, 2)), 0);
  EXPECT_EQ(t.derivative()(q(3, 2)), 0);
  for (std::size_t r = 2; r <= 12; ++r)
    for (int k = 1; k < 20; ++k) {
      const Rational p = q(k, 20);
      ASSERT_EQ(tau_bar(r, p)(1 / p), 0);
    }
  EXPECT_THROW(tau_bar(2, Rational(1)), InvalidArgument);
}

TEST(MarkovAutocorrelation, Examples) {
  const MarkovChain mc = chain(q(3, 4), q(2, 3));
  const auto aa = markov_autocorr_poly(w2("aa"), mc);
  EXPECT_EQ(aa.full, (RationalPolynomial{Rational(1), q(3, 4)}));
  EXPECT_EQ(aa.reduced, RationalPolynomial::constant(1));
  const auto abp = markov_autocorr_poly(w2("ab"), mc);
  EXPECT_EQ(abp.full, RationalPolynomial::constant(1));
  EXPECT_EQ(abp.reduced, RationalPolynomial::constant(1));
  const auto aba = markov_autocorr_poly(w2("aba"), chain(q(1, 2), q(1, 2)));
  EXPECT_EQ(aba.full, (RationalPolynomial{Rational(1), Rational(0), q(1, 4)}));
  EXPECT_EQ(aba.reduced, RationalPolynomial::constant(1));
}

TEST(TauMarkov, Examples) {
  const Rational aa = q(3, 4);
  const Rational bb = q(2, 3);
  const MarkovChain mc = chain(aa, bb);
  EXPECT_EQ(tau_markov(w2("aa"), mc), (RationalPolynomial{Rational(1), -bb, -(1 - aa) * (1 - bb)}));
  EXPECT_EQ(tau_markov(w2("ab"), mc), (RationalPolynomial{Rational(1), -(aa + bb), aa * bb}));
  EXPECT_THROW(tau_markov(w2("aa"), chain(Rational(0), q(1, 2))), ForbiddenWord);
}

TEST(TauMarkov, DegreeAndSplitFormAgree) {
  support::Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const MarkovChain mc = support::random_markov(rng);
    for (std::size_t r = 1; r <= 7; ++r)
      for (const Word& w : enumerate_words(2, r)) {
        const RationalPolynomial t = tau_markov(w, mc);
        ASSERT_EQ(t, tau_markov_split(w, mc));
        ASSERT_EQ(t.degree(), static_cast<int>(r));
        ASSERT_EQ(t.coeff(0), 1);
        const Rational delta = w.front() == w.back() ? mc.chi() : Rational(0);
        const HoleWeights hw = markov_weights(w, mc);
        ASSERT_EQ(t(Rational(1)), hw.mu_pi * (mc.transition(w.back(), w.front()) - delta));
      }
  }
}

TEST(TauMarkov, ZeroTransitionsCanLowerTheDegree) {
  // With pi_aa = 0 the z^r coefficient of (ba) vanishes.
  const MarkovChain mc = chain(Rational(0), q(1, 2));
  for (std::size_t r = 1; r <= 7; ++r)
    for (const Word& w : enumerate_words(2, r)) {
      if (!is_allowed(w, mc)) continue;
      const RationalPolynomial t = tau_markov(w, mc);
      ASSERT_LE(t.degree(), static_cast<int>(r));
      ASSERT_EQ(t, tau_markov_split(w, mc));
    }
  EXPECT_EQ(tau_markov(w2("ba"), mc).degree(), 1);
}

TEST(TauMarkov, ReducesToProductMeasureWhenChiVanishes) {
  for (int k = 1; k < 10; ++k) {
    const Rational p = q(k, 10);
    const MarkovChain mc(Matrix2{{{p, 1 - p}, {p, 1 - p}}});
    const BernoulliMeasure mu = mc.induced_product();
    EXPECT_EQ(mu.prob(0), p);
    for (std::size_t r = 1; r <= 6; ++r)
      for (const Word& w : enumerate_words(2, r)) ASSERT_EQ(tau_markov(w, mc), tau(w, mu));
  }
}

TEST(TauMarkov, DegenerateRowAtPolynomialLevel) {
  // pi_aa = 1 is not a valid chain, so the formula is assembled by hand for (aa):
  // mu_Pi = 1, c = 1 + z, chi = pi_bb, and tau collapses to 1 - pi_bb z.
  for (int k = 1; k < 10; ++k) {
    const Rational bb = q(k, 10);
    const Rational chi = 1 + bb - 1;
    const RationalPolynomial one_minus_z{Rational(1), Rational(-1)};
    const RationalPolynomial one_minus_chi_z{Rational(1), -chi};
    const RationalPolynomial c{Rational(1), Rational(1)};
    const RationalPolynomial t = RationalPolynomial::monomial(Rational(1), 2) * RationalPolynomial{Rational(1), -chi} +
                                 one_minus_z * one_minus_chi_z * c;
    EXPECT_EQ(t, (RationalPolynomial{Rational(1), -bb}));
    const RootResult z0 = smallest_positive_root(t);
    EXPECT_TRUE(z0.lower <= 1 / bb && 1 / bb <= z0.upper);
  }
}
