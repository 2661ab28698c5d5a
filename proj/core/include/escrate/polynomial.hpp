#pragma once

#include "escrate/measures.hpp"
#include "escrate/rational.hpp"
#include "escrate/words.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace escrate {

/// Dense univariate polynomial in z with exact rational coefficients.
/// coeffs()[k] is the coefficient of z^k; trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  RationalPolynomial(std::initializer_list<Rational> coeffs);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of z^k, zero past the degree.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& z) const;
  double evaluate(double z) const;

  RationalPolynomial derivative() const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const Rational& c);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
  friend RationalPolynomial operator*(const Rational& c, RationalPolynomial a) { return a *= c; }
  friend RationalPolynomial operator-(RationalPolynomial a);

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Multiplies by z^k.
  RationalPolynomial shifted(std::size_t k) const;

  /// Truncation modulo z^k.
  RationalPolynomial truncated(std::size_t k) const;

  /// "num/den" strings, index = degree.
  std::vector<std::string> to_strings() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (quotient, remainder).
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& num,
                                                         const RationalPolynomial& den);

/// Division that must leave no remainder; throws InvalidArgument otherwise.
RationalPolynomial divide_exact(const RationalPolynomial& num, const RationalPolynomial& den);

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// JSON array of "num/den" strings.
std::string to_json(const RationalPolynomial& p);

/// c_w with the symbol probabilities substituted.
RationalPolynomial weighted_autocorr_poly(const Word& w, const BernoulliMeasure& mu);

/// mu(w) z^r + (1 - z) c_w(z).
RationalPolynomial tau(const Word& w, const BernoulliMeasure& mu);

/// f_m(z) = m z^r - z + 1.
RationalPolynomial tau_prime_form(std::size_t r, const Rational& m);

/// p^{r-1}(1-p) z^r - z + 1, which always vanishes at 1/p.
RationalPolynomial tau_bar(std::size_t r, const Rational& p);

struct MarkovAutocorrelation {
  RationalPolynomial full;    ///< c_{w,M}
  RationalPolynomial reduced; ///< c_{w,M} without its z^{r-1} term
};

MarkovAutocorrelation markov_autocorr_poly(const Word& w, const MarkovChain& mc);

/// Markov denominator polynomial, built from
///   mu_Pi(w) z^r (pi(w_{r-1}, w_0) - chi z [w_0 = w_{r-1}]) + (1 - z)(1 - chi z) c_{w,M}(z)
/// and checked against the split form built by tau_markov_split.
/// Throws ForbiddenWord when w is not allowed.
RationalPolynomial tau_markov(const Word& w, const MarkovChain& mc);

/// The same polynomial from its split form
///   mu~ z^r + (1 - z)(1 - chi z) c~_{w,M}(z) + [w_0 = w_{r-1}] mu_Pi (1 - (1 + chi) z) z^{r-1}.
RationalPolynomial tau_markov_split(const Word& w, const MarkovChain& mc);

} // namespace escrate
