#pragma once

#include "escrate/polynomial.hpp"

#include <vector>

namespace escrate::support {

/// Element of Q(z) kept in lowest terms with a monic denominator.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(RationalPolynomial::constant(1)) {}
  RationalFunction(RationalPolynomial num) : num_(std::move(num)), den_(RationalPolynomial::constant(1)) {}
  RationalFunction(RationalPolynomial num, RationalPolynomial den);

  const RationalPolynomial& num() const { return num_; }
  const RationalPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Taylor coefficients at z = 0; the denominator must not vanish there.
  std::vector<Rational> series(std::size_t count) const;

private:
  RationalPolynomial num_;
  RationalPolynomial den_;
};

using Matrix = std::vector<std::vector<RationalFunction>>;

/// Solves A x = b by Gaussian elimination over Q(z). Throws on singular A.
std::vector<RationalFunction> solve(Matrix a, std::vector<RationalFunction> b);

} // namespace escrate::support
