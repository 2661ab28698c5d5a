#pragma once

#include "escrate/polynomial.hpp"
#include "escrate/rational.hpp"

#include <cstddef>
#include <vector>

namespace escrate {

/// Sturm sequence of the square-free part of a non-constant polynomial, with
/// every member scaled to a primitive integer polynomial.
class SturmChain {
public:
  explicit SturmChain(const RationalPolynomial& p);

  /// Number of distinct real roots in (lo, hi]. Valid for any lo < hi.
  std::size_t count(const Rational& lo, const Rational& hi) const;
  /// Number of distinct roots in (0, infinity).
  std::size_t count_positive() const;
  /// Number of distinct roots in (0, x].
  std::size_t count_up_to(const Rational& x) const;

  /// Sign of the square-free part at x; its roots are all simple.
  int sign_at(const Rational& x) const;

  std::size_t length() const noexcept { return chain_.size(); }
  /// The square-free part, normalized to a primitive integer polynomial.
  RationalPolynomial square_free() const;

private:
  using IntPoly = std::vector<Integer>;

  int variations_at(const Rational& x) const;
  int variations_at_zero() const;
  int variations_at_infinity() const;
  static int sign_of(const IntPoly& p, const Integer& num, const Integer& den);

  std::vector<IntPoly> chain_;
};

} // namespace escrate
