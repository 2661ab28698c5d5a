#pragma once

#include "escrate/measures.hpp"
#include "escrate/polynomial.hpp"
#include "escrate/rational.hpp"
#include "escrate/sturm.hpp"
#include "escrate/words.hpp"

#include <compare>
#include <memory>
#include <optional>

namespace escrate {

/// Relative tolerance used when none is given: 1e-14.
const Rational& default_tolerance();
/// Below this relative width two overlapping enclosures are declared equal: 1e-30.
const Rational& equality_tolerance();

/// Certified enclosure of the smallest positive root z0 of a polynomial,
/// together with the escape rate gamma = log z0.
///
/// The bracket satisfies lower <= z0 <= upper, with lower == upper when the
/// root was hit exactly. gamma_lower/gamma_upper enclose log z0 with outward
/// rounding of the floating-point logarithm.
struct RootResult {
  Rational lower;
  Rational upper;
  double z0 = 0.0;
  double gamma = 0.0;
  double gamma_lower = 0.0;
  double gamma_upper = 0.0;
  /// Sturm chain of the polynomial, kept for later refinement.
  std::shared_ptr<const SturmChain> chain;

  bool exact() const { return lower == upper; }
  Rational width() const { return upper - lower; }

  /// Shrinks the bracket until upper - lower <= tol * lower.
  void refine(const Rational& tol);

  /// Builds a result at a known exact root, verifying that `value` is a root
  /// and that no smaller positive root exists.
  static RootResult exact_root(const RationalPolynomial& poly, const Rational& value);
};

/// Smallest root in (0, infinity) of a polynomial with poly(0) != 0.
/// Throws NoPositiveRoot when there is none (or none below 2^20).
RootResult smallest_positive_root(const RationalPolynomial& poly,
                                  const Rational& tol = default_tolerance());

RootResult escape_rate(const Word& w, const BernoulliMeasure& mu,
                       const Rational& tol = default_tolerance());
RootResult escape_rate(const Word& w, const MarkovChain& mc,
                       const Rational& tol = default_tolerance());
RootResult escape_rate(const Word& w, const Measure& measure,
                       const Rational& tol = default_tolerance());

/// Orders two roots (equivalently their escape rates). Overlapping brackets
/// are refined in place down to equality_tolerance(); if they still overlap
/// the roots are reported equivalent.
std::weak_ordering compare(RootResult& a, RootResult& b);

enum class CriticalSign { negative = -1, zero = 0, positive = 1 };

/// Critical quantities of f_m(z) = m z^r - z + 1.
struct CriticalPair {
  Rational m_star;                  ///< (1/r)(1 - 1/r)^{r-1}
  std::optional<Rational> z_star;   ///< (r m)^{-1/(r-1)} when rational
  Rational z_star_lower;            ///< enclosure of z*(m); equal to z_star when exact
  Rational z_star_upper;
  CriticalSign sign;                ///< sign of f_m(z*(m))
};

Rational critical_measure(std::size_t r);

CriticalPair critical_values(std::size_t r, const Rational& m,
                             const Rational& tol = default_tolerance());

} // namespace escrate
