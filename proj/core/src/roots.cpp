#include "escrate/roots.hpp"

#include "escrate/errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace escrate {

namespace {

double widen(double x, int ulps, double direction) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, direction);
  return x;
}

void finalize(RootResult& r) {
  const Rational mid = (r.lower + r.upper) / 2;
  r.z0 = to_double(mid);
  r.gamma = log_rational(mid);
  constexpr double inf = std::numeric_limits<double>::infinity();
  r.gamma_lower = widen(log_rational(r.lower), 4, -inf);
  r.gamma_upper = widen(log_rational(r.upper), 4, inf);
}

// The bracket holds exactly one root of the square-free part, strictly
// inside, and the square-free part is non-zero at the lower end.
void bisect(RootResult& r, const Rational& tol) {
  if (r.exact()) return;
  const SturmChain& chain = *r.chain;
  const int lower_sign = chain.sign_at(r.lower);
  while (r.upper - r.lower > tol * r.lower) {
    Rational mid = (r.lower + r.upper) / 2;
    const int s = chain.sign_at(mid);
    if (s == 0) {
      r.lower = mid;
      r.upper = mid;
      return;
    }
    if (s == lower_sign)
      r.lower = std::move(mid);
    else
      r.upper = std::move(mid);
  }
}

// For m z^r - z + 1 the smallest positive root lies below z*(m) = (r m)^{-1/(r-1)}.
Rational initial_upper_bound(const RationalPolynomial& poly) {
  Rational start = 2;
  const auto& c = poly.coeffs();
  if (c.size() < 3 || c[0] != 1 || c[1] != -1 || sgn(c.back()) <= 0) return start;
  for (std::size_t k = 2; k + 1 < c.size(); ++k)
    if (sgn(c[k]) != 0) return start;
  const double r = static_cast<double>(c.size() - 1);
  const double z_star = std::pow(r * c.back().get_d(), -1.0 / (r - 1.0));
  if (std::isfinite(z_star) && z_star > 2.0 && z_star < 1048576.0) start = Rational(std::ceil(z_star));
  return start;
}

const Rational& search_cap() {
  static const Rational cap(Integer(1) << 20);
  return cap;
}

} // namespace

const Rational& default_tolerance() {
  static const Rational tol = decimal_power(-14);
  return tol;
}

const Rational& equality_tolerance() {
  static const Rational tol = decimal_power(-30);
  return tol;
}

void RootResult::refine(const Rational& tol) {
  if (!chain) throw InvalidArgument("RootResult has no polynomial to refine against");
  bisect(*this, tol);
  finalize(*this);
}

RootResult RootResult::exact_root(const RationalPolynomial& poly, const Rational& value) {
  if (sgn(value) <= 0 || sgn(poly(value)) != 0)
    throw InvalidArgument(to_string(value) + " is not a positive root");
  auto chain = std::make_shared<const SturmChain>(poly);
  if (chain->count_up_to(value) != 1)
    throw InvalidArgument(to_string(value) + " is not the smallest positive root");
  RootResult r;
  r.lower = value;
  r.upper = value;
  r.chain = std::move(chain);
  finalize(r);
  return r;
}

RootResult smallest_positive_root(const RationalPolynomial& poly, const Rational& tol) {
  if (poly.is_zero()) throw InvalidArgument("the zero polynomial has no isolated roots");
  if (sgn(tol) <= 0) throw InvalidArgument("tolerance must be positive");
  if (sgn(poly.coeff(0)) == 0) throw InvalidArgument("root isolation needs poly(0) != 0");
  if (poly.degree() < 1) throw NoPositiveRoot("constant polynomial has no roots");

  auto chain = std::make_shared<const SturmChain>(poly);
  if (chain->count_positive() == 0) throw NoPositiveRoot("polynomial has no positive root");

  Rational hi = initial_upper_bound(poly);
  while (chain->count_up_to(hi) == 0) {
    hi *= 2;
    if (hi > search_cap()) throw NoPositiveRoot("no positive root below 2^20");
  }

  // Shrink (lo, hi] until it holds only the smallest root; (0, lo] stays root-free.
  Rational lo = 0;
  while (chain->count(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (chain->count(lo, mid) >= 1)
      hi = std::move(mid);
    else
      lo = std::move(mid);
  }

  RootResult r;
  r.chain = std::move(chain);
  if (r.chain->sign_at(hi) == 0) {
    r.lower = hi;
    r.upper = hi;
  } else {
    r.lower = lo;
    r.upper = hi;
    bisect(r, tol);
  }
  finalize(r);
  return r;
}

namespace {

RootResult checked(RootResult r) {
  if (!(r.lower > 1)) throw std::logic_error("escape-rate root is not above 1");
  return r;
}

} // namespace

RootResult escape_rate(const Word& w, const BernoulliMeasure& mu, const Rational& tol) {
  return checked(smallest_positive_root(tau(w, mu), tol));
}

RootResult escape_rate(const Word& w, const MarkovChain& mc, const Rational& tol) {
  return checked(smallest_positive_root(tau_markov(w, mc), tol));
}

RootResult escape_rate(const Word& w, const Measure& measure, const Rational& tol) {
  return std::visit([&](const auto& m) { return escape_rate(w, m, tol); }, measure);
}

std::weak_ordering compare(RootResult& a, RootResult& b) {
  auto decided = [&]() -> std::optional<std::weak_ordering> {
    if (a.upper < b.lower) return std::weak_ordering::less;
    if (b.upper < a.lower) return std::weak_ordering::greater;
    if (a.exact() && b.exact() && a.lower == b.lower) return std::weak_ordering::equivalent;
    return std::nullopt;
  };
  if (auto o = decided()) return *o;
  if (a.chain && b.chain && (a.chain == b.chain || a.chain->square_free() == b.chain->square_free()))
    return std::weak_ordering::equivalent;
  for (const Rational& tol : {decimal_power(-20), equality_tolerance()}) {
    a.refine(tol);
    b.refine(tol);
    if (auto o = decided()) return *o;
  }
  return std::weak_ordering::equivalent;
}

Rational critical_measure(std::size_t r) {
  if (r < 2) throw InvalidArgument("critical values need r >= 2");
  Integer num;
  Integer den;
  mpz_ui_pow_ui(num.get_mpz_t(), r - 1, r - 1);
  mpz_ui_pow_ui(den.get_mpz_t(), r, r);
  Rational m(num, den);
  m.canonicalize();
  return m;
}

CriticalPair critical_values(std::size_t r, const Rational& m, const Rational& tol) {
  if (sgn(m) <= 0) throw InvalidArgument("critical values need m > 0");
  CriticalPair out;
  out.m_star = critical_measure(r);
  const int c = cmp(m, out.m_star);
  out.sign = c < 0 ? CriticalSign::negative : (c == 0 ? CriticalSign::zero : CriticalSign::positive);

  // z*(m) = t^{1/k} with t = 1/(r m), k = r - 1.
  const Rational t = 1 / (m * static_cast<unsigned long>(r));
  const unsigned long k = r - 1;
  Integer num_root;
  Integer den_root;
  const bool num_exact = mpz_root(num_root.get_mpz_t(), t.get_num_mpz_t(), k) != 0;
  const bool den_exact = mpz_root(den_root.get_mpz_t(), t.get_den_mpz_t(), k) != 0;
  if (num_exact && den_exact) {
    Rational z(num_root, den_root);
    z.canonicalize();
    out.z_star = z;
    out.z_star_lower = z;
    out.z_star_upper = z;
    return out;
  }
  Rational lo = 0;
  Rational hi = t > 1 ? t : Rational(1);
  while (sgn(lo) == 0 || hi - lo > tol * lo) {
    Rational mid = (lo + hi) / 2;
    if (pow(mid, k) < t)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  out.z_star_lower = lo;
  out.z_star_upper = hi;
  return out;
}

} // namespace escrate
