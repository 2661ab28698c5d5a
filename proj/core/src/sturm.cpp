#include "escrate/sturm.hpp"

#include "escrate/errors.hpp"

namespace escrate {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

/// Divides by the positive content so the coefficients are coprime.
void make_primitive(IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly to_integer_poly(const RationalPolynomial& p) {
  Integer lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (lcm / c.get_den()));
  make_primitive(out);
  return out;
}

IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  make_primitive(d);
  return d;
}

/// Returns -rem(a, b) up to a positive factor, as a primitive polynomial.
IntPoly negated_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lead = b.back();
  std::size_t steps = 0;
  while (a.size() > db && !a.empty()) {
    const std::size_t shift = a.size() - 1 - db;
    Integer top = a.back();
    // a <- lead * a - top * z^shift * b, which removes the leading term.
    for (auto& c : a) c *= lead;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= top * b[j];
    trim(a);
    ++steps;
  }
  // a now equals lead^steps * rem(a, b); undo the sign of that factor.
  const bool flip = sgn(lead) < 0 && steps % 2 == 1;
  if (!flip)
    for (auto& c : a) c = -c;
  make_primitive(a);
  return a;
}

/// Exact division of integer polynomials over Q, rescaled to a primitive integer polynomial.
IntPoly divide_by(const IntPoly& num, const IntPoly& den) {
  auto as_rational = [](const IntPoly& p) {
    std::vector<Rational> q;
    for (const auto& c : p) q.emplace_back(c);
    return RationalPolynomial(std::move(q));
  };
  auto quotient = divide_exact(as_rational(num), as_rational(den));
  // Scaling is by a positive factor only, so signs are preserved.
  return to_integer_poly(quotient);
}

} // namespace

SturmChain::SturmChain(const RationalPolynomial& p) {
  if (p.degree() < 1) throw InvalidArgument("Sturm chains need a non-constant polynomial");
  chain_.push_back(to_integer_poly(p));
  chain_.push_back(derivative(chain_.front()));
  while (chain_.back().size() > 1) {
    auto next = negated_remainder(chain_[chain_.size() - 2], chain_.back());
    if (next.empty()) break;
    chain_.push_back(std::move(next));
  }
  // A non-constant last member is gcd(p, p'); dividing it out leaves the
  // Sturm sequence of the square-free part.
  if (chain_.back().size() > 1) {
    const IntPoly g = chain_.back();
    for (auto& member : chain_) member = divide_by(member, g);
  }
}

int SturmChain::sign_of(const IntPoly& p, const Integer& num, const Integer& den) {
  // sign of sum_k c_k num^k den^(d-k); den > 0.
  if (p.empty()) return 0;
  Integer acc = p.back();
  Integer den_pow = 1;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    den_pow *= den;
    acc = acc * num + p[k] * den_pow;
  }
  return sgn(acc);
}

int SturmChain::variations_at(const Rational& x) const {
  int variations = 0;
  int last = 0;
  for (const auto& member : chain_) {
    int s = sign_of(member, x.get_num(), x.get_den());
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmChain::variations_at_zero() const {
  int variations = 0;
  int last = 0;
  for (const auto& member : chain_) {
    int s = member.empty() ? 0 : sgn(member.front());
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmChain::variations_at_infinity() const {
  int variations = 0;
  int last = 0;
  for (const auto& member : chain_) {
    int s = member.empty() ? 0 : sgn(member.back());
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

std::size_t SturmChain::count(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  return static_cast<std::size_t>(variations_at(lo) - variations_at(hi));
}

std::size_t SturmChain::count_positive() const {
  return static_cast<std::size_t>(variations_at_zero() - variations_at_infinity());
}

std::size_t SturmChain::count_up_to(const Rational& x) const {
  if (sgn(x) <= 0) return 0;
  return static_cast<std::size_t>(variations_at_zero() - variations_at(x));
}

int SturmChain::sign_at(const Rational& x) const {
  return sign_of(chain_.front(), x.get_num(), x.get_den());
}

RationalPolynomial SturmChain::square_free() const {
  std::vector<Rational> coeffs;
  for (const auto& c : chain_.front()) coeffs.emplace_back(c);
  return RationalPolynomial(std::move(coeffs));
}

} // namespace escrate
