#include "escrate/polynomial.hpp"

#include "escrate/errors.hpp"

#include <stdexcept>

namespace escrate {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& RationalPolynomial::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational RationalPolynomial::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double RationalPolynomial::evaluate(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(RationalPolynomial a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

RationalPolynomial RationalPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> out(k);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::truncated(std::size_t k) const {
  if (k >= coeffs_.size()) return *this;
  return RationalPolynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k)));
}

std::vector<std::string> RationalPolynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_string(c));
  return out;
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& num,
                                                         const RationalPolynomial& den) {
  if (den.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (num.degree() < den.degree()) return {RationalPolynomial{}, num};
  std::vector<Rational> rem = num.coeffs();
  const auto dd = static_cast<std::size_t>(den.degree());
  std::vector<Rational> quot(rem.size() - dd);
  const Rational& lead = den.leading();
  for (std::size_t k = rem.size(); k-- > dd;) {
    Rational factor = rem[k] / lead;
    quot[k - dd] = factor;
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * den.coeffs()[j];
  }
  rem.resize(dd);
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial divide_exact(const RationalPolynomial& num, const RationalPolynomial& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw InvalidArgument("polynomial division leaves a remainder");
  return q;
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * Rational(1 / a.leading());
}

std::string to_json(const RationalPolynomial& p) {
  std::string out = "[";
  bool first = true;
  for (const auto& s : p.to_strings()) {
    if (!first) out += ',';
    out += '"' + s + '"';
    first = false;
  }
  return out + "]";
}

namespace {

void require_alphabet(const Word& w, std::size_t size) {
  if (w.alphabet_size() != size) throw AlphabetMismatch("word and measure alphabets differ");
}

const RationalPolynomial& one_minus_z() {
  static const RationalPolynomial p{Rational(1), Rational(-1)};
  return p;
}

} // namespace

RationalPolynomial weighted_autocorr_poly(const Word& w, const BernoulliMeasure& mu) {
  require_alphabet(w, mu.alphabet_size());
  const auto n = w.size();
  const auto c = autocorrelation(w);
  std::vector<Rational> coeffs(n);
  // Weight of the j-letter tail w_{n-j} ... w_{n-1}, grown one letter at a time.
  Rational tail = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0) tail *= mu.prob(w[n - j]);
    if (c[j]) coeffs[j] = tail;
  }
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial tau(const Word& w, const BernoulliMeasure& mu) {
  auto result = RationalPolynomial::monomial(hole_measure(w, mu), w.size());
  result += one_minus_z() * weighted_autocorr_poly(w, mu);
  return result;
}

RationalPolynomial tau_prime_form(std::size_t r, const Rational& m) {
  if (r < 2) throw InvalidArgument("prime-form polynomials need r >= 2");
  if (sgn(m) <= 0) throw InvalidArgument("prime-form polynomials need m > 0");
  auto result = RationalPolynomial::monomial(m, r);
  result += one_minus_z();
  return result;
}

RationalPolynomial tau_bar(std::size_t r, const Rational& p) {
  if (r < 2) throw InvalidArgument("tau_bar needs r >= 2");
  if (sgn(p) <= 0 || p >= 1) throw InvalidArgument("tau_bar needs 0 < p < 1");
  return tau_prime_form(r, pow(p, r - 1) * (1 - p));
}

MarkovAutocorrelation markov_autocorr_poly(const Word& w, const MarkovChain& mc) {
  require_alphabet(w, 2);
  const auto n = w.size();
  const auto c = autocorrelation(w);
  std::vector<Rational> coeffs(n);
  // prod_{i=1}^{j} pi(w_{n-i-1}, w_{n-i}): transitions inside the last j+1 letters.
  Rational tail = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0) tail *= mc.transition(w[n - j - 1], w[n - j]);
    if (c[j]) coeffs[j] = tail;
  }
  RationalPolynomial full(coeffs);
  coeffs.back() = 0;
  return {std::move(full), RationalPolynomial(std::move(coeffs))};
}

RationalPolynomial tau_markov(const Word& w, const MarkovChain& mc) {
  const auto weights = markov_weights(w, mc);
  const auto r = w.size();
  const Rational& chi = mc.chi();
  const bool closed = w.front() == w.back();

  RationalPolynomial head{mc.transition(w.back(), w.front()), closed ? Rational(-chi) : Rational(0)};
  auto result = RationalPolynomial::monomial(weights.mu_pi, r) * head;
  const RationalPolynomial one_minus_chi_z{Rational(1), Rational(-chi)};
  result += one_minus_z() * one_minus_chi_z * markov_autocorr_poly(w, mc).full;

  if (result.degree() > static_cast<int>(r))
    throw std::logic_error("tau_markov: the z^{r+1} terms failed to cancel");
  if (result != tau_markov_split(w, mc))
    throw std::logic_error("tau_markov: the two constructions disagree");
  return result;
}

RationalPolynomial tau_markov_split(const Word& w, const MarkovChain& mc) {
  const auto weights = markov_weights(w, mc);
  const auto r = w.size();
  const Rational& chi = mc.chi();

  auto result = RationalPolynomial::monomial(weights.mu_tilde, r);
  const RationalPolynomial one_minus_chi_z{Rational(1), Rational(-chi)};
  result += one_minus_z() * one_minus_chi_z * markov_autocorr_poly(w, mc).reduced;
  if (w.front() == w.back()) {
    RationalPolynomial tail{Rational(1), Rational(-(1 + chi))};
    result += tail.shifted(r - 1) * weights.mu_pi;
  }
  return result;
}

} // namespace escrate
