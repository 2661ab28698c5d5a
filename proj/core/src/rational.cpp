#include "escrate/rational.hpp"

#include "escrate/errors.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace escrate {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("invalid number '" + std::string(whole) + "'");
  Integer value(std::string(s), 10);
  return negative ? Integer(-value) : value;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_integer(s.substr(e + 1), whole).get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto int_part = s.substr(0, dot);
    auto frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
      throw ParseError("invalid number '" + std::string(whole) + "'");
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw ParseError("invalid number '" + std::string(whole) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw ParseError("invalid number '" + std::string(whole) + "'");
    digits = std::string(s);
  }
  Rational value(Integer(digits, 10));
  value *= decimal_power(exponent);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text, text);
  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

double log_rational(const Rational& q) {
  if (sgn(q) <= 0) throw InvalidArgument("logarithm of a non-positive rational");
  // Near 1 the mantissa/exponent split cancels; log1p keeps relative accuracy.
  Rational offset = q - 1;
  if (abs(offset) < Rational(1, 2)) return std::log1p(offset.get_d());
  long num_exp = 0;
  long den_exp = 0;
  double num_mant = mpz_get_d_2exp(&num_exp, q.get_num_mpz_t());
  double den_mant = mpz_get_d_2exp(&den_exp, q.get_den_mpz_t());
  return std::log(num_mant / den_mant) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

Rational pow(const Rational& base, unsigned long exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational result(num, den);
  result.canonicalize();
  return result;
}

Rational ratio(long n, long d) {
  if (d == 0) throw InvalidArgument("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational decimal_power(long exponent) {
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(ten_pow);
  Rational q(Integer(1), ten_pow);
  q.canonicalize();
  return q;
}

int sign(const Rational& q) { return sgn(q); }

} // namespace escrate
