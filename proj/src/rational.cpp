#include "omfam/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace omfam {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw ParseError("not a number: '" + std::string(whole) + "'");
  Integer v(std::string(body), 10);
  return negative ? Integer(-v) : v;
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("bad denominator in '" + std::string(text) + "'");
    const Integer den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  // Decimal with optional exponent, read exactly.
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    const Integer ev = parse_integer(text.substr(e + 1), text);
    if (!ev.fits_slong_p() || ev > 100000 || ev < -100000) throw ParseError("exponent out of range: '" + std::string(text) + "'");
    exponent = ev.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mantissa.substr(0, dot);
    std::string_view fp = mantissa.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw ParseError("not a number: '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    fraction_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) throw ParseError("not a number: '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  Integer num(digits, 10);
  if (negative) num = -num;
  const long shift = exponent - fraction_digits;
  if (shift >= 0) return Rational(Integer(num * pow10(static_cast<unsigned long>(shift))));
  return Rational(num, pow10(static_cast<unsigned long>(-shift)));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(q);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return Rational(r);
}

Rational Rational::pow(long exponent) const {
  if (exponent == 0) return Rational(1);
  const Rational base = exponent < 0 ? inverse() : *this;
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.value_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.value_.get_den_mpz_t(), e);
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

}  // namespace omfam
