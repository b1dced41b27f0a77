#include "feq/rational.h"

#include <functional>
#include <stdexcept>
#include <utility>

namespace feq {

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  bool negative = false;
  std::size_t start = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    start = 1;
  }
  std::string body = s.substr(start);
  auto digits = [](const std::string& d) {
    return !d.empty() && d.find_first_not_of("0123456789") == std::string::npos;
  };
  Rational result;
  if (const auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw std::invalid_argument("bad rational literal: " + s);
    result = Rational(mpz_class(num), mpz_class(den));
  } else if (const auto dot = body.find('.'); dot != std::string::npos) {
    const std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if ((!whole.empty() && !digits(whole)) || (!frac.empty() && !digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw std::invalid_argument("bad decimal literal: " + s);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = Rational(mpz_class(whole.empty() ? "0" : whole) * scale +
                          mpz_class(frac.empty() ? "0" : frac),
                      scale);
  } else {
    if (!digits(body)) throw std::invalid_argument("bad integer literal: " + s);
    result = Rational(mpz_class(body), mpz_class(1));
  }
  return negative ? -result : result;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(value_.get_num_mpz_t()) || !mpz_perfect_square_p(value_.get_den_mpz_t()))
    return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), value_.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), value_.get_den_mpz_t());
  return Rational(num, den);
}

std::string Rational::to_string() const { return value_.get_str(); }

std::size_t Rational::hash() const { return std::hash<std::string>{}(to_string()); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational rational_gcd(const Rational& lhs, const Rational& rhs) {
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), lhs.value().get_num_mpz_t(), rhs.value().get_num_mpz_t());
  mpz_lcm(den.get_mpz_t(), lhs.value().get_den_mpz_t(), rhs.value().get_den_mpz_t());
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& out, const Rational& value) { return out << value.to_string(); }

}  // namespace feq
