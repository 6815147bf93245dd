#include "puiseux/rational.hpp"

#include <cctype>

#include "puiseux/error.hpp"
#include "puiseux/primes.hpp"

namespace puiseux {

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw Error(ErrorCode::ParseError,
                "not an integer: '" + std::string(text) + "'");
  }
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  return Integer(owned, 10);
}

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorCode::PreconditionViolated,
                "integer out of 64-bit range: " + value.get_str());
  }
  return value.get_si();
}

std::uint64_t to_uint64(const Integer& value) {
  if (sgn(value) < 0 || !value.fits_ulong_p()) {
    throw Error(ErrorCode::PreconditionViolated,
                "integer out of unsigned 64-bit range: " + value.get_str());
  }
  return value.get_ui();
}

Integer pow(const Integer& base, std::uint64_t exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorCode::PreconditionViolated, "zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw Error(ErrorCode::ParseError,
                "bad denominator in '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) {
    throw Error(ErrorCode::ParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

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
  if (other.is_zero()) {
    throw Error(ErrorCode::PreconditionViolated, "division by zero");
  }
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational result;
  result.value_ = -value_;
  return result;
}

std::string Rational::str() const {
  if (is_zero()) return "0";
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator+(Rational a, const Rational& b) { return a += b; }
Rational operator-(Rational a, const Rational& b) { return a -= b; }
Rational operator*(Rational a, const Rational& b) { return a *= b; }
Rational operator/(Rational a, const Rational& b) { return a /= b; }

Rational abs(const Rational& value) {
  return value.sign() < 0 ? -value : value;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  return Rational(pow(base.num(), exponent), pow(base.den(), exponent));
}

std::ostream& operator<<(std::ostream& out, const Rational& value) {
  return out << value.str();
}

PositiveRational PositiveRational::make(const Integer& num, const Integer& den) {
  if (sgn(num) <= 0 || sgn(den) <= 0) {
    throw Error(ErrorCode::NonPositive, "positive rational needs n >= 1 and d >= 1, got " +
                                            num.get_str() + "/" + den.get_str());
  }
  return PositiveRational(Rational(num, den));
}

PositiveRational::PositiveRational(const Rational& value) : value_(value) {
  if (value_.sign() <= 0) {
    throw Error(ErrorCode::NonPositive, "expected a positive rational, got " + value_.str());
  }
}

PositiveRational PositiveRational::parse(std::string_view text) {
  return PositiveRational(Rational::parse(text));
}

PositiveRational pow(const PositiveRational& base, std::uint64_t exponent) {
  return PositiveRational(pow(base.value(), exponent));
}

PositiveRational inverse(const PositiveRational& value) {
  return PositiveRational::make(value.den(), value.num());
}

std::ostream& operator<<(std::ostream& out, const PositiveRational& value) {
  return out << value.str();
}

std::int64_t ExtendedInt::value() const {
  if (!value_) {
    throw Error(ErrorCode::PreconditionViolated, "valuation is +infinity");
  }
  return *value_;
}

std::string ExtendedInt::str() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

std::ostream& operator<<(std::ostream& out, const ExtendedInt& value) {
  return out << value.str();
}

std::int64_t multiplicity(const Integer& n, const Integer& p) {
  if (n == 0) {
    throw Error(ErrorCode::PreconditionViolated, "multiplicity of zero");
  }
  Integer rest;
  return static_cast<std::int64_t>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

ExtendedInt p_adic_valuation(const Integer& p, const Rational& r) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, p.get_str() + " is not prime");
  }
  if (r.is_zero()) return ExtendedInt::infinity();
  Integer num = r.num();
  if (sgn(num) < 0) num = -num;
  return multiplicity(num, p) - multiplicity(r.den(), p);
}

}  // namespace puiseux
