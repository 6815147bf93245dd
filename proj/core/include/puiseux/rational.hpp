#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace puiseux {

/// Unbounded signed integer. Every count, numerator and denominator in the
/// library is carried in this type; denominators such as p^(2^(n+1)) leave
/// any fixed-width range after a handful of indices.
using Integer = mpz_class;

/// Parses a decimal integer token; throws ParseError.
Integer parse_integer(std::string_view text);

/// Converts to a machine integer; throws PreconditionViolated on overflow.
std::int64_t to_int64(const Integer& value);
std::uint64_t to_uint64(const Integer& value);

Integer pow(const Integer& base, std::uint64_t exponent);

/// Exact rational number in lowest terms with a positive denominator.
///
/// Monoid elements are nonnegative Rationals: zero stays an ordinary value
/// here, and the strictly positive case gets its own type below.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  /// Throws PreconditionViolated when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "n/d" (unreduced allowed, optional leading '-') or "n".
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Largest integer not exceeding the value.
  Integer floor() const;
  /// Smallest integer not below the value.
  Integer ceil() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws PreconditionViolated on division by zero.
  Rational& operator/=(const Rational& other);

  Rational operator-() const;

  /// "n/d" in lowest terms; "0" for zero. Integers keep the "/1".
  std::string str() const;

  const mpq_class& raw() const { return value_; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

Rational operator+(Rational a, const Rational& b);
Rational operator-(Rational a, const Rational& b);
Rational operator*(Rational a, const Rational& b);
Rational operator/(Rational a, const Rational& b);

Rational abs(const Rational& value);
Rational pow(const Rational& base, std::uint64_t exponent);

std::ostream& operator<<(std::ostream& out, const Rational& value);

/// A reduced fraction n/d with n, d >= 1. Generators and atoms are always
/// positive, so they carry this type; it converts implicitly to Rational
/// for mixed arithmetic.
class PositiveRational {
 public:
  /// Throws NonPositive if num <= 0 or den <= 0.
  static PositiveRational make(const Integer& num, const Integer& den);
  /// Throws NonPositive unless value > 0.
  explicit PositiveRational(const Rational& value);
  /// Throws ParseError or NonPositive.
  static PositiveRational parse(std::string_view text);

  Integer num() const { return value_.num(); }
  Integer den() const { return value_.den(); }

  const Rational& value() const { return value_; }
  operator const Rational&() const { return value_; }  // NOLINT

  std::string str() const { return value_.str(); }

  friend PositiveRational operator+(const PositiveRational& a,
                                    const PositiveRational& b) {
    return PositiveRational(a.value_ + b.value_);
  }
  friend PositiveRational operator*(const PositiveRational& a,
                                    const PositiveRational& b) {
    return PositiveRational(a.value_ * b.value_);
  }
  friend PositiveRational operator/(const PositiveRational& a,
                                    const PositiveRational& b) {
    return PositiveRational(a.value_ / b.value_);
  }
  friend bool operator==(const PositiveRational& a, const PositiveRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const PositiveRational& a,
                                          const PositiveRational& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Rational value_;
};

PositiveRational pow(const PositiveRational& base, std::uint64_t exponent);
PositiveRational inverse(const PositiveRational& value);

std::ostream& operator<<(std::ostream& out, const PositiveRational& value);

/// An integer or +infinity; the codomain of p-adic valuations.
class ExtendedInt {
 public:
  ExtendedInt(std::int64_t value) : value_(value) {}  // NOLINT
  static ExtendedInt infinity() { return ExtendedInt(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws PreconditionViolated for +infinity.
  std::int64_t value() const;

  friend ExtendedInt operator+(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtendedInt(*a.value_ + *b.value_);
  }
  friend bool operator==(const ExtendedInt& a, const ExtendedInt& b) = default;
  friend std::strong_ordering operator<=>(const ExtendedInt& a,
                                          const ExtendedInt& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
  }

  std::string str() const;

 private:
  ExtendedInt() = default;
  std::optional<std::int64_t> value_;
};

std::ostream& operator<<(std::ostream& out, const ExtendedInt& value);

/// Exponent of the largest power of `p` dividing the nonzero integer `n`.
/// `p` must be at least 2.
std::int64_t multiplicity(const Integer& n, const Integer& p);

/// v_p(r) = v_p(n(r)) - v_p(d(r)); +infinity for zero. Throws NotPrime.
ExtendedInt p_adic_valuation(const Integer& p, const Rational& r);

}  // namespace puiseux
