#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Closed-form integer sequences indexed from n = 1.
namespace seq {

/// c for every n.
struct Constant {
  Integer c;
};
/// c * q^n.
struct Geometric {
  Integer c;
  Integer q;
};
/// q^n.
struct Power {
  Integer q;
};
/// a*n + b.
struct Affine {
  Integer a;
  Integer b;
};
/// q^(a*n + b).
struct AffineExponent {
  Integer q;
  Integer a;
  Integer b;
};

}  // namespace seq

class IntSeq;

namespace seq {

/// A finite prefix, optionally continued by another sequence. Without a
/// tail the sequence is undefined past the prefix.
struct Explicit {
  std::vector<Integer> prefix;
  std::shared_ptr<const IntSeq> tail;
};

}  // namespace seq

class IntSeq {
 public:
  using Form = std::variant<seq::Constant, seq::Geometric, seq::Power, seq::Affine,
                            seq::AffineExponent, seq::Explicit>;

  IntSeq(Form form);  // NOLINT(google-explicit-constructor)

  static IntSeq constant(Integer c) { return IntSeq(seq::Constant{std::move(c)}); }
  static IntSeq geometric(Integer c, Integer q) {
    return IntSeq(seq::Geometric{std::move(c), std::move(q)});
  }
  static IntSeq power(Integer q) { return IntSeq(seq::Power{std::move(q)}); }
  static IntSeq affine(Integer a, Integer b) {
    return IntSeq(seq::Affine{std::move(a), std::move(b)});
  }
  static IntSeq affine_exponent(Integer q, Integer a, Integer b) {
    return IntSeq(seq::AffineExponent{std::move(q), std::move(a), std::move(b)});
  }
  static IntSeq explicit_values(std::vector<Integer> prefix,
                                std::optional<IntSeq> tail = std::nullopt);

  const Form& form() const { return form_; }

  /// The n-th term, n >= 1. Throws BadIndex past a tail-less prefix and
  /// PreconditionViolated when a closed form leaves the integers.
  Integer at(std::size_t n) const;

  /// Number of terms, or nullopt when infinite.
  std::optional<std::size_t> length() const;

  /// First index from which the closed-form tail governs the terms.
  std::size_t tail_start() const;

  /// yes/no when decidable from the closed form; nullopt otherwise.
  std::optional<bool> is_bounded() const;
  std::optional<bool> is_strictly_increasing() const;

  /// Constant ratio a(n+1)/a(n) for n >= tail_start(), when the tail is
  /// constant, geometric, power or affine-exponent.
  std::optional<Rational> tail_ratio() const;

  /// True when the tail's consecutive differences never decrease.
  bool tail_differences_nondecreasing() const;

  /// The prime s with every term a power of s (s^0 = 1 included), when the
  /// closed form shows one exists.
  std::optional<Integer> prime_power_base() const;

  /// The closed form that governs the terms from tail_start() on; the
  /// sequence itself when it has no explicit prefix.
  const IntSeq& tail_form() const;

 private:
  Form form_;
};

/// Sequences of rationals used as approximation targets.
namespace rseq {

/// fusc(n)/fusc(n+1): every positive rational exactly once.
struct CalkinWilf {};
struct ConstantValue {
  Rational value;
};
struct ExplicitValues {
  std::vector<Rational> values;
};

}  // namespace rseq

using RationalSeq = std::variant<rseq::CalkinWilf, rseq::ConstantValue, rseq::ExplicitValues>;

/// n-th term (n >= 1); throws BadIndex past an explicit list.
Rational term(const RationalSeq& sequence, std::size_t n);

/// Stern's diatomic sequence.
Integer fusc(std::uint64_t n);

/// Infinite sets of primes, enumerated increasingly.
namespace primes {

struct All {};
/// Primes congruent to `residue` modulo `modulus`; gcd(residue, modulus)
/// must be 1 so the class is infinite.
struct Residue {
  std::uint64_t modulus;
  std::uint64_t residue;
};
/// Class j >= 1 of the canonical partition: the n-th prime lies in class j
/// when n = 2^(j-1) * (2t - 1), as that class's t-th member.
struct PartitionClass {
  std::uint64_t j;
};

}  // namespace primes

using PrimeStream = std::variant<primes::All, primes::Residue, primes::PartitionClass>;

/// Throws PreconditionViolated for a finite or malformed stream.
void validate(const PrimeStream& stream);
std::uint64_t nth(const PrimeStream& stream, std::size_t n);
bool contains(const PrimeStream& stream, std::uint64_t p);

/// The t-th prime (1-based) of partition class j.
std::uint64_t partition_prime(std::uint64_t j, std::uint64_t t);

}  // namespace puiseux
