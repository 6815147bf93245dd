#include "puiseux/sequences.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "puiseux/error.hpp"
#include "puiseux/primes.hpp"

namespace puiseux {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// (s, e) with v = s^e for a prime s; (1, 0) for v = 1.
std::optional<std::pair<Integer, std::uint64_t>> as_prime_power(const Integer& v) {
  if (v == 1) return std::make_pair(Integer(1), std::uint64_t{0});
  if (v < 2) return std::nullopt;
  Integer s = smallest_prime_factor(v);
  Integer rest;
  auto e = mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
  if (rest != 1) return std::nullopt;
  return std::make_pair(s, static_cast<std::uint64_t>(e));
}

/// Merges a candidate base into an accumulated one (1 means "any").
bool merge_base(Integer& acc, const Integer& base) {
  if (base == 1) return true;
  if (acc == 1) {
    acc = base;
    return true;
  }
  return acc == base;
}

}  // namespace

IntSeq::IntSeq(Form form) : form_(std::move(form)) {}

IntSeq IntSeq::explicit_values(std::vector<Integer> prefix, std::optional<IntSeq> tail) {
  seq::Explicit e{std::move(prefix), nullptr};
  if (tail) e.tail = std::make_shared<const IntSeq>(std::move(*tail));
  return IntSeq(std::move(e));
}

Integer IntSeq::at(std::size_t n) const {
  if (n == 0) throw Error(ErrorCode::BadIndex, "sequence indices start at 1");
  const Integer index(static_cast<unsigned long>(n));
  return std::visit(
      overloaded{
          [](const seq::Constant& s) { return s.c; },
          [&](const seq::Geometric& s) { return Integer(s.c * pow(s.q, n)); },
          [&](const seq::Power& s) { return pow(s.q, n); },
          [&](const seq::Affine& s) { return Integer(s.a * index + s.b); },
          [&](const seq::AffineExponent& s) {
            Integer e = s.a * index + s.b;
            if (sgn(e) < 0) {
              throw Error(ErrorCode::PreconditionViolated,
                          "negative exponent at index " + std::to_string(n));
            }
            return pow(s.q, to_uint64(e));
          },
          [&](const seq::Explicit& s) {
            if (n <= s.prefix.size()) return s.prefix[n - 1];
            if (!s.tail) {
              throw Error(ErrorCode::BadIndex, "index " + std::to_string(n) +
                                                   " past an explicit list of " +
                                                   std::to_string(s.prefix.size()));
            }
            return s.tail->at(n);
          },
      },
      form_);
}

std::optional<std::size_t> IntSeq::length() const {
  if (const auto* e = std::get_if<seq::Explicit>(&form_)) {
    if (!e->tail) return e->prefix.size();
    return e->tail->length();
  }
  return std::nullopt;
}

std::size_t IntSeq::tail_start() const {
  if (const auto* e = std::get_if<seq::Explicit>(&form_)) {
    if (!e->tail) return e->prefix.size() + 1;
    return std::max(e->prefix.size() + 1, e->tail->tail_start());
  }
  return 1;
}

const IntSeq& IntSeq::tail_form() const {
  if (const auto* e = std::get_if<seq::Explicit>(&form_); e && e->tail) {
    return e->tail->tail_form();
  }
  return *this;
}

std::optional<bool> IntSeq::is_bounded() const {
  return std::visit(
      overloaded{
          [](const seq::Constant&) -> std::optional<bool> { return true; },
          [](const seq::Geometric& s) -> std::optional<bool> {
            return s.c == 0 || abs(s.q) <= 1;
          },
          [](const seq::Power& s) -> std::optional<bool> { return abs(s.q) <= 1; },
          [](const seq::Affine& s) -> std::optional<bool> { return s.a == 0; },
          [](const seq::AffineExponent& s) -> std::optional<bool> {
            if (s.a == 0 || abs(s.q) <= 1) return true;
            if (sgn(s.a) > 0) return false;
            return std::nullopt;
          },
          [](const seq::Explicit& s) -> std::optional<bool> {
            if (!s.tail) return true;
            return s.tail->is_bounded();
          },
      },
      form_);
}

std::optional<bool> IntSeq::is_strictly_increasing() const {
  return std::visit(
      overloaded{
          [](const seq::Constant&) -> std::optional<bool> { return false; },
          [](const seq::Geometric& s) -> std::optional<bool> {
            if (sgn(s.c) > 0 && s.q >= 2) return true;
            if (sgn(s.c) > 0 && sgn(s.q) >= 0) return false;
            return std::nullopt;
          },
          [](const seq::Power& s) -> std::optional<bool> {
            if (s.q >= 2) return true;
            if (sgn(s.q) >= 0) return false;
            return std::nullopt;
          },
          [](const seq::Affine& s) -> std::optional<bool> { return sgn(s.a) > 0; },
          [](const seq::AffineExponent& s) -> std::optional<bool> {
            if (s.q >= 2 && sgn(s.a) > 0) return true;
            if (s.a == 0 || s.q == 1) return false;
            return std::nullopt;
          },
          [](const seq::Explicit& s) -> std::optional<bool> {
            for (std::size_t i = 1; i < s.prefix.size(); ++i) {
              if (s.prefix[i] <= s.prefix[i - 1]) return false;
            }
            if (!s.tail) return true;
            if (!s.prefix.empty() && s.tail->at(s.prefix.size() + 1) <= s.prefix.back()) {
              return false;
            }
            return s.tail->is_strictly_increasing();
          },
      },
      form_);
}

std::optional<Rational> IntSeq::tail_ratio() const {
  return std::visit(
      overloaded{
          [](const seq::Constant& s) -> std::optional<Rational> {
            if (s.c == 0) return std::nullopt;
            return Rational(1);
          },
          [](const seq::Geometric& s) -> std::optional<Rational> {
            if (s.c == 0 || s.q == 0) return std::nullopt;
            return Rational(s.q);
          },
          [](const seq::Power& s) -> std::optional<Rational> {
            if (s.q == 0) return std::nullopt;
            return Rational(s.q);
          },
          [](const seq::Affine&) -> std::optional<Rational> { return std::nullopt; },
          [](const seq::AffineExponent& s) -> std::optional<Rational> {
            if (s.q == 0 || sgn(s.a) < 0) return std::nullopt;
            return Rational(pow(s.q, to_uint64(s.a)));
          },
          [](const seq::Explicit&) -> std::optional<Rational> { return std::nullopt; },
      },
      tail_form().form_);
}

bool IntSeq::tail_differences_nondecreasing() const {
  return std::visit(
      overloaded{
          [](const seq::Constant&) { return true; },
          [](const seq::Geometric& s) { return sgn(s.c) >= 0 && s.q >= 1; },
          [](const seq::Power& s) { return s.q >= 1; },
          [](const seq::Affine&) { return true; },
          [](const seq::AffineExponent& s) { return s.q >= 1 && sgn(s.a) >= 0; },
          [](const seq::Explicit&) { return false; },
      },
      tail_form().form_);
}

std::optional<Integer> IntSeq::prime_power_base() const {
  Integer base = 1;
  auto merge_value = [&](const Integer& v) {
    auto pp = as_prime_power(v);
    return pp && merge_base(base, pp->first);
  };
  bool ok = std::visit(
      overloaded{
          [&](const seq::Constant& s) { return merge_value(s.c); },
          [&](const seq::Geometric& s) { return merge_value(s.q) && merge_value(s.c); },
          [&](const seq::Power& s) { return merge_value(s.q); },
          [](const seq::Affine&) { return false; },
          [&](const seq::AffineExponent& s) { return merge_value(s.q); },
          [&](const seq::Explicit& s) {
            for (const auto& v : s.prefix) {
              if (!merge_value(v)) return false;
            }
            if (!s.tail) return true;
            auto tail_base = s.tail->prime_power_base();
            if (!tail_base) {
              // A tail of ones has no base but is still fine.
              const auto* ones = std::get_if<seq::Constant>(&s.tail->tail_form().form());
              return ones != nullptr && ones->c == 1;
            }
            return merge_base(base, *tail_base);
          },
      },
      form_);
  if (!ok || base == 1) return std::nullopt;
  return base;
}

Rational term(const RationalSeq& sequence, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadIndex, "sequence indices start at 1");
  return std::visit(
      overloaded{
          [&](const rseq::CalkinWilf&) {
            return Rational(fusc(n), fusc(n + 1));
          },
          [](const rseq::ConstantValue& s) { return s.value; },
          [&](const rseq::ExplicitValues& s) {
            if (n > s.values.size()) {
              throw Error(ErrorCode::BadIndex, "index " + std::to_string(n) +
                                                   " past an explicit list of " +
                                                   std::to_string(s.values.size()));
            }
            return s.values[n - 1];
          },
      },
      sequence);
}

Integer fusc(std::uint64_t n) {
  Integer a = 1;
  Integer b = 0;
  while (n != 0) {
    if (n & 1U) {
      b += a;
    } else {
      a += b;
    }
    n >>= 1U;
  }
  return b;
}

std::uint64_t partition_prime(std::uint64_t j, std::uint64_t t) {
  if (j == 0 || j > 40 || t == 0) {
    throw Error(ErrorCode::BadIndex, "partition class and member indices start at 1");
  }
  return nth_prime((std::uint64_t{1} << (j - 1)) * (2 * t - 1));
}

void validate(const PrimeStream& stream) {
  std::visit(overloaded{
                 [](const primes::All&) {},
                 [](const primes::Residue& s) {
                   if (s.modulus == 0 || s.residue >= s.modulus ||
                       std::gcd(s.modulus, s.residue) != 1) {
                     throw Error(ErrorCode::PreconditionViolated,
                                 "residue class " + std::to_string(s.residue) + " mod " +
                                     std::to_string(s.modulus) +
                                     " does not hold infinitely many primes");
                   }
                 },
                 [](const primes::PartitionClass& s) {
                   if (s.j == 0 || s.j > 40) {
                     throw Error(ErrorCode::PreconditionViolated,
                                 "partition class must lie in 1..40");
                   }
                 },
             },
             stream);
}

std::uint64_t nth(const PrimeStream& stream, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadIndex, "prime indices start at 1");
  return std::visit(overloaded{
                        [&](const primes::All&) { return nth_prime(n); },
                        [&](const primes::Residue& s) {
                          std::size_t seen = 0;
                          for (std::size_t i = 1;; ++i) {
                            std::uint64_t p = nth_prime(i);
                            if (p % s.modulus == s.residue && ++seen == n) return p;
                          }
                        },
                        [&](const primes::PartitionClass& s) {
                          return partition_prime(s.j, n);
                        },
                    },
                    stream);
}

bool contains(const PrimeStream& stream, std::uint64_t p) {
  return std::visit(
      overloaded{
          [&](const primes::All&) { return is_prime(p); },
          [&](const primes::Residue& s) { return is_prime(p) && p % s.modulus == s.residue; },
          [&](const primes::PartitionClass& s) {
            std::size_t index = prime_index(p);
            return index != 0 &&
                   static_cast<std::uint64_t>(std::countr_zero(index)) + 1 == s.j;
          },
      },
      stream);
}

}  // namespace puiseux
