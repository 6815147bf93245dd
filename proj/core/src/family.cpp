#include "puiseux/family.hpp"

#include <algorithm>
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

void require_prime(const Integer& p, std::string_view what) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, std::string(what) + " " + p.get_str() + " is not prime");
  }
}

void require_k(std::uint64_t k) {
  if (k == 0 || k > 64) {
    throw Error(ErrorCode::PreconditionViolated, "k must lie in 1..64, got " + std::to_string(k));
  }
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer prime_at(std::uint64_t index) { return Integer(static_cast<unsigned long>(nth_prime(index))); }

}  // namespace

std::string_view family_name(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::PowerDenominator&) { return std::string_view("PowerDenominator"); },
          [](const family::HalfPrime&) { return std::string_view("HalfPrime"); },
          [](const family::TwoAdicOddPrime&) { return std::string_view("TwoAdicOddPrime"); },
          [](const family::ElementaryPrimary&) { return std::string_view("ElementaryPrimary"); },
          [](const family::ElementaryKPrimary&) {
            return std::string_view("ElementaryKPrimary");
          },
          [](const family::PartitionedKPrimary&) {
            return std::string_view("PartitionedKPrimary");
          },
          [](const family::SumKPrimary&) { return std::string_view("SumKPrimary"); },
          [](const family::PAdic&) { return std::string_view("PAdic"); },
          [](const family::SquaredPowerPair&) { return std::string_view("SquaredPowerPair"); },
          [](const family::Cyclic&) { return std::string_view("Cyclic"); },
          [](const family::GeneralizedCyclic&) {
            return std::string_view("GeneralizedCyclic");
          },
          [](const family::BfNotFf&) { return std::string_view("BfNotFf"); },
          [](const family::ExplicitList&) { return std::string_view("ExplicitList"); },
      },
      spec);
}

void validate(const FamilySpec& spec) {
  std::visit(overloaded{
                 [](const family::PowerDenominator& f) { require_prime(f.q, "q"); },
                 [](const family::ElementaryPrimary& f) { validate(f.primes); },
                 [](const family::ElementaryKPrimary& f) { require_k(f.k); },
                 [](const family::PartitionedKPrimary& f) { require_k(f.k); },
                 [](const family::SumKPrimary& f) { require_k(f.k); },
                 [](const family::PAdic& f) {
                   require_prime(f.p, "p");
                   if (f.exponents.is_strictly_increasing() != true) {
                     throw Error(ErrorCode::HypothesisViolated,
                                 "exponent sequence is not certifiably strictly increasing");
                   }
                 },
                 [](const family::SquaredPowerPair& f) {
                   require_prime(f.p, "p");
                   if (f.p == 2) {
                     throw Error(ErrorCode::PreconditionViolated, "p must be an odd prime");
                   }
                 },
                 [](const family::GeneralizedCyclic& f) {
                   if (f.rs.empty()) {
                     throw Error(ErrorCode::PreconditionViolated,
                                 "generalized cyclic family needs at least one base");
                   }
                 },
                 [](const family::ExplicitList& f) {
                   if (f.monoid.is_trivial()) {
                     throw Error(ErrorCode::PreconditionViolated, "explicit list is empty");
                   }
                 },
                 [](const auto&) {},
             },
             spec);
}

std::vector<std::uint64_t> colex_subset(std::uint64_t k, std::uint64_t rank) {
  require_k(k);
  if (rank == 0) throw Error(ErrorCode::BadIndex, "subset ranks start at 1");
  Integer rest(static_cast<unsigned long>(rank - 1));
  std::vector<std::uint64_t> out(k);
  for (std::uint64_t i = k; i >= 1; --i) {
    std::uint64_t c = i - 1;
    while (binomial(c + 1, i) <= rest) ++c;
    rest -= binomial(c, i);
    out[i - 1] = c + 1;
  }
  return out;
}

PositiveRational generator_at(const FamilySpec& spec, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadIndex, "generator indices start at 1");
  validate(spec);
  return std::visit(
      overloaded{
          [&](const family::PowerDenominator& f) {
            return PositiveRational::make(1, pow(f.q, n));
          },
          [&](const family::HalfPrime&) {
            Integer p = prime_at(n);
            return PositiveRational::make(p / 2, p);
          },
          [&](const family::TwoAdicOddPrime&) {
            Integer p(static_cast<unsigned long>(nth_odd_prime(n)));
            return PositiveRational::make(1, pow(Integer(2), n) * p);
          },
          [&](const family::ElementaryPrimary& f) {
            return PositiveRational::make(1, Integer(static_cast<unsigned long>(nth(f.primes, n))));
          },
          [&](const family::ElementaryKPrimary& f) {
            Integer den = 1;
            for (auto s : colex_subset(f.k, n)) den *= prime_at(s);
            return PositiveRational::make(1, den);
          },
          [&](const family::PartitionedKPrimary& f) {
            Integer den = 1;
            for (std::uint64_t i = 1; i <= f.k; ++i) den *= prime_at((n - 1) * f.k + i);
            return PositiveRational::make(1, den);
          },
          [&](const family::SumKPrimary& f) {
            Rational sum = 0;
            for (auto s : colex_subset(f.k, n)) sum += Rational(1, prime_at(s));
            return PositiveRational(sum);
          },
          [&](const family::PAdic& f) {
            Integer a = f.numerators.at(n);
            Integer e = f.exponents.at(n);
            if (sgn(e) >= 0) return PositiveRational::make(a, pow(f.p, to_uint64(e)));
            return PositiveRational::make(a * pow(f.p, to_uint64(-e)), 1);
          },
          [&](const family::SquaredPowerPair& f) {
            std::uint64_t t = (n + 1) / 2;
            if (t > 40) throw Error(ErrorCode::BadIndex, "index too large for p^(2^n)");
            Integer power = pow(f.p, std::uint64_t{1} << t);
            Integer num = n % 2 == 1 ? Integer(power - 1) : Integer(power + 1);
            return PositiveRational::make(num, power * power);
          },
          [&](const family::Cyclic& f) { return pow(f.r, n); },
          [&](const family::GeneralizedCyclic& f) {
            std::size_t k = f.rs.size();
            return pow(f.rs[(n - 1) % k], (n - 1) / k + 1);
          },
          [&](const family::BfNotFf&) {
            Integer p(static_cast<unsigned long>(nth_odd_prime((n + 1) / 2)));
            Integer half = p / 2;
            return PositiveRational::make(n % 2 == 1 ? half : Integer(p - half), p);
          },
          [&](const family::ExplicitList& f) {
            const auto& gens = f.monoid.generators();
            if (n > gens.size()) {
              throw Error(ErrorCode::BadIndex, "index " + std::to_string(n) +
                                                   " past an explicit list of " +
                                                   std::to_string(gens.size()));
            }
            return gens[n - 1];
          },
      },
      spec);
}

FgMonoid truncate(const FamilySpec& spec, std::size_t n) {
  std::vector<PositiveRational> gens;
  gens.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) gens.push_back(generator_at(spec, i));
  return FgMonoid(std::move(gens));
}

}  // namespace puiseux
