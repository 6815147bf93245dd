#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "puiseux/fg_monoid.hpp"
#include "puiseux/rational.hpp"
#include "puiseux/sequences.hpp"

namespace puiseux {

/// Closed-form descriptors of infinite generating sequences. Indices are
/// 1-based throughout; generator_at(spec, n) is the n-th generator.
namespace family {

/// 1/q^n for a prime q.
struct PowerDenominator {
  Integer q;
};
/// floor(p/2)/p over all primes p, ascending.
struct HalfPrime {};
/// 1/(2^n p_n), p_n the n-th odd prime.
struct TwoAdicOddPrime {};
/// 1/p over the primes of a stream.
struct ElementaryPrimary {
  PrimeStream primes;
};
/// 1/(p_{s_1}...p_{s_k}) over k-subsets {s_1 < ... < s_k} in colex order.
struct ElementaryKPrimary {
  std::uint64_t k;
};
/// prod_{i=1..k} 1/p_{(n-1)k+i}: consecutive blocks of k primes.
struct PartitionedKPrimary {
  std::uint64_t k;
};
/// sum_{s in S} 1/p_s over k-subsets S in colex order.
struct SumKPrimary {
  std::uint64_t k;
};
/// numerators(n) / p^exponents(n); exponents strictly increasing.
struct PAdic {
  Integer p;
  IntSeq numerators;
  IntSeq exponents;
};
/// Interleaved (p^(2^n) - 1)/p^(2^(n+1)) and (p^(2^n) + 1)/p^(2^(n+1)) for
/// an odd prime p: generator 2n-1 is the minus term, 2n the plus term.
struct SquaredPowerPair {
  Integer p;
};
/// r^n.
struct Cyclic {
  PositiveRational r;
};
/// r_i^m for every i and m >= 1, interleaved: index n gives
/// r_{(n-1) mod k + 1}^{(n-1) div k + 1}.
struct GeneralizedCyclic {
  std::vector<PositiveRational> rs;
};
/// floor(p/2)/p and (p - floor(p/2))/p over odd primes, interleaved.
struct BfNotFf {};
/// A finite generating list.
struct ExplicitList {
  FgMonoid monoid;
};

}  // namespace family

using FamilySpec =
    std::variant<family::PowerDenominator, family::HalfPrime, family::TwoAdicOddPrime,
                 family::ElementaryPrimary, family::ElementaryKPrimary,
                 family::PartitionedKPrimary, family::SumKPrimary, family::PAdic,
                 family::SquaredPowerPair, family::Cyclic, family::GeneralizedCyclic,
                 family::BfNotFf, family::ExplicitList>;

/// The variant name as used in JSON ("PowerDenominator", ...).
std::string_view family_name(const FamilySpec& spec);

/// Checks the variant's parameters: primality, k >= 1, strictly increasing
/// p-adic exponents, a nonempty explicit list, a valid prime stream.
/// Throws NotPrime, PreconditionViolated or HypothesisViolated.
void validate(const FamilySpec& spec);

/// The n-th generator (n >= 1). Throws BadIndex past an explicit list.
PositiveRational generator_at(const FamilySpec& spec, std::size_t n);

/// <generator_at(spec, 1..n)>; n = 0 gives the trivial monoid.
FgMonoid truncate(const FamilySpec& spec, std::size_t n);

/// The colex-rank-th k-subset of {1, 2, ...} (rank 1 is {1..k}), ascending.
std::vector<std::uint64_t> colex_subset(std::uint64_t k, std::uint64_t rank);

}  // namespace puiseux
