#pragma once

#include <cstddef>
#include <cstdint>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Primality: deterministic Miller-Rabin with the first twelve prime bases
/// below 2^64 (exact on that range); Baillie-PSW with extra Miller-Rabin
/// rounds above it.
bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// The n-th prime, 1-based: nth_prime(1) == 2. Thread-safe; backed by a
/// shared sieve that grows on demand.
std::uint64_t nth_prime(std::size_t n);

/// The n-th odd prime, 1-based: nth_odd_prime(1) == 3.
std::uint64_t nth_odd_prime(std::size_t n);

/// 1-based index of the prime `p` among all primes; 0 if `p` is not prime.
std::size_t prime_index(std::uint64_t p);

/// Smallest prime factor of n >= 2, by trial division.
Integer smallest_prime_factor(const Integer& n);

struct ProgressionPrime {
  std::uint64_t k;
  Integer prime;
};

/// Least k in [1, max_steps] with first + k*step prime.
/// Throws BadProgression when gcd(first, step) != 1 and NotFoundWithinLimit
/// when none of the first max_steps terms is prime.
ProgressionPrime prime_in_progression(const Integer& first, const Integer& step,
                                      std::uint64_t max_steps);

}  // namespace puiseux
