#include "puiseux/primes.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <vector>

#include "puiseux/error.hpp"

namespace puiseux {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Primes found so far by an incremental sieve of Eratosthenes.
class PrimeTable {
 public:
  u64 nth(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (primes_.size() < n) grow();
    return primes_[n - 1];
  }

  std::size_t index_of(u64 p) {
    std::lock_guard lock(mutex_);
    while (primes_.empty() || primes_.back() < p) grow();
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) return 0;
    return static_cast<std::size_t>(it - primes_.begin()) + 1;
  }

 private:
  void grow() {
    u64 limit = std::max<u64>(1024, limit_ * 2);
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i * i <= limit; ++i) {
      if (composite[i]) continue;
      for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (u64 i = limit_ + 1; i <= limit; ++i) {
      if (i >= 2 && !composite[i]) primes_.push_back(i);
    }
    limit_ = limit;
  }

  std::mutex mutex_;
  std::vector<u64> primes_;
  u64 limit_ = 1;
};

PrimeTable& prime_table() {
  static PrimeTable table;
  return table;
}

}  // namespace

bool is_prime(std::uint64_t n) { return miller_rabin(n); }

bool is_prime(const Integer& n) {
  if (sgn(n) <= 0) return false;
  if (n.fits_ulong_p()) return miller_rabin(n.get_ui());
  // Beyond 64 bits: GMP's Baillie-PSW plus extra Miller-Rabin rounds. No
  // BPSW pseudoprime is known.
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::uint64_t nth_prime(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadIndex, "prime indices start at 1");
  return prime_table().nth(n);
}

std::uint64_t nth_odd_prime(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadIndex, "prime indices start at 1");
  return prime_table().nth(n + 1);
}

std::size_t prime_index(std::uint64_t p) {
  if (!is_prime(p)) return 0;
  return prime_table().index_of(p);
}

Integer smallest_prime_factor(const Integer& n) {
  if (n < 2) {
    throw Error(ErrorCode::PreconditionViolated,
                "no prime factor of " + n.get_str());
  }
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return d;
  }
  return n;
}

ProgressionPrime prime_in_progression(const Integer& first, const Integer& step,
                                      std::uint64_t max_steps) {
  if (sgn(first) <= 0 || sgn(step) <= 0 || max_steps == 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "progression needs positive first, step and max_steps");
  }
  if (gcd(first, step) != 1) {
    throw Error(ErrorCode::BadProgression,
                "gcd(" + first.get_str() + ", " + step.get_str() + ") != 1");
  }
  Integer term = first;
  for (std::uint64_t k = 1; k <= max_steps; ++k) {
    term += step;
    if (is_prime(term)) return {k, term};
  }
  throw Error(ErrorCode::NotFoundWithinLimit,
              "no prime among " + first.get_str() + " + k*" + step.get_str() +
                  " for k <= " + std::to_string(max_steps));
}

}  // namespace puiseux
