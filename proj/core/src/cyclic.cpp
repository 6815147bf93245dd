#include "puiseux/cyclic.hpp"

#include <algorithm>
#include <optional>

#include "puiseux/error.hpp"
#include "puiseux/numerical_semigroup.hpp"

namespace puiseux {

namespace {

void require(const Rational& x, std::uint64_t cap) {
  if (x.sign() < 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "monoid elements are nonnegative, got " + x.str());
  }
  if (cap == 0) throw Error(ErrorCode::PreconditionViolated, "exponent cap must be positive");
}

/// Whether every prime factor of d(x) divides d(r).
bool denominator_supported(const Rational& x, const Integer& b) {
  Integer rest = x.den();
  while (rest != 1) {
    Integer g = gcd(rest, b);
    if (g == 1) return false;
    rest /= g;
  }
  return true;
}

/// Largest t with r^t <= x, for r > 1.
std::uint64_t intrinsic_bound(const PositiveRational& r, const Rational& x) {
  std::uint64_t t = 0;
  Rational power = r.value();
  while (power <= x) {
    ++t;
    power *= r.value();
  }
  return t;
}

/// sum c_t a^t b^(T-t) = x b^T over t = 1..T, generators listed by t.
struct ScaledProblem {
  NumericalSemigroup semigroup;
  std::vector<std::size_t> slot_of_exponent;  // t -> index in sorted generators
  Integer target;
};

std::optional<ScaledProblem> scale(const PositiveRational& r, const Rational& x,
                                   std::uint64_t top) {
  const Integer a = r.num();
  const Integer b = r.den();
  Rational target = x * Rational(pow(b, top));
  if (!target.is_integer()) return std::nullopt;
  std::vector<Integer> gens;
  for (std::uint64_t t = 1; t <= top; ++t) gens.push_back(pow(a, t) * pow(b, top - t));
  NumericalSemigroup semigroup(gens);
  std::vector<std::size_t> slot(top + 1);
  const auto& sorted = semigroup.generators();
  for (std::uint64_t t = 1; t <= top; ++t) {
    slot[t] = static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), gens[t - 1]) - sorted.begin());
  }
  return ScaledProblem{std::move(semigroup), std::move(slot), target.num()};
}

Factorization to_factorization(const PositiveRational& r, const ScaledProblem& problem,
                               const Representation& rep) {
  Factorization z;
  for (std::size_t t = 1; t < problem.slot_of_exponent.size(); ++t) {
    z.add(pow(r, t), rep[problem.slot_of_exponent[t]]);
  }
  return z;
}

}  // namespace

CyclicMembership cyclic_contains(const PositiveRational& r, const Rational& x,
                                 std::uint64_t cap) {
  require(x, cap);
  if (x.is_zero()) return cyclic::Member{};
  const Integer a = r.num();
  const Integer b = r.den();
  if (!denominator_supported(x, b)) {
    return cyclic::NonMember{"denominator-support", "d(x) = " + x.den().get_str() +
                                                        " has a prime factor not dividing d(r) = " +
                                                        b.get_str()};
  }
  if (a == 1) {
    // Every c / b^t lies in <(1/b)^t>, so support alone decides.
    Factorization witness;
    if (b == 1) {
      witness.add(r, x.num());
      return cyclic::Member{std::move(witness)};
    }
    std::uint64_t t = 1;
    Integer power = b;
    while (!mpz_divisible_p(power.get_mpz_t(), x.den().get_mpz_t())) {
      power *= b;
      ++t;
    }
    witness.add(pow(r, t), x.num() * (power / x.den()));
    return cyclic::Member{std::move(witness)};
  }
  if (!mpz_divisible_p(x.num().get_mpz_t(), a.get_mpz_t())) {
    return cyclic::NonMember{"numerator-divisibility",
                             "n(r) = " + a.get_str() + " does not divide n(x) = " +
                                 x.num().get_str()};
  }
  if (b == 1) {
    Factorization witness;
    witness.add(r, x.num() / a);
    return cyclic::Member{std::move(witness)};
  }
  const bool above_one = r.value() > Rational(1);
  const std::uint64_t top = above_one ? intrinsic_bound(r, x) : cap;
  auto exhausted = [&]() -> CyclicMembership {
    if (above_one) {
      return cyclic::NonMember{"exhaustive", "no combination of the powers r^t <= x (t <= " +
                                                 std::to_string(top) + ")"};
    }
    return cyclic::UnknownUpTo{cap};
  };
  if (top == 0) return exhausted();
  auto problem = scale(r, x, top);
  if (!problem) return exhausted();
  auto rep = find_representation(problem->semigroup, problem->target);
  if (!rep) return exhausted();
  return cyclic::Member{to_factorization(r, *problem, *rep)};
}

std::vector<Factorization> cyclic_factorizations(const PositiveRational& r, const Rational& x,
                                                 std::uint64_t cap) {
  require(x, cap);
  const Integer a = r.num();
  const Integer b = r.den();
  if (a == 1 && b != 1) {
    throw Error(ErrorCode::NotAtomic, "<r^t> with n(r) = 1 has no atoms (r = " + r.str() + ")");
  }
  if (x.is_zero()) return {Factorization()};
  if (b == 1) {
    // Integer r: <r^t> = <r>, whose single atom is r.
    if (!x.is_integer() || !mpz_divisible_p(x.num().get_mpz_t(), a.get_mpz_t())) return {};
    Factorization z;
    z.add(r, x.num() / a);
    return {z};
  }
  const std::uint64_t top =
      r.value() > Rational(1) ? std::min(cap, intrinsic_bound(r, x)) : cap;
  if (top == 0) return {};
  auto problem = scale(r, x, top);
  if (!problem) return {};
  auto reps = representations(problem->semigroup, problem->target);

  // Reorder by exponent, highest exponent most significant.
  std::vector<std::vector<Integer>> by_exponent;
  by_exponent.reserve(reps.size());
  for (const auto& rep : reps) {
    std::vector<Integer> row;
    for (std::uint64_t t = top; t >= 1; --t) row.push_back(rep[problem->slot_of_exponent[t]]);
    by_exponent.push_back(std::move(row));
  }
  std::vector<std::size_t> order(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return by_exponent[i] < by_exponent[j]; });

  std::vector<Factorization> out;
  out.reserve(reps.size());
  for (auto i : order) out.push_back(to_factorization(r, *problem, reps[i]));
  return out;
}

Factorization cyclic_trade(const PositiveRational& r, const Factorization& z, std::uint64_t t,
                           TradeDirection direction) {
  if (t == 0) throw Error(ErrorCode::PreconditionViolated, "trade exponent must be positive");
  const PositiveRational low = pow(r, t);
  const PositiveRational high = pow(r, t + 1);
  Factorization out = z;
  if (direction == TradeDirection::Up) {
    out.remove(low, r.num());
    out.add(high, r.den());
  } else {
    out.remove(high, r.den());
    out.add(low, r.num());
  }
  return out;
}

}  // namespace puiseux
