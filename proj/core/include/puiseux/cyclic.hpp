#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "puiseux/factorization.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

/// Membership in the multiplicatively cyclic monoid <r^t : t >= 1>.
namespace cyclic {

/// x as a sum of powers of r (the witness need not use atoms when r has
/// numerator 1).
struct Member {
  Factorization witness;
};
/// A proof that x is not in the monoid.
struct NonMember {
  std::string reason;
  std::string detail;
};
/// No representation with exponents up to `cap`; larger exponents were not
/// searched.
struct UnknownUpTo {
  std::uint64_t cap;
};

}  // namespace cyclic

using CyclicMembership = std::variant<cyclic::Member, cyclic::NonMember, cyclic::UnknownUpTo>;

/// Decides x in <r^t> with exponents up to `cap`. Certificates: a prime of
/// d(x) not dividing d(r); n(r) not dividing n(x); for r > 1, exhaustion of
/// the exponents with r^t <= x. With n(r) = 1 the denominator test alone
/// decides. Throws PreconditionViolated for cap = 0 or x < 0.
CyclicMembership cyclic_contains(const PositiveRational& r, const Rational& x,
                                 std::uint64_t cap);

/// Every factorization of x into atoms r^t with t <= cap (and r^t <= x),
/// via the scaled identity sum c_t a^t b^(T-t) = x b^T, a = n(r), b = d(r).
/// Sorted with the highest exponent's multiplicity most significant. For an
/// integer r the only atom is r itself. Throws NotAtomic when n(r) = 1 and
/// r != 1, PreconditionViolated for cap = 0 or x < 0.
std::vector<Factorization> cyclic_factorizations(const PositiveRational& r, const Rational& x,
                                                 std::uint64_t cap);

enum class TradeDirection { Up, Down };

/// Up: n(r) copies of r^t become d(r) copies of r^(t+1). Down: the inverse.
/// Throws InsufficientMultiplicity, PreconditionViolated for t = 0.
Factorization cyclic_trade(const PositiveRational& r, const Factorization& z, std::uint64_t t,
                           TradeDirection direction);

}  // namespace puiseux
