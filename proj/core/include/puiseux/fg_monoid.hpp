#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "puiseux/factorization.hpp"
#include "puiseux/numerical_semigroup.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

/// A finitely generated Puiseux monoid <g_1, ..., g_n>.
///
/// Generators are kept sorted ascending without duplicates. An empty list
/// stands for the trivial monoid {0} (the truncation of a family at size 0).
class FgMonoid {
 public:
  FgMonoid() = default;
  explicit FgMonoid(std::vector<PositiveRational> generators);

  /// Comma-separated "n/d" or integer tokens, e.g. "1/2,2/3".
  static FgMonoid parse(std::string_view text);

  const std::vector<PositiveRational>& generators() const { return generators_; }
  bool is_trivial() const { return generators_.empty(); }

  /// q * M as a set.
  FgMonoid scaled(const PositiveRational& q) const;

  friend bool operator==(const FgMonoid&, const FgMonoid&) = default;

 private:
  std::vector<PositiveRational> generators_;
};

/// M = scale * semigroup, with gcd(semigroup) == 1 and the semigroup's
/// generators aligned with M's (scaling preserves order).
struct ScaledForm {
  PositiveRational scale;
  NumericalSemigroup semigroup;
};

/// Clears denominators: scale = g / L where L is the lcm of the generator
/// denominators and g the gcd of the L-scaled numerators.
/// Throws PreconditionViolated for the trivial monoid.
ScaledForm to_scaled_integer(const FgMonoid& monoid);

/// The unique minimal generating set.
std::vector<PositiveRational> atoms(const FgMonoid& monoid);

/// Throws PreconditionViolated when x < 0.
bool contains(const FgMonoid& monoid, const Rational& x);

/// All of Z(x), ordered like representations() on the scaled atoms.
/// Z(0) holds exactly the empty factorization; non-members give {}.
std::vector<Factorization> factorizations(const FgMonoid& monoid, const Rational& x);

/// L(x), ascending.
std::vector<Integer> lengths(const FgMonoid& monoid, const Rational& x);

/// The atoms a with a |_M x, ascending.
std::vector<PositiveRational> atom_support(const FgMonoid& monoid, const Rational& x);

/// r with r * a == b as monoids, if any.
std::optional<PositiveRational> isomorphism_witness(const FgMonoid& a, const FgMonoid& b);

}  // namespace puiseux
