#pragma once

#include <map>
#include <string>

#include "puiseux/rational.hpp"

namespace puiseux {

/// A finite multiset of atoms: atom -> multiplicity (always >= 1).
class Factorization {
 public:
  using Terms = std::map<PositiveRational, Integer>;

  Factorization() = default;

  /// Adds `count` copies of `atom`; a zero count is a no-op.
  /// Throws PreconditionViolated for a negative count.
  void add(const PositiveRational& atom, const Integer& count = 1);
  /// Removes `count` copies; throws InsufficientMultiplicity.
  void remove(const PositiveRational& atom, const Integer& count);

  Integer multiplicity(const PositiveRational& atom) const;
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// |z|: the sum of multiplicities.
  Integer length() const;

  /// Multiplies every atom by `scale`, keeping multiplicities.
  Factorization scaled(const PositiveRational& scale) const;

  /// "2*(1/2) + 1*(2/3)"; "0" for the empty factorization.
  std::string str() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  Terms terms_;
};

/// The factorization homomorphism: sum of multiplicity * atom, exactly.
Rational evaluate(const Factorization& z);

}  // namespace puiseux
