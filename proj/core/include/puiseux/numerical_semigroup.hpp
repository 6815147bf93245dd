#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Submonoid of the nonnegative integers given by a finite generating set.
///
/// Generator sets whose gcd exceeds 1 are accepted: they arise as scaled
/// images of Puiseux monoids before normalization. Only frobenius() insists
/// on a cofinite (gcd 1) monoid.
class NumericalSemigroup {
 public:
  /// Sorts ascending and removes duplicates. Throws NonPositive for a
  /// generator below 1 and PreconditionViolated for an empty list.
  explicit NumericalSemigroup(std::vector<Integer> generators);

  /// Comma-separated positive integers, e.g. "6,9,20".
  static NumericalSemigroup parse(std::string_view text);

  const std::vector<Integer>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  Integer gcd() const;
  bool is_cofinite() const { return gcd() == 1; }

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

 private:
  std::vector<Integer> generators_;
};

/// A coefficient vector aligned with the sorted generator list.
using Representation = std::vector<Integer>;

/// The unique minimal generating set (the atoms).
std::vector<Integer> minimal_generators(const NumericalSemigroup& semigroup);

/// Largest integer outside the semigroup; -1 when the semigroup is all of
/// N_0. Throws NotCofinite if the generators have gcd > 1.
Integer frobenius(const NumericalSemigroup& semigroup);

bool contains(const NumericalSemigroup& semigroup, const Integer& x);

/// Every coefficient vector c >= 0 with sum c_i * g_i == x. Ordered
/// lexicographically with the largest generator's coefficient most
/// significant, each coefficient ascending.
std::vector<Representation> representations(const NumericalSemigroup& semigroup,
                                            const Integer& x);

/// The first vector representations() would list, without enumerating the
/// rest; nullopt when x is not in the semigroup.
std::optional<Representation> find_representation(const NumericalSemigroup& semigroup,
                                                  const Integer& x);

Integer evaluate(const NumericalSemigroup& semigroup, const Representation& coefficients);

/// Smallest element of the semigroup in each residue class modulo the
/// smallest generator (the Apéry-style table behind membership and
/// Frobenius computations).
///
/// Built with the round-robin shortest-path scheme: one pass per additional
/// generator, each walking every cycle of the residue graph twice.
class ResidueTable {
 public:
  /// Residue tables are only built for moduli up to this size.
  static constexpr std::size_t kMaxModulus = std::size_t{1} << 22;

  /// `generators` ascending; the first is the modulus. Throws
  /// PreconditionViolated when the modulus exceeds kMaxModulus.
  explicit ResidueTable(const std::vector<Integer>& generators);

  /// Adds one more generator (must not be smaller than the modulus).
  void add(const Integer& generator);

  std::size_t modulus() const { return weights_.size(); }
  bool contains(const Integer& x) const;
  /// Smallest element congruent to `residue`, or nullopt if none.
  const std::optional<Integer>& weight(std::size_t residue) const {
    return weights_[residue];
  }

 private:
  std::vector<std::optional<Integer>> weights_;
};

}  // namespace puiseux
