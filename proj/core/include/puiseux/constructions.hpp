#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "puiseux/factorization.hpp"
#include "puiseux/family.hpp"
#include "puiseux/fg_monoid.hpp"
#include "puiseux/rational.hpp"
#include "puiseux/sequences.hpp"

namespace puiseux {

// ---------------------------------------------------------------------------
// Density approximation

/// value = multiplier * generator, where generator = generator_at(spec, index).
struct Approximation {
  PositiveRational value;
  std::size_t index;
  PositiveRational generator;
  Integer multiplier;
};

/// The element m * r_n with r_n the first generator below min(target, eps)
/// and m maximal with target - m * r_n > 0, so 0 < target - value < eps.
/// Throws NotDense unless classify(spec) proves density, and
/// NotFoundWithinLimit if no such generator appears among the first
/// `search_limit` indices.
Approximation approximate(const FamilySpec& spec, const PositiveRational& target,
                          const PositiveRational& eps, std::size_t search_limit = 1 << 20);

// ---------------------------------------------------------------------------
// Atoms dense in the nonnegative reals

struct DenseAtomEntry {
  std::size_t k;
  Rational target;
  std::uint64_t prime;
  std::uint64_t exponent;
  Integer numerator;
  PositiveRational generator;
  /// |target - generator|, always below 1/k.
  Rational error;
};

/// Generators m_k / p_k^(n_k), k = 1..count, with p_k the k-th prime of
/// partition class j, n_k minimal with p_k^(n_k) > 2k, and m_k the integer
/// nearest target(k) * p_k^(n_k), moved by one (to the nearer side, the
/// lower on ties, never below 1) when p_k divides it.
/// Throws PreconditionViolated when a target is not positive.
std::vector<DenseAtomEntry> dense_atom_monoid(const RationalSeq& targets, std::uint64_t j,
                                              std::size_t count);

FgMonoid monoid_of(const std::vector<DenseAtomEntry>& entries);

// ---------------------------------------------------------------------------
// k-primary decompositions

/// For distinct primes p < q < (rest), with R = product of the rest:
///   p' = m q + p and q' = n p' + q are prime, q' > p' > max(primes),
///   p' q' = m q q' + n p p' + p q, and
///   1/(p q R) = m/(p p' R) + n/(q q' R) + 1/(p' q' R).
struct AntimatterWitness {
  std::vector<Integer> primes;
  Integer p;
  Integer q;
  Integer rest;
  Integer m;
  Integer n;
  Integer p_prime;
  Integer q_prime;
  PositiveRational generator;
  /// The right-hand side: m, n and 1 copies of the three k-primary terms.
  Factorization decomposition;
};

/// Smallest m, then smallest n. Throws PreconditionViolated unless the
/// primes are distinct and at least two, NotPrime for a composite input and
/// NotFoundWithinLimit when a search exceeds `search_limit` steps.
AntimatterWitness kprimary_antimatter_witness(std::vector<Integer> primes,
                                              std::uint64_t search_limit);

/// True when the identities of the witness hold exactly.
bool verify(const AntimatterWitness& witness);

/// a_S = sum_{s in S} 1/p_s.
PositiveRational sum_kprimary_generator(const std::vector<std::uint64_t>& subset);

/// Whether a_S is an atom of <a_T : T a k-subset of {1..n}>, by exhaustive
/// search. Throws PreconditionViolated unless S is a k-subset of {1..n}.
bool sum_kprimary_atom_check(std::uint64_t k, std::vector<std::uint64_t> subset,
                             std::uint64_t n);

// ---------------------------------------------------------------------------
// p-adic atom extraction

/// r_index = p^p_exponent * q^q_exponent * r_via, both exponents >= 0.
struct PadicExpression {
  std::size_t index;
  std::size_t via;
  Integer p_exponent;
  Integer q_exponent;
};

struct PadicExtraction {
  Integer q;
  /// Indices i <= n whose numerator is below every later numerator.
  std::vector<std::size_t> kept;
  std::vector<PadicExpression> excluded;
  /// Whether the closed form certifies that the generators decrease. The
  /// kept indices are exactly the atoms when it does.
  bool decreasing;
};

/// Requires numerators that are powers of one prime q != p, unbounded, and
/// strictly increasing on their closed-form tail. Throws HypothesisViolated
/// naming the first failed requirement.
PadicExtraction padic_candidate_atoms(const family::PAdic& spec, std::size_t n);

/// True when the expression reproduces r_index exactly.
bool verify(const family::PAdic& spec, const PadicExpression& expression);

// ---------------------------------------------------------------------------
// Generalized cyclic embedding

/// r_i^m = coefficient * (prime / D)^m, D the product of the denominators.
struct CyclicEmbedding {
  Integer coefficient;
  Integer prime;
  Integer denominator_product;
};

/// `i` is 1-based. Throws GcdOne when the numerators are coprime, BadIndex
/// for i outside 1..k, PreconditionViolated for m = 0.
CyclicEmbedding generalized_cyclic_embed(const std::vector<PositiveRational>& rs,
                                         std::size_t i, std::uint64_t m);

// ---------------------------------------------------------------------------
// Non-isomorphism from disjoint denominator supports

struct NonIsomorphismCertificate {
  std::string support_a;
  std::string support_b;
  std::string reason;
};

/// A certificate when both specs have computable denominator prime supports,
/// the supports are disjoint, and one side's denominators involve infinitely
/// many primes or unbounded prime powers; nullopt otherwise.
std::optional<NonIsomorphismCertificate> disjoint_prime_noniso(const FamilySpec& a,
                                                               const FamilySpec& b);

}  // namespace puiseux
