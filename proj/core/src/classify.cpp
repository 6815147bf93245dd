#include "puiseux/classify.hpp"

#include <algorithm>

#include "puiseux/error.hpp"

namespace puiseux {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Citation tags. Each names the result a verdict rests on.
constexpr const char* kZeroLimitPoint = "generators-tend-to-zero";
constexpr const char* kBoundedBelow = "generators-bounded-below";
constexpr const char* kBoundedNumerators = "bounded-numerators";
constexpr const char* kUnboundedAtomNumerators = "atoms-have-unbounded-numerators";
constexpr const char* kFiniteSupport = "finitely-many-denominator-primes";
constexpr const char* kInfiniteSupport = "infinitely-many-denominator-primes";
constexpr const char* kFinitelyGenerated = "finitely-generated-atomic";
constexpr const char* kNonDense = "non-dense-hereditarily-atomic";
constexpr const char* kAtomicHasAtoms = "atomic-nontrivial-has-atoms";
constexpr const char* kAntimatterSubmonoid = "antimatter-is-not-hereditarily-atomic";
constexpr const char* kHereditaryImpliesAtomic = "hereditarily-atomic-implies-atomic";
constexpr const char* kPowerDenominator = "power-denominator-antimatter";
constexpr const char* kHalfPrime = "half-prime-atomic-unbounded";
constexpr const char* kTwoAdic = "two-adic-odd-prime-submonoid";
constexpr const char* kPrimary = "primary-hereditarily-atomic";
constexpr const char* kKPrimary = "k-primary-antimatter";
constexpr const char* kDistinctPrimes = "each-prime-divides-one-denominator";
constexpr const char* kSumKPrimary = "sum-k-primary-atoms";
constexpr const char* kPadicBounded = "p-adic-bounded-numerators-finitely-many-atoms";
constexpr const char* kPadicConstant = "p-adic-constant-numerator-chain";
constexpr const char* kPadicDecreasing = "p-adic-decreasing-prime-power-numerators";
constexpr const char* kSquaredPowerPair = "squared-power-pair-antimatter";
constexpr const char* kCyclic = "cyclic-atomic-or-antimatter";
constexpr const char* kCyclicHereditary = "atomic-cyclic-hereditarily-atomic";
constexpr const char* kGeneralizedCyclic = "generalized-cyclic-common-prime-embedding";
constexpr const char* kBfNotFf = "bf-not-ff-atoms";

Finding yes(const char* citation, bool asserted = false) {
  return {Verdict::Yes, citation, asserted};
}
Finding no(const char* citation, bool asserted = false) {
  return {Verdict::No, citation, asserted};
}

bool unknown(const Finding& f) { return f.verdict == Verdict::Unknown; }

/// Closes the report under the implications that hold for every nontrivial
/// Puiseux monoid.
void close(ClassificationReport& r) {
  if (r.dense.verdict == Verdict::No && unknown(r.hereditarily_atomic)) {
    r.hereditarily_atomic = yes(kNonDense, true);
  }
  if (r.hereditarily_atomic.verdict == Verdict::Yes && unknown(r.atomic)) {
    r.atomic = yes(kHereditaryImpliesAtomic, r.hereditarily_atomic.paper_asserted);
  }
  if (r.atomic.verdict == Verdict::Yes && unknown(r.antimatter)) {
    r.antimatter = no(kAtomicHasAtoms, r.atomic.paper_asserted);
  }
  if (r.antimatter.verdict == Verdict::Yes) {
    if (unknown(r.atomic)) r.atomic = no(kAtomicHasAtoms);
    if (unknown(r.hereditarily_atomic)) r.hereditarily_atomic = no(kAntimatterSubmonoid);
  }
  if (r.atomic.verdict == Verdict::No && unknown(r.hereditarily_atomic)) {
    r.hereditarily_atomic = no(kHereditaryImpliesAtomic);
  }
}

void fill_justification(ClassificationReport& r) {
  for (const Finding* f : {&r.dense, &r.atomic, &r.antimatter, &r.strongly_bounded, &r.finite,
                           &r.hereditarily_atomic}) {
    if (f->citation.empty()) continue;
    if (std::find(r.justification.begin(), r.justification.end(), f->citation) ==
        r.justification.end()) {
      r.justification.push_back(f->citation);
    }
  }
}

ClassificationReport finitely_generated() {
  ClassificationReport r;
  r.dense = no(kFinitelyGenerated);
  r.atomic = yes(kFinitelyGenerated);
  r.strongly_bounded = yes(kFinitelyGenerated);
  r.finite = yes(kFinitelyGenerated);
  return r;
}

ClassificationReport primary_like(bool dense) {
  ClassificationReport r;
  r.dense = dense ? yes(kZeroLimitPoint) : no(kBoundedBelow);
  r.atomic = yes(kPrimary, true);
  r.hereditarily_atomic = yes(kPrimary, true);
  r.strongly_bounded = yes(kBoundedNumerators);
  r.finite = no(kInfiniteSupport);
  return r;
}

ClassificationReport cyclic(const PositiveRational& r) {
  const Integer a = r.num();
  const Integer b = r.den();
  if (b == 1) {
    // <r^n> = <r> for an integer r.
    return finitely_generated();
  }
  ClassificationReport out;
  out.finite = yes(kFiniteSupport);
  out.dense = r.value() < Rational(1) ? yes(kZeroLimitPoint) : no(kBoundedBelow);
  if (a == 1) {
    out.antimatter = yes(kCyclic);
    out.strongly_bounded = yes(kBoundedNumerators);
    return out;
  }
  out.atomic = yes(kCyclic);
  out.strongly_bounded = no(kUnboundedAtomNumerators);
  if (out.dense.verdict == Verdict::Yes) out.hereditarily_atomic = yes(kCyclicHereditary, true);
  return out;
}

ClassificationReport padic(const family::PAdic& f) {
  if (f.numerators.length() || f.exponents.length()) return finitely_generated();
  ClassificationReport r;
  r.finite = yes(kFiniteSupport);
  const bool bounded = f.numerators.is_bounded() == true;
  if (bounded) {
    r.dense = yes(kZeroLimitPoint);
    r.strongly_bounded = yes(kBoundedNumerators);
    r.atomic = no(kPadicBounded);
    const auto* c = std::get_if<seq::Constant>(&f.numerators.tail_form().form());
    if (c != nullptr && f.numerators.tail_start() == 1) r.antimatter = yes(kPadicConstant);
  } else if (auto ratio = padic_tail_ratio(f)) {
    r.dense = *ratio < Rational(1) ? yes(kZeroLimitPoint) : no(kBoundedBelow);
  }
  if (!bounded && f.numerators.is_bounded() == false) {
    auto q = f.numerators.prime_power_base();
    if (q && *q != f.p && padic_generators_decreasing(f) == true) {
      r.atomic = yes(kPadicDecreasing);
    }
  }
  return r;
}

ClassificationReport dispatch(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::PowerDenominator&) {
            ClassificationReport r;
            r.dense = yes(kZeroLimitPoint);
            r.antimatter = yes(kPowerDenominator);
            r.strongly_bounded = yes(kPowerDenominator);
            r.finite = yes(kPowerDenominator);
            return r;
          },
          [](const family::HalfPrime&) {
            ClassificationReport r;
            r.dense = no(kBoundedBelow);
            r.atomic = yes(kHalfPrime);
            r.strongly_bounded = no(kHalfPrime);
            r.finite = no(kHalfPrime);
            return r;
          },
          [](const family::TwoAdicOddPrime&) {
            ClassificationReport r;
            r.dense = yes(kZeroLimitPoint);
            r.atomic = yes(kDistinctPrimes);
            r.hereditarily_atomic = no(kTwoAdic);
            r.strongly_bounded = yes(kBoundedNumerators);
            r.finite = no(kInfiniteSupport);
            return r;
          },
          [](const family::ElementaryPrimary&) { return primary_like(true); },
          [](const family::ElementaryKPrimary& f) {
            if (f.k == 1) return primary_like(true);
            ClassificationReport r;
            r.dense = yes(kZeroLimitPoint);
            r.antimatter = yes(kKPrimary);
            r.strongly_bounded = yes(kBoundedNumerators);
            r.finite = no(kInfiniteSupport);
            return r;
          },
          [](const family::PartitionedKPrimary& f) {
            if (f.k == 1) return primary_like(true);
            ClassificationReport r;
            r.dense = yes(kZeroLimitPoint);
            r.atomic = yes(kDistinctPrimes);
            r.strongly_bounded = yes(kBoundedNumerators);
            r.finite = no(kInfiniteSupport);
            return r;
          },
          [](const family::SumKPrimary& f) {
            if (f.k == 1) return primary_like(true);
            ClassificationReport r;
            r.dense = yes(kZeroLimitPoint);
            r.atomic = yes(kSumKPrimary);
            r.strongly_bounded = no(kUnboundedAtomNumerators);
            r.finite = no(kInfiniteSupport);
            return r;
          },
          [](const family::PAdic& f) { return padic(f); },
          [](const family::SquaredPowerPair&) {
            ClassificationReport r;
            r.dense = yes(kZeroLimitPoint);
            r.antimatter = yes(kSquaredPowerPair);
            r.finite = yes(kFiniteSupport);
            return r;
          },
          [](const family::Cyclic& f) { return cyclic(f.r); },
          [](const family::GeneralizedCyclic& f) {
            bool same = std::all_of(f.rs.begin(), f.rs.end(),
                                    [&](const auto& r) { return r == f.rs.front(); });
            if (same) return cyclic(f.rs.front());
            ClassificationReport r;
            r.finite = yes(kFiniteSupport);
            bool any_small = std::any_of(f.rs.begin(), f.rs.end(),
                                         [](const auto& x) { return x.value() < Rational(1); });
            r.dense = any_small ? yes(kZeroLimitPoint) : no(kBoundedBelow);
            Integer g = 0;
            for (const auto& x : f.rs) g = gcd(g, x.num());
            if (g != 1) {
              r.atomic = yes(kGeneralizedCyclic, true);
              r.hereditarily_atomic = yes(kGeneralizedCyclic, true);
            }
            if (std::all_of(f.rs.begin(), f.rs.end(), [](const auto& x) { return x.num() == 1; })) {
              r.strongly_bounded = yes(kBoundedNumerators);
            }
            return r;
          },
          [](const family::BfNotFf&) {
            ClassificationReport r;
            r.dense = no(kBoundedBelow);
            r.atomic = yes(kBfNotFf);
            r.strongly_bounded = no(kUnboundedAtomNumerators);
            r.finite = no(kInfiniteSupport);
            return r;
          },
          [](const family::ExplicitList&) { return finitely_generated(); },
      },
      spec);
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::optional<Rational> padic_tail_ratio(const family::PAdic& spec) {
  auto num_ratio = spec.numerators.tail_ratio();
  if (!num_ratio) return std::nullopt;
  const auto* affine = std::get_if<seq::Affine>(&spec.exponents.tail_form().form());
  if (affine == nullptr || sgn(affine->a) < 0) return std::nullopt;
  return *num_ratio / Rational(pow(spec.p, to_uint64(affine->a)));
}

std::optional<bool> padic_generators_decreasing(const family::PAdic& spec) {
  const std::size_t start =
      std::max(spec.numerators.tail_start(), spec.exponents.tail_start());
  family::PAdic copy = spec;
  const FamilySpec as_spec = copy;
  for (std::size_t n = 1; n < start; ++n) {
    if (generator_at(as_spec, n + 1) >= generator_at(as_spec, n)) return false;
  }
  auto ratio = padic_tail_ratio(spec);
  if (!ratio) return std::nullopt;
  return *ratio < Rational(1);
}

ClassificationReport classify(const FamilySpec& spec) {
  validate(spec);
  ClassificationReport r = dispatch(spec);
  close(r);
  fill_justification(r);
  return r;
}

}  // namespace puiseux
