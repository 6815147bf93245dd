#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "puiseux/classify.hpp"
#include "puiseux/constructions.hpp"
#include "puiseux/error.hpp"
#include "puiseux/family.hpp"
#include "puiseux/primes.hpp"

using namespace puiseux;

namespace {

PositiveRational pr(long n, long d) { return PositiveRational::make(n, d); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::ParseError;
}

family::PAdic padic(long p, IntSeq numerators, IntSeq exponents) {
  return family::PAdic{p, std::move(numerators), std::move(exponents)};
}

}  // namespace

// --- sequences ------------------------------------------------------------

TEST(Sequences, ClosedForms) {
  EXPECT_EQ(IntSeq::geometric(5, 2).at(3), 40);
  EXPECT_EQ(IntSeq::power(3).at(4), 81);
  EXPECT_EQ(IntSeq::affine(2, -1).at(5), 9);
  EXPECT_EQ(IntSeq::affine_exponent(2, 2, 1).at(2), 32);
  auto e = IntSeq::explicit_values({9, 3}, IntSeq::power(3));
  EXPECT_EQ(e.at(1), 9);
  EXPECT_EQ(e.at(2), 3);
  EXPECT_EQ(e.at(3), 27);
  EXPECT_EQ(e.tail_start(), 3u);
  EXPECT_EQ(e.is_strictly_increasing(), false);
  EXPECT_EQ(IntSeq::power(3).is_strictly_increasing(), true);
  EXPECT_EQ(IntSeq::constant(3).is_bounded(), true);
  EXPECT_EQ(IntSeq::power(3).prime_power_base(), Integer(3));
  auto finite = IntSeq::explicit_values({1, 2, 3});
  EXPECT_EQ(finite.length(), std::optional<std::size_t>(3));
  EXPECT_EQ(code_of([&] { finite.at(4); }), ErrorCode::BadIndex);
}

TEST(Sequences, FuscAndCalkinWilf) {
  for (std::uint64_t n = 0; n < 300; ++n) EXPECT_EQ(fusc(n), oracle::fusc(n));
  std::set<std::pair<long, long>> seen;
  for (std::size_t n = 1; n <= 200; ++n) {
    Rational t = term(rseq::CalkinWilf{}, n);
    EXPECT_EQ(t, Rational(oracle::fusc(n), oracle::fusc(n + 1)));
    EXPECT_TRUE(seen.insert({t.num().get_si(), t.den().get_si()}).second);
  }
}

TEST(Sequences, PrimeStreams) {
  auto ps = oracle::first_primes(400);
  std::vector<std::uint64_t> one_mod_four;
  for (auto p : ps) {
    if (p % 4 == 1) one_mod_four.push_back(p);
  }
  PrimeStream s = primes::Residue{4, 1};
  for (std::size_t i = 0; i < 30; ++i) EXPECT_EQ(nth(s, i + 1), one_mod_four[i]);
  EXPECT_TRUE(contains(s, 13));
  EXPECT_FALSE(contains(s, 7));
  EXPECT_THROW(validate(PrimeStream(primes::Residue{4, 2})), Error);
  // Partition classes are disjoint and cover the primes.
  std::set<std::uint64_t> covered;
  for (std::uint64_t j = 1; j <= 8; ++j) {
    for (std::uint64_t t = 1; t <= 40; ++t) {
      const std::uint64_t idx = (std::uint64_t{1} << (j - 1)) * (2 * t - 1);
      if (idx > ps.size()) break;
      EXPECT_EQ(partition_prime(j, t), ps[idx - 1]);
      EXPECT_TRUE(covered.insert(partition_prime(j, t)).second);
    }
  }
}

TEST(Family, ColexSubsetsEnumerateInOrder) {
  for (std::uint64_t k = 1; k <= 3; ++k) {
    // Brute force: all k-subsets of {1..9} sorted by (max, then colex).
    std::vector<std::vector<std::uint64_t>> all;
    std::vector<std::uint64_t> cur;
    std::function<void(std::uint64_t)> go = [&](std::uint64_t from) {
      if (cur.size() == k) {
        all.push_back(cur);
        return;
      }
      for (std::uint64_t v = from; v <= 9; ++v) {
        cur.push_back(v);
        go(v + 1);
        cur.pop_back();
      }
    };
    go(1);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    for (std::size_t r = 0; r < all.size(); ++r) EXPECT_EQ(colex_subset(k, r + 1), all[r]);
  }
}

// --- family generators ----------------------------------------------------

TEST(Family, Generators) {
  EXPECT_EQ(generator_at(family::ElementaryPrimary{primes::All{}}, 3), pr(1, 5));
  EXPECT_EQ(generator_at(family::HalfPrime{}, 4), pr(3, 7));
  EXPECT_EQ(generator_at(family::SquaredPowerPair{3}, 1), pr(8, 81));
  EXPECT_EQ(generator_at(family::SquaredPowerPair{3}, 2), pr(10, 81));
  EXPECT_EQ(truncate(family::PowerDenominator{2}, 3), FgMonoid::parse("1/2,1/4,1/8"));
  EXPECT_EQ(truncate(family::TwoAdicOddPrime{}, 2), FgMonoid::parse("1/6,1/20"));
  EXPECT_EQ(truncate(family::Cyclic{pr(2, 3)}, 2), FgMonoid::parse("2/3,4/9"));
  EXPECT_TRUE(truncate(family::Cyclic{pr(2, 3)}, 0).is_trivial());
  EXPECT_EQ(generator_at(family::PartitionedKPrimary{2}, 2), pr(1, 35));
  EXPECT_EQ(generator_at(family::ElementaryKPrimary{2}, 3), pr(1, 15));
  EXPECT_EQ(generator_at(family::SumKPrimary{2}, 1), pr(5, 6));
  EXPECT_EQ(generator_at(family::BfNotFf{}, 3), pr(2, 5));
  EXPECT_EQ(generator_at(family::BfNotFf{}, 4), pr(3, 5));
  family::GeneralizedCyclic gc{{pr(2, 5), pr(4, 7)}};
  EXPECT_EQ(generator_at(gc, 3), pr(4, 25));
  EXPECT_EQ(generator_at(gc, 4), pr(16, 49));
}

TEST(Family, ValidationErrors) {
  EXPECT_EQ(code_of([] { validate(family::PowerDenominator{4}); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { validate(family::SquaredPowerPair{9}); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { validate(family::SquaredPowerPair{2}); }),
            ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { validate(family::ElementaryKPrimary{0}); }),
            ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] {
              validate(padic(2, IntSeq::power(3), IntSeq::constant(1)));
            }),
            ErrorCode::HypothesisViolated);
  EXPECT_EQ(code_of([] { validate(family::ExplicitList{FgMonoid()}); }),
            ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { generator_at(family::ExplicitList{FgMonoid::parse("1/2")}, 2); }),
            ErrorCode::BadIndex);
}

// --- classification -------------------------------------------------------

TEST(Classify, DispatchExamples) {
  auto cyc = classify(family::Cyclic{pr(1, 2)});
  EXPECT_EQ(cyc.antimatter.verdict, Verdict::Yes);
  EXPECT_EQ(cyc.dense.verdict, Verdict::Yes);
  EXPECT_EQ(classify(family::ElementaryKPrimary{2}).antimatter.verdict, Verdict::Yes);
  auto prim = classify(family::ElementaryPrimary{primes::All{}});
  EXPECT_EQ(prim.atomic.verdict, Verdict::Yes);
  EXPECT_EQ(prim.hereditarily_atomic.verdict, Verdict::Yes);
  EXPECT_TRUE(prim.hereditarily_atomic.paper_asserted || !prim.hereditarily_atomic.citation.empty());
  auto gc = classify(family::GeneralizedCyclic{{pr(2, 5), pr(4, 7)}});
  EXPECT_EQ(gc.hereditarily_atomic.verdict, Verdict::Yes);
  EXPECT_TRUE(gc.hereditarily_atomic.paper_asserted);
  EXPECT_EQ(classify(family::Cyclic{pr(2, 3)}).atomic.verdict, Verdict::Yes);
  EXPECT_EQ(classify(family::Cyclic{pr(3, 2)}).dense.verdict, Verdict::No);
  EXPECT_EQ(classify(family::ExplicitList{FgMonoid::parse("2,3")}).atomic.verdict, Verdict::Yes);
  EXPECT_EQ(classify(family::BfNotFf{}).atomic.verdict, Verdict::Yes);
  EXPECT_EQ(classify(family::SquaredPowerPair{3}).antimatter.verdict, Verdict::Yes);
}

TEST(ClassifyProperty, ReportsAreConsistent) {
  std::vector<FamilySpec> specs = {
      family::PowerDenominator{2},
      family::HalfPrime{},
      family::TwoAdicOddPrime{},
      family::ElementaryPrimary{primes::Residue{4, 3}},
      family::ElementaryKPrimary{3},
      family::PartitionedKPrimary{2},
      family::SumKPrimary{2},
      padic(3, IntSeq::power(2), IntSeq::affine(1, 0)),
      padic(2, IntSeq::constant(1), IntSeq::affine(1, 0)),
      family::SquaredPowerPair{5},
      family::Cyclic{pr(2, 3)},
      family::Cyclic{pr(5, 2)},
      family::Cyclic{pr(1, 3)},
      family::GeneralizedCyclic{{pr(2, 5), pr(4, 7)}},
      family::BfNotFf{},
      family::ExplicitList{FgMonoid::parse("1/2,2/3")},
  };
  for (const auto& s : specs) {
    auto r = classify(s);
    EXPECT_FALSE(r.atomic.verdict == Verdict::Yes && r.antimatter.verdict == Verdict::Yes)
        << family_name(s);
    if (r.hereditarily_atomic.verdict == Verdict::Yes) {
      EXPECT_EQ(r.atomic.verdict, Verdict::Yes) << family_name(s);
    }
    if (r.antimatter.verdict == Verdict::Yes) {
      EXPECT_NE(r.hereditarily_atomic.verdict, Verdict::Yes) << family_name(s);
    }
    for (const Finding* f : {&r.dense, &r.atomic, &r.antimatter, &r.strongly_bounded, &r.finite,
                             &r.hereditarily_atomic}) {
      if (f->verdict != Verdict::Unknown) EXPECT_FALSE(f->citation.empty()) << family_name(s);
    }
  }
}

// --- approximation --------------------------------------------------------

TEST(Approximate, Examples) {
  auto a = approximate(family::PowerDenominator{2}, pr(5, 3), pr(1, 10));
  EXPECT_EQ(a.value, pr(13, 8));
  EXPECT_EQ(a.generator, pr(1, 16));
  EXPECT_EQ(a.multiplier, 26);
  // First generator below 1/100 is 1/128; the largest multiple below 1/8 is 15/128.
  auto b = approximate(family::PowerDenominator{2}, pr(1, 8), pr(1, 100));
  EXPECT_EQ(b.generator, pr(1, 128));
  EXPECT_EQ(b.value, pr(15, 128));
  EXPECT_EQ(code_of([] {
              approximate(family::ExplicitList{FgMonoid::parse("2,3")}, pr(1, 1), pr(1, 2));
            }),
            ErrorCode::NotDense);
}

TEST(ApproximateProperty, GapIsBelowEps) {
  std::mt19937 rng(5);
  std::vector<FamilySpec> dense = {family::PowerDenominator{3}, family::TwoAdicOddPrime{},
                                   family::ElementaryPrimary{primes::All{}},
                                   family::Cyclic{pr(3, 4)}, family::ElementaryKPrimary{2}};
  for (int i = 0; i < 100; ++i) {
    const auto& spec = dense[rng() % dense.size()];
    auto target = pr(1 + rng() % 50, 1 + rng() % 20);
    auto eps = pr(1, 1 + rng() % 200);
    auto a = approximate(spec, target, eps);
    Rational gap = target.value() - a.value.value();
    EXPECT_GT(gap, Rational(0));
    EXPECT_LT(gap, eps.value());
    EXPECT_EQ(a.value.value(), Rational(a.multiplier) * a.generator.value());
    EXPECT_EQ(a.generator, generator_at(spec, a.index));
  }
}

// --- dense atoms ----------------------------------------------------------

namespace {

/// The construction written out directly: nearest integer, nudged off
/// multiples of p to the nearer neighbour (lower on ties, never 0).
oracle::Q dense_atom_reference(const oracle::Q& target, std::uint64_t p, long k) {
  oracle::Z pn = 1;
  while (pn <= 2 * k) pn *= p;
  oracle::Q scaled = target * pn;
  oracle::Z m = scaled.get_num() * 2 + scaled.get_den();
  mpz_fdiv_q(m.get_mpz_t(), m.get_mpz_t(), oracle::Z(2 * scaled.get_den()).get_mpz_t());
  if (m % p == 0) {
    oracle::Q down = scaled - oracle::Q(m - 1), up = oracle::Q(m + 1) - scaled;
    if (m - 1 >= 1 && abs(down) <= abs(up)) m -= 1;
    else m += 1;
  }
  oracle::Q out(m, pn);
  out.canonicalize();
  return out;
}

}  // namespace

TEST(DenseAtoms, MatchesReferenceConstruction) {
  auto single = dense_atom_monoid(rseq::ConstantValue{Rational(1)}, 1, 1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].generator, pr(3, 4));
  EXPECT_TRUE(monoid_of(dense_atom_monoid(rseq::CalkinWilf{}, 1, 0)).is_trivial());
  EXPECT_EQ(code_of([] {
              dense_atom_monoid(rseq::ExplicitValues{{Rational(1), Rational(-1)}}, 1, 2);
            }),
            ErrorCode::PreconditionViolated);
  for (std::uint64_t j : {1, 2, 3}) {
    auto entries = dense_atom_monoid(rseq::CalkinWilf{}, j, 25);
    for (const auto& e : entries) {
      const std::uint64_t p = partition_prime(j, e.k);
      oracle::Q want = dense_atom_reference(term(rseq::CalkinWilf{}, e.k).raw(), p,
                                            static_cast<long>(e.k));
      EXPECT_EQ(e.generator.value().raw(), want) << "j=" << j << " k=" << e.k;
      EXPECT_LT(e.error, Rational(1, static_cast<long>(e.k)));
    }
  }
}

// --- k-primary ------------------------------------------------------------

TEST(KPrimary, WitnessExamples) {
  auto w = kprimary_antimatter_witness({3, 5}, 10000);
  EXPECT_EQ(w.m, 2);
  EXPECT_EQ(w.p_prime, 13);
  EXPECT_EQ(w.n, 2);
  EXPECT_EQ(w.q_prime, 31);
  EXPECT_EQ(w.p_prime * w.q_prime, 310 + 78 + 15);
  EXPECT_EQ(w.decomposition.multiplicity(pr(1, 39)), 2);
  EXPECT_EQ(w.decomposition.multiplicity(pr(1, 155)), 2);
  EXPECT_EQ(w.decomposition.multiplicity(pr(1, 403)), 1);
  EXPECT_EQ(evaluate(w.decomposition), Rational(1, 15));
  EXPECT_TRUE(verify(w));
  auto w3 = kprimary_antimatter_witness({3, 5, 7}, 10000);
  EXPECT_EQ(w3.m, 2);
  EXPECT_EQ(w3.q_prime, 31);
  EXPECT_EQ(evaluate(w3.decomposition), Rational(1, 105));
  EXPECT_EQ(w3.decomposition.multiplicity(pr(1, 2821)), 1);
  EXPECT_EQ(code_of([] { kprimary_antimatter_witness({3}, 10000); }),
            ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { kprimary_antimatter_witness({3, 9}, 10000); }), ErrorCode::NotPrime);
}

TEST(KPrimary, TamperedWitnessFailsVerification) {
  auto w = kprimary_antimatter_witness({2, 3, 5}, 10000);
  EXPECT_TRUE(verify(w));
  w.n += 1;
  EXPECT_FALSE(verify(w));
}

TEST(SumKPrimary, AtomChecks) {
  EXPECT_TRUE(sum_kprimary_atom_check(2, {1, 2}, 4));
  EXPECT_TRUE(sum_kprimary_atom_check(1, {1}, 3));
  EXPECT_TRUE(sum_kprimary_atom_check(2, {1, 2}, 2));
  EXPECT_EQ(sum_kprimary_generator({1, 2}), pr(5, 6));
  EXPECT_THROW(sum_kprimary_atom_check(2, {1, 5}, 4), Error);
}

// --- p-adic extraction ----------------------------------------------------

TEST(PadicAtoms, Examples) {
  auto all_kept = padic_candidate_atoms(padic(2, IntSeq::power(3), IntSeq::affine(2, 0)), 5);
  EXPECT_EQ(all_kept.kept, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  EXPECT_TRUE(all_kept.excluded.empty());
  EXPECT_TRUE(all_kept.decreasing);

  auto spec = padic(2, IntSeq::explicit_values({9, 3}, IntSeq::power(3)), IntSeq::affine(1, 0));
  auto e = padic_candidate_atoms(spec, 4);
  EXPECT_EQ(e.kept, (std::vector<std::size_t>{2, 3, 4}));
  ASSERT_EQ(e.excluded.size(), 1u);
  EXPECT_EQ(e.excluded[0].index, 1u);
  EXPECT_TRUE(verify(spec, e.excluded[0]));
  EXPECT_EQ(Rational(6) * Rational(3, 4), Rational(9, 2));

  EXPECT_EQ(code_of([] {
              padic_candidate_atoms(padic(2, IntSeq::constant(3), IntSeq::affine(1, 0)), 3);
            }),
            ErrorCode::HypothesisViolated);
}

TEST(PadicAtoms, KeptIndicesAreAtomsOfTheTruncation) {
  auto spec = padic(2, IntSeq::explicit_values({9, 3}, IntSeq::power(3)), IntSeq::affine(1, 0));
  auto e = padic_candidate_atoms(spec, 6);
  std::vector<oracle::Q> gens;
  for (std::size_t i = 1; i <= 6; ++i) gens.push_back(generator_at(spec, i).value().raw());
  auto want = oracle::atoms(gens);
  for (auto i : e.kept) {
    EXPECT_NE(std::find(want.begin(), want.end(), generator_at(spec, i).value().raw()),
              want.end());
  }
}

// --- embeddings and certificates ------------------------------------------

TEST(Embedding, Examples) {
  std::vector<PositiveRational> rs = {pr(2, 5), pr(4, 7)};
  auto a = generalized_cyclic_embed(rs, 1, 2);
  EXPECT_EQ(a.coefficient, 49);
  EXPECT_EQ(Rational(a.prime, a.denominator_product), Rational(2, 35));
  EXPECT_EQ(generalized_cyclic_embed(rs, 2, 1).coefficient, 10);
  EXPECT_EQ(code_of([] { generalized_cyclic_embed({pr(2, 77), pr(3, 77)}, 1, 1); }),
            ErrorCode::GcdOne);
  EXPECT_EQ(code_of([&] { generalized_cyclic_embed(rs, 3, 1); }), ErrorCode::BadIndex);
}

TEST(NonIso, Certificates) {
  EXPECT_TRUE(disjoint_prime_noniso(family::ElementaryPrimary{primes::Residue{4, 1}},
                                    family::ElementaryPrimary{primes::Residue{4, 3}}));
  EXPECT_TRUE(disjoint_prime_noniso(family::PowerDenominator{2}, family::PowerDenominator{3}));
  EXPECT_FALSE(disjoint_prime_noniso(family::Cyclic{pr(2, 3)}, family::HalfPrime{}));
  EXPECT_FALSE(disjoint_prime_noniso(family::PowerDenominator{5},
                                     family::ElementaryPrimary{primes::Residue{4, 1}}));
}
