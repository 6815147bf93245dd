#include "puiseux/verifier.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "puiseux/classify.hpp"
#include "puiseux/constructions.hpp"
#include "puiseux/cyclic.hpp"
#include "puiseux/error.hpp"
#include "puiseux/family.hpp"
#include "puiseux/fg_monoid.hpp"
#include "puiseux/numerical_semigroup.hpp"
#include "puiseux/primes.hpp"

namespace puiseux {

namespace {

std::string join(const std::vector<PositiveRational>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].str();
  }
  return out + "}";
}

template <class T>
std::string join_numbers(const std::vector<T>& xs) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  out << "}";
  return out.str();
}

/// Collects checks for one claim. Only failures and a few representative
/// successes become witnesses; the rest are counted.
class Recorder {
 public:
  Recorder(std::string id, std::string citation) {
    outcome_.claim_id = std::move(id);
    outcome_.citation = std::move(citation);
  }

  void param(const std::string& key, std::int64_t value) { outcome_.parameters[key] = value; }

  /// Records `witness` as evidence; `show` keeps it in the report.
  bool check(bool ok, const std::string& witness, bool show = true) {
    ++checks_;
    if (!ok) {
      failed_ = true;
      outcome_.witnesses.push_back("FAILED: " + witness);
    } else if (show) {
      outcome_.witnesses.push_back(witness);
    }
    return ok;
  }

  void note(const std::string& text) { outcome_.witnesses.push_back(text); }

  ClaimOutcome finish(ClaimStatus when_ok = ClaimStatus::Confirmed) {
    if (failed_) {
      outcome_.status = ClaimStatus::Refuted;
    } else if (checks_ == 0 && when_ok != ClaimStatus::DataOnly) {
      outcome_.status = ClaimStatus::Inconclusive;
    } else {
      outcome_.status = when_ok;
    }
    if (checks_ > 0) outcome_.witnesses.push_back(std::to_string(checks_) + " exact checks passed" +
                                                  (failed_ ? " or failed as listed" : ""));
    return std::move(outcome_);
  }

 private:
  ClaimOutcome outcome_;
  std::size_t checks_ = 0;
  bool failed_ = false;
};

std::vector<PositiveRational> scaled_all(const std::vector<PositiveRational>& xs,
                                         const PositiveRational& q) {
  std::vector<PositiveRational> out;
  for (const auto& x : xs) out.push_back(x * q);
  return out;
}

/// Distinct primes dividing the denominators of the first n generators.
std::set<Integer> denominator_primes(const FamilySpec& spec, std::size_t n) {
  std::set<Integer> out;
  for (std::size_t i = 1; i <= n; ++i) {
    Integer d = generator_at(spec, i).den();
    while (d != 1) {
      Integer p = smallest_prime_factor(d);
      out.insert(p);
      while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) d /= p;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ClaimOutcome c1(const VerifierParams&) {
  Recorder rec("C1", "density-approximation");
  const std::vector<std::pair<std::string, FamilySpec>> specs = {
      {"PowerDenominator(2)", family::PowerDenominator{2}},
      {"PowerDenominator(3)", family::PowerDenominator{3}},
      {"TwoAdicOddPrime", family::TwoAdicOddPrime{}},
      {"ElementaryPrimary(all)", family::ElementaryPrimary{primes::All{}}},
      {"ElementaryKPrimary(2)", family::ElementaryKPrimary{2}},
      {"Cyclic(2/3)", family::Cyclic{PositiveRational::make(2, 3)}},
      {"SquaredPowerPair(3)", family::SquaredPowerPair{3}},
  };
  const std::vector<PositiveRational> targets = {
      PositiveRational::make(5, 3), PositiveRational::make(1, 8), PositiveRational::make(7, 2),
      PositiveRational::make(22, 7)};
  const std::vector<PositiveRational> eps = {PositiveRational::make(1, 10),
                                             PositiveRational::make(1, 100),
                                             PositiveRational::make(1, 1000)};
  bool first = true;
  for (const auto& [name, spec] : specs) {
    for (const auto& t : targets) {
      for (const auto& e : eps) {
        auto a = approximate(spec, t, e);
        Rational gap = t.value() - a.value.value();
        bool ok = gap.sign() > 0 && gap < e.value() &&
                  a.generator == generator_at(spec, a.index) &&
                  a.value.value() == Rational(a.multiplier) * a.generator.value() &&
                  contains(FgMonoid({a.generator}), a.value.value());
        rec.check(ok,
                  name + ": " + t.str() + " - " + a.multiplier.get_str() + "*(" +
                      a.generator.str() + ") = " + gap.str() + " < " + e.str(),
                  first || !ok);
        first = false;
      }
    }
  }
  bool refused = false;
  try {
    approximate(family::ExplicitList{FgMonoid({PositiveRational::make(2, 1),
                                               PositiveRational::make(3, 1)})},
                PositiveRational::make(1, 1), PositiveRational::make(1, 2));
  } catch (const Error& e) {
    refused = e.code() == ErrorCode::NotDense;
  }
  rec.check(refused, "<2, 3> is refused as not dense");
  return rec.finish();
}

ClaimOutcome c2(const VerifierParams&) {
  Recorder rec("C2", "isomorphisms-are-rational-multiplications");
  const std::vector<FgMonoid> monoids = {FgMonoid::parse("1/2,2/3"), FgMonoid::parse("2,3"),
                                         FgMonoid::parse("3/4,5/6,7/8"),
                                         FgMonoid::parse("2/77,3/77")};
  const std::vector<PositiveRational> scales = {PositiveRational::make(2, 3),
                                                PositiveRational::make(5, 1),
                                                PositiveRational::make(7, 11)};
  for (const auto& m : monoids) {
    const auto base_atoms = atoms(m);
    for (const auto& q : scales) {
      FgMonoid image = m.scaled(q);
      auto image_atoms = atoms(image);
      rec.check(image_atoms == scaled_all(base_atoms, q),
                "atoms(" + q.str() + " * <" + join(m.generators()) + ">) = " + join(image_atoms),
                q == scales.front());
      auto forward = isomorphism_witness(m, image);
      auto backward = isomorphism_witness(image, m);
      rec.check(forward == q && backward == inverse(q),
                "witness " + q.str() + " and its inverse " + inverse(q).str(), false);
      Rational x = Rational(3) * (base_atoms.front().value() + base_atoms.back().value());
      auto zs = factorizations(m, x);
      auto image_zs = factorizations(image, x * q.value());
      bool bijection = zs.size() == image_zs.size();
      for (std::size_t i = 0; bijection && i < zs.size(); ++i) {
        bijection = zs[i].scaled(q) == image_zs[i] && zs[i].length() == image_zs[i].length();
      }
      rec.check(bijection, "|Z(" + x.str() + ")| = " + std::to_string(zs.size()) +
                               " matches under scaling by " + q.str(),
                false);
    }
  }
  rec.check(!isomorphism_witness(FgMonoid::parse("2,3"), FgMonoid::parse("2,5")),
            "<2, 3> and <2, 5> admit no scaling");
  return rec.finish();
}

ClaimOutcome c3(const VerifierParams& params) {
  Recorder rec("C3", "disjoint-prime-supports-not-isomorphic");
  const std::size_t n = std::min<std::size_t>(params.truncation, 20);
  rec.param("truncation", static_cast<std::int64_t>(n));
  const std::vector<std::pair<FamilySpec, FamilySpec>> pairs = {
      {family::ElementaryPrimary{primes::Residue{4, 1}},
       family::ElementaryPrimary{primes::Residue{4, 3}}},
      {family::PowerDenominator{2}, family::PowerDenominator{3}},
      {family::ElementaryPrimary{primes::PartitionClass{1}},
       family::ElementaryPrimary{primes::PartitionClass{2}}},
      {family::PowerDenominator{3}, family::ElementaryPrimary{primes::Residue{4, 1}}},
  };
  for (const auto& [a, b] : pairs) {
    auto cert = disjoint_prime_noniso(a, b);
    if (!rec.check(cert.has_value(), "certificate for " + std::string(family_name(a)) +
                                         " vs " + std::string(family_name(b)),
                   false)) {
      continue;
    }
    auto pa = denominator_primes(a, n);
    auto pb = denominator_primes(b, n);
    std::vector<Integer> common;
    std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                          std::back_inserter(common));
    rec.check(common.empty(), cert->support_a + " vs " + cert->support_b + ": first " +
                                  std::to_string(n) + " denominators share no prime");
  }
  rec.check(!disjoint_prime_noniso(family::Cyclic{PositiveRational::make(2, 3)},
                                   family::HalfPrime{}),
            "Cyclic(2/3) vs HalfPrime: inapplicable, as expected");
  return rec.finish();
}

ClaimOutcome c4(const VerifierParams& params) {
  Recorder rec("C4", "dense-set-of-atoms");
  rec.param("truncation", static_cast<std::int64_t>(params.truncation));
  for (std::uint64_t j : {1, 2}) {
    auto entries = dense_atom_monoid(rseq::CalkinWilf{}, j, params.truncation);
    std::set<std::uint64_t> seen;
    bool ok = entries.size() == params.truncation;
    for (const auto& e : entries) {
      ok = ok && e.error < Rational(1, Integer(static_cast<unsigned long>(e.k))) &&
           seen.insert(e.prime).second && contains(primes::PartitionClass{j}, e.prime) &&
           !mpz_divisible_p(e.numerator.get_mpz_t(), Integer(static_cast<unsigned long>(e.prime)).get_mpz_t());
    }
    rec.check(ok, "class " + std::to_string(j) + ": " + std::to_string(entries.size()) +
                      " generators within 1/k of their targets over distinct primes");
    if (!entries.empty()) {
      const auto& e = entries.front();
      rec.note("class " + std::to_string(j) + ", k = 1: |" + e.target.str() + " - " +
               e.generator.str() + "| = " + e.error.str() + " < 1");
    }
    FgMonoid m = monoid_of(entries);
    rec.check(atoms(m).size() == m.generators().size(),
              "class " + std::to_string(j) + ": every generator is an atom");
  }
  return rec.finish();
}

ClaimOutcome c5(const VerifierParams& params) {
  Recorder rec("C5", "two-adic-odd-prime-submonoid");
  const std::size_t n = params.truncation;
  rec.param("truncation", static_cast<std::int64_t>(n));
  const FamilySpec spec = family::TwoAdicOddPrime{};
  FgMonoid m = truncate(spec, n);
  for (std::size_t i = 1; i <= n; ++i) {
    Integer p(static_cast<unsigned long>(nth_odd_prime(i)));
    PositiveRational g = generator_at(spec, i);
    Rational half_power(1, pow(Integer(2), i));
    rec.check(Rational(p) * g.value() == half_power,
              "1/2^" + std::to_string(i) + " = " + p.get_str() + " * (" + g.str() + ")",
              i <= 3);
    rec.check(contains(m, half_power) && half_power == Rational(2) * Rational(1, pow(Integer(2), i + 1)),
              "1/2^" + std::to_string(i) + " in M and = 2 * 1/2^" + std::to_string(i + 1), false);
  }
  rec.check(atoms(m) == m.generators(), "all " + std::to_string(n) + " generators are atoms");
  return rec.finish();
}

ClaimOutcome c6(const VerifierParams& params) {
  Recorder rec("C6", "k-primary-antimatter");
  rec.param("prime_limit", static_cast<std::int64_t>(params.prime_limit));
  const std::vector<Integer> first = {2, 3, 5, 7, 11};
  auto record = [&](const std::vector<Integer>& ps, bool show) {
    auto w = kprimary_antimatter_witness(ps, params.prime_limit);
    rec.check(verify(w),
              w.p_prime.get_str() + "*" + w.q_prime.get_str() + " = " + w.m.get_str() + "*" +
                  w.q.get_str() + "*" + w.q_prime.get_str() + " + " + w.n.get_str() + "*" +
                  w.p.get_str() + "*" + w.p_prime.get_str() + " + " + w.p.get_str() + "*" +
                  w.q.get_str() + "; " + w.generator.str() + " = " + w.decomposition.str(),
              show);
  };
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t j = i + 1; j < first.size(); ++j) {
      record({first[i], first[j]}, i == 0 && j == 1);
      for (std::size_t l = j + 1; l < first.size(); ++l) {
        record({first[i], first[j], first[l]}, i == 0 && j == 1 && l == 2);
      }
    }
  }
  for (std::uint64_t k : {2, 3}) {
    const std::size_t n = std::min<std::size_t>(params.truncation, 20);
    for (std::size_t r = 1; r <= n; ++r) {
      std::vector<Integer> ps;
      for (auto s : colex_subset(k, r)) ps.emplace_back(static_cast<unsigned long>(nth_prime(s)));
      record(ps, false);
    }
  }
  return rec.finish();
}

ClaimOutcome c7(const VerifierParams& params) {
  Recorder rec("C7", "k-primary-families-with-atoms");
  rec.param("truncation", static_cast<std::int64_t>(params.truncation));
  for (std::uint64_t k : {1, 2, 3}) {
    FgMonoid m = truncate(family::PartitionedKPrimary{k}, params.truncation);
    rec.check(atoms(m) == m.generators(),
              "PartitionedKPrimary(" + std::to_string(k) + "): all " +
                  std::to_string(m.generators().size()) + " generators are atoms");
  }
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> sizes = {{1, 8}, {2, 6}, {3, 6}};
  for (const auto& [k, n] : sizes) {
    Integer total;
    mpz_bin_uiui(total.get_mpz_t(), n, k);
    bool all = true;
    for (std::uint64_t r = 1; r <= total.get_ui(); ++r) {
      all = sum_kprimary_atom_check(k, colex_subset(k, r), n) && all;
    }
    FgMonoid m = truncate(family::SumKPrimary{k}, total.get_ui());
    rec.check(all && atoms(m) == m.generators(),
              "SumKPrimary(" + std::to_string(k) + ") over 1.." + std::to_string(n) + ": all " +
                  total.get_str() + " generators a_S are atoms");
  }
  return rec.finish();
}

family::PAdic finite_atom_padic() {
  return family::PAdic{3, IntSeq::explicit_values({5, 7}, IntSeq::constant(2)),
                       IntSeq::affine(1, 0)};
}

ClaimOutcome c8(const VerifierParams& params) {
  Recorder rec("C8", "p-adic-bounded-numerators-finitely-many-atoms");
  const auto padic = finite_atom_padic();
  const FamilySpec spec = padic;
  const std::size_t top = std::max<std::size_t>(3, std::min<std::size_t>(params.truncation, 30));
  rec.param("truncation", static_cast<std::int64_t>(top));
  rec.check(classify(spec).atomic.verdict == Verdict::No, "classified not atomic");
  const PositiveRational stable = PositiveRational::make(7, 9);
  for (std::size_t n = 3; n <= top; ++n) {
    auto a = atoms(truncate(spec, n));
    std::vector<PositiveRational> expected = {generator_at(spec, n), stable};
    std::sort(expected.begin(), expected.end());
    rec.check(a == expected, "N = " + std::to_string(n) + ": atoms " + join(a), n <= 4);
  }
  rec.check(Rational(5, 3) == Rational(7, 9) + Rational(12) * Rational(2, 27),
            "5/3 = 7/9 + 12*(2/27)");
  for (std::size_t t = 3; t <= top; ++t) {
    rec.check(generator_at(spec, t).value() == Rational(3) * generator_at(spec, t + 1).value(),
              "r_" + std::to_string(t) + " = 3 * r_" + std::to_string(t + 1), t == 3);
  }
  return rec.finish();
}

ClaimOutcome c9(const VerifierParams&) {
  Recorder rec("C9", "squared-power-pair-antimatter");
  for (int p : {3, 5}) {
    const FamilySpec spec = family::SquaredPowerPair{p};
    for (std::uint64_t n = 1; n <= 3; ++n) {
      Integer power = pow(Integer(p), std::uint64_t{1} << n);
      Integer square = power * power;
      Rational minus(power - 1, square);
      Rational plus(power + 1, square);
      bool shape = generator_at(spec, 2 * n - 1).value() == minus &&
                   generator_at(spec, 2 * n).value() == plus;
      rec.check(shape && minus + plus == Rational(2, power),
                minus.str() + " + " + plus.str() + " = " + Rational(2, power).str(), n == 1);
      Rational half_minus(power - 1, 2);
      Rational half_plus(power + 1, 2);
      rec.check(minus == half_minus * Rational(2, square) && plus == half_plus * Rational(2, square),
                minus.str() + " = " + half_minus.str() + " * " + Rational(2, square).str(), n == 1);
    }
  }
  return rec.finish();
}

ClaimOutcome c10(const VerifierParams&) {
  Recorder rec("C10", "p-adic-decreasing-prime-power-numerators");
  struct Case {
    family::PAdic spec;
    std::size_t n;
    std::vector<std::size_t> kept;
  };
  const std::vector<Case> cases = {
      {{2, IntSeq::power(3), IntSeq::affine(2, 0)}, 5, {1, 2, 3, 4, 5}},
      {{2, IntSeq::explicit_values({9, 3}, IntSeq::power(3)), IntSeq::affine(1, 0)}, 4, {2, 3, 4}},
  };
  for (const auto& c : cases) {
    auto result = padic_candidate_atoms(c.spec, c.n);
    rec.check(result.kept == c.kept, "kept indices " + join_numbers(result.kept));
    const FamilySpec spec = c.spec;
    const std::size_t span = std::max<std::size_t>(6, c.n);
    FgMonoid whole = truncate(spec, span);
    for (auto i : result.kept) {
      std::vector<PositiveRational> others;
      for (std::size_t j = 1; j <= span; ++j) {
        if (j != i) others.push_back(generator_at(spec, j));
      }
      PositiveRational g = generator_at(spec, i);
      rec.check(!contains(FgMonoid(others), g.value()),
                g.str() + " is not a sum of the other " + std::to_string(span - 1) +
                    " generators",
                false);
    }
    for (const auto& e : result.excluded) {
      rec.check(verify(c.spec, e), "r_" + std::to_string(e.index) + " = " + "2^" +
                                       e.p_exponent.get_str() + " * " + result.q.get_str() +
                                       "^" + e.q_exponent.get_str() + " * r_" +
                                       std::to_string(e.via) + " = " +
                                       generator_at(spec, e.index).str());
    }
  }
  bool rejected = false;
  try {
    padic_candidate_atoms({2, IntSeq::constant(3), IntSeq::affine(1, 0)}, 3);
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::HypothesisViolated;
  }
  rec.check(rejected, "constant numerators rejected: numerators bounded");
  return rec.finish();
}

ClaimOutcome c11(const VerifierParams& params) {
  Recorder rec("C11", "cyclic-factorization-counts");
  rec.param("cap", static_cast<std::int64_t>(params.cap));
  const PositiveRational r = PositiveRational::make(2, 3);
  const Rational x(4, 3);
  for (std::uint64_t cap = 1; cap <= params.cap; ++cap) {
    auto zs = cyclic_factorizations(r, x, cap);
    bool exact = std::all_of(zs.begin(), zs.end(),
                             [&](const Factorization& z) { return evaluate(z) == x; });
    std::set<Integer> lengths;
    for (const auto& z : zs) lengths.insert(z.length());
    rec.check(exact, "cap " + std::to_string(cap) + ": " + std::to_string(zs.size()) +
                         " factorizations, lengths " +
                         join_numbers(std::vector<Integer>(lengths.begin(), lengths.end())));
  }
  Factorization z;
  z.add(r, 2);
  std::string chain = z.str();
  for (std::uint64_t t = 1; t < std::min<std::uint64_t>(params.cap, 4); ++t) {
    z = cyclic_trade(r, z, t, TradeDirection::Up);
    chain += " -> " + z.str();
  }
  rec.check(evaluate(z) == x, "trade chain " + chain + ", each equal to 4/3");
  return rec.finish(ClaimStatus::DataOnly);
}

ClaimOutcome c12(const VerifierParams&) {
  Recorder rec("C12", "bounded-but-not-finite-factorizations");
  const FamilySpec spec = family::BfNotFf{};
  std::size_t previous = 0;
  {
    Factorization z;
    z.add(PositiveRational::make(1, 3), 2);
    rec.check(!atoms(truncate(spec, 2)).empty() && evaluate(z) == Rational(2, 3),
              "2/3 = " + z.str() + ", so 2/3 is not an atom");
  }
  for (std::size_t n = 2; n <= 12; n += 2) {
    FgMonoid m = truncate(spec, n);
    const auto& gens = m.generators();
    // p = 3 contributes 1/3 and 2/3 = 1/3 + 1/3; every other generator is an atom.
    std::vector<PositiveRational> expected;
    for (const auto& g : gens) {
      if (g != PositiveRational::make(2, 3)) expected.push_back(g);
    }
    rec.check(atoms(m) == expected,
              "N = " + std::to_string(n) + ": atoms are the generators other than 2/3", false);
    rec.check(std::all_of(gens.begin(), gens.end(),
                          [](const auto& a) { return a.value() >= Rational(1, 3); }),
              "every atom >= 1/3", false);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      for (std::size_t j = i + 1; j < expected.size(); ++j) {
        if (expected[i].value() + expected[j].value() == Rational(1)) ++pairs;
      }
    }
    rec.check(n == 2 || pairs > previous, "N = " + std::to_string(n) + ": " +
                                              std::to_string(pairs) + " atom pairs sum to 1");
    previous = pairs;
    for (int x : {1, 2}) {
      auto ls = lengths(m, Rational(x));
      rec.check(!ls.empty() && ls.back() <= 3 * x,
                "N = " + std::to_string(n) + ": L(" + std::to_string(x) + ") = " +
                    join_numbers(ls) + " within 1.." + std::to_string(3 * x),
                n == 12);
    }
  }
  return rec.finish();
}

ClaimOutcome c13(const VerifierParams& params) {
  Recorder rec("C13", "generalized-cyclic-common-prime-embedding");
  rec.param("cap", static_cast<std::int64_t>(params.cap));
  const std::vector<std::vector<PositiveRational>> families = {
      {PositiveRational::make(2, 5), PositiveRational::make(4, 7)},
      {PositiveRational::make(6, 5), PositiveRational::make(9, 7), PositiveRational::make(3, 2)},
  };
  for (const auto& rs : families) {
    for (std::size_t i = 1; i <= rs.size(); ++i) {
      for (std::uint64_t m = 1; m <= params.cap; ++m) {
        auto e = generalized_cyclic_embed(rs, i, m);
        Rational base(e.prime, e.denominator_product);
        rec.check(pow(rs[i - 1], m).value() == Rational(e.coefficient) * pow(base, m),
                  "(" + rs[i - 1].str() + ")^" + std::to_string(m) + " = " +
                      e.coefficient.get_str() + " * (" + base.str() + ")^" + std::to_string(m),
                  m <= 2 && rs.size() == 2);
      }
    }
  }
  bool gcd_one = false;
  try {
    generalized_cyclic_embed({PositiveRational::make(2, 77), PositiveRational::make(3, 77)}, 1, 1);
  } catch (const Error& e) {
    gcd_one = e.code() == ErrorCode::GcdOne;
  }
  rec.check(gcd_one, "(2/77, 3/77): numerators coprime, no embedding");
  return rec.finish();
}

ClaimOutcome c14(const VerifierParams&) {
  Recorder rec("C14", "coprime-numerators-not-hereditarily-atomic");
  for (std::uint64_t k = 1; k <= 4; ++k) {
    Integer two = pow(Integer(2), k);
    Integer three = pow(Integer(3), k);
    Integer eleven = pow(Integer(11), k);
    NumericalSemigroup ns({two, three});
    Integer f = frobenius(ns);
    Integer bound = (two - 1) * (three - 1);
    rec.check(f < bound && bound < eleven, "F(<" + two.get_str() + ", " + three.get_str() +
                                               ">) = " + f.get_str() + " < " + bound.get_str() +
                                               " < " + eleven.get_str(),
              false);
    auto rep = find_representation(ns, eleven);
    if (!rec.check(rep.has_value(), eleven.get_str() + " is representable", false)) continue;
    const Integer& alpha = (*rep)[0];
    const Integer& beta = (*rep)[1];
    PositiveRational a = pow(PositiveRational::make(2, 77), k);
    PositiveRational b = pow(PositiveRational::make(3, 77), k);
    Rational target(1, pow(Integer(7), k));
    bool exact = alpha * two + beta * three == eleven &&
                 Rational(alpha) * a.value() + Rational(beta) * b.value() == target &&
                 contains(FgMonoid({a, b}), target);
    rec.check(exact, alpha.get_str() + "*" + two.get_str() + " + " + beta.get_str() + "*" +
                         three.get_str() + " = " + eleven.get_str() + ", so " + target.str() +
                         " = " + alpha.get_str() + "*(" + a.str() + ") + " + beta.get_str() +
                         "*(" + b.str() + ")");
  }
  return rec.finish();
}

ClaimOutcome c15(const VerifierParams&) {
  Recorder rec("C15", "finitely-generated-is-scaled-numerical-semigroup");
  std::vector<FgMonoid> monoids = {FgMonoid::parse("1/2,2/3"), FgMonoid::parse("2/3"),
                                   FgMonoid::parse("2/3,2/5")};
  std::mt19937 rng(15);
  for (int i = 0; i < 20; ++i) {
    std::vector<PositiveRational> gens;
    const std::size_t count = 1 + rng() % 4;
    for (std::size_t j = 0; j < count; ++j) {
      gens.push_back(PositiveRational::make(1 + rng() % 30, 1 + rng() % 30));
    }
    monoids.emplace_back(std::move(gens));
  }
  for (std::size_t i = 0; i < monoids.size(); ++i) {
    const auto& m = monoids[i];
    auto form = to_scaled_integer(m);
    const auto& ns = form.semigroup.generators();
    bool aligned = ns.size() == m.generators().size() && form.semigroup.gcd() == 1;
    for (std::size_t j = 0; aligned && j < ns.size(); ++j) {
      aligned = Rational(ns[j]) * form.scale.value() == m.generators()[j].value();
    }
    // Every y up to 60, then 100 random points of [0, 3 * max generator].
    ResidueTable table(ns);
    std::vector<Integer> probes;
    for (int y = 0; y <= 60; ++y) probes.emplace_back(y);
    gmp_randclass draw(gmp_randinit_mt);
    draw.seed(static_cast<unsigned long>(i + 1));
    for (int k = 0; k < 100; ++k) probes.push_back(draw.get_z_range(3 * ns.back() + 1));
    bool agree = true;
    for (const auto& y : probes) {
      Rational x = Rational(y) * form.scale.value();
      agree = agree && contains(m, x) == table.contains(y) &&
              !contains(m, x + form.scale.value() / Rational(2));
    }
    rec.check(aligned && agree,
              "<" + join(m.generators()) + "> = " + form.scale.str() + " * <" +
                  join_numbers(ns) + ">",
              i < 3);
  }
  return rec.finish();
}

using ClaimFn = std::function<ClaimOutcome(const VerifierParams&)>;

const std::vector<std::pair<std::string, ClaimFn>>& registry() {
  static const std::vector<std::pair<std::string, ClaimFn>> claims = {
      {"C1", c1},   {"C2", c2},   {"C3", c3},   {"C4", c4},   {"C5", c5},
      {"C6", c6},   {"C7", c7},   {"C8", c8},   {"C9", c9},   {"C10", c10},
      {"C11", c11}, {"C12", c12}, {"C13", c13}, {"C14", c14}, {"C15", c15},
  };
  return claims;
}

}  // namespace

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Confirmed:
      return "confirmed";
    case ClaimStatus::Refuted:
      return "refuted";
    case ClaimStatus::DataOnly:
      return "data-only";
    case ClaimStatus::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::vector<std::string> claim_ids() {
  std::vector<std::string> out;
  for (const auto& [id, fn] : registry()) out.push_back(id);
  return out;
}

std::vector<ClaimOutcome> run_claims(const std::vector<std::string>& ids,
                                     const VerifierParams& params) {
  const auto& claims = registry();
  std::vector<bool> wanted(claims.size(), false);
  for (const auto& id : ids) {
    if (id == "all") {
      std::fill(wanted.begin(), wanted.end(), true);
      continue;
    }
    auto it = std::find_if(claims.begin(), claims.end(),
                           [&](const auto& c) { return c.first == id; });
    if (it == claims.end()) throw Error(ErrorCode::UnknownClaim, "no claim named " + id);
    wanted[static_cast<std::size_t>(it - claims.begin())] = true;
  }
  std::vector<ClaimOutcome> out;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    if (!wanted[i]) continue;
    try {
      out.push_back(claims[i].second(params));
    } catch (const Error& e) {
      ClaimOutcome failed;
      failed.claim_id = claims[i].first;
      failed.status = ClaimStatus::Inconclusive;
      failed.witnesses.push_back(std::string("could not complete: ") + e.what());
      out.push_back(std::move(failed));
    }
  }
  return out;
}

}  // namespace puiseux
