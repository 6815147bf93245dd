#include "puiseux/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "puiseux/classify.hpp"
#include "puiseux/error.hpp"
#include "puiseux/primes.hpp"

namespace puiseux {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

}  // namespace

// ---------------------------------------------------------------------------

Approximation approximate(const FamilySpec& spec, const PositiveRational& target,
                          const PositiveRational& eps, std::size_t search_limit) {
  if (classify(spec).dense.verdict != Verdict::Yes) {
    throw Error(ErrorCode::NotDense,
                std::string(family_name(spec)) + " is not known to be dense");
  }
  const PositiveRational bound = std::min(target, eps);
  for (std::size_t n = 1; n <= search_limit; ++n) {
    PositiveRational r = generator_at(spec, n);
    if (r >= bound) continue;
    // m = ceil(target / r) - 1 is the largest m with m * r < target.
    Integer m = Rational(target.value() / r.value()).ceil() - 1;
    return {PositiveRational(Rational(m) * r.value()), n, r, m};
  }
  throw Error(ErrorCode::NotFoundWithinLimit,
              "no generator below " + bound.str() + " among the first " +
                  std::to_string(search_limit));
}

// ---------------------------------------------------------------------------

std::vector<DenseAtomEntry> dense_atom_monoid(const RationalSeq& targets, std::uint64_t j,
                                              std::size_t count) {
  std::vector<DenseAtomEntry> out;
  out.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    Rational target = term(targets, k);
    if (target.sign() <= 0) {
      throw Error(ErrorCode::PreconditionViolated,
                  "target " + std::to_string(k) + " is not positive: " + target.str());
    }
    const std::uint64_t p = partition_prime(j, k);
    const Integer prime = to_integer(p);
    // 2/p^n < 1/k keeps a one-step adjustment of m inside the error bound.
    std::uint64_t n = 1;
    Integer power = prime;
    while (power <= 2 * to_integer(k)) {
      power *= prime;
      ++n;
    }
    const Rational scaled = target * Rational(power);
    Integer m = Rational(scaled + Rational(1, 2)).floor();
    if (mpz_divisible_p(m.get_mpz_t(), prime.get_mpz_t())) {
      Integer below = m - 1;
      Integer above = m + 1;
      if (below < 1 || abs(scaled - Rational(above)) < abs(scaled - Rational(below))) {
        m = above;
      } else {
        m = below;
      }
    }
    PositiveRational generator = PositiveRational::make(m, power);
    Rational error = abs(target - generator.value());
    if (error >= Rational(1, to_integer(k))) {
      throw Error(ErrorCode::PreconditionViolated,
                  "error bound failed at index " + std::to_string(k));
    }
    out.push_back({k, std::move(target), p, n, std::move(m), std::move(generator),
                   std::move(error)});
  }
  return out;
}

FgMonoid monoid_of(const std::vector<DenseAtomEntry>& entries) {
  std::vector<PositiveRational> gens;
  gens.reserve(entries.size());
  for (const auto& e : entries) gens.push_back(e.generator);
  return FgMonoid(std::move(gens));
}

// ---------------------------------------------------------------------------

AntimatterWitness kprimary_antimatter_witness(std::vector<Integer> primes,
                                              std::uint64_t search_limit) {
  if (primes.size() < 2) {
    throw Error(ErrorCode::PreconditionViolated, "need at least two primes, got " +
                                                     std::to_string(primes.size()));
  }
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) {
    throw Error(ErrorCode::PreconditionViolated, "primes must be distinct");
  }
  for (const auto& p : primes) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, p.get_str() + " is not prime");
  }
  const Integer& p = primes[0];
  const Integer& q = primes[1];
  const Integer& largest = primes.back();
  Integer rest = 1;
  for (std::size_t i = 2; i < primes.size(); ++i) rest *= primes[i];

  auto search = [&](const Integer& first, const Integer& step, const Integer& floor,
                    const char* what) -> std::pair<Integer, Integer> {
    Integer value = first;
    for (std::uint64_t k = 1; k <= search_limit; ++k) {
      value += step;
      if (value > floor && is_prime(value)) return {to_integer(k), value};
    }
    throw Error(ErrorCode::NotFoundWithinLimit,
                std::string("no prime ") + what + " within " + std::to_string(search_limit) +
                    " steps");
  };
  auto [m, p_prime] = search(p, q, largest, "p' = m q + p");
  auto [n, q_prime] = search(q, p_prime, p_prime, "q' = n p' + q");

  AntimatterWitness w{primes,
                      p,
                      q,
                      rest,
                      m,
                      n,
                      p_prime,
                      q_prime,
                      PositiveRational::make(1, p * q * rest),
                      Factorization()};
  w.decomposition.add(PositiveRational::make(1, p * p_prime * rest), m);
  w.decomposition.add(PositiveRational::make(1, q * q_prime * rest), n);
  w.decomposition.add(PositiveRational::make(1, p_prime * q_prime * rest), 1);
  if (!verify(w)) {
    throw Error(ErrorCode::PreconditionViolated, "decomposition failed exact verification");
  }
  return w;
}

bool verify(const AntimatterWitness& w) {
  if (!is_prime(w.p_prime) || !is_prime(w.q_prime)) return false;
  if (!(w.q_prime > w.p_prime && w.p_prime > w.primes.back())) return false;
  if (w.p_prime != w.m * w.q + w.p || w.q_prime != w.n * w.p_prime + w.q) return false;
  if (w.p_prime * w.q_prime != w.m * w.q * w.q_prime + w.n * w.p * w.p_prime + w.p * w.q) {
    return false;
  }
  Integer product = 1;
  for (const auto& x : w.primes) product *= x;
  if (w.generator != PositiveRational::make(1, product)) return false;
  return evaluate(w.decomposition) == w.generator.value();
}

PositiveRational sum_kprimary_generator(const std::vector<std::uint64_t>& subset) {
  Rational sum = 0;
  for (auto s : subset) sum += Rational(1, to_integer(nth_prime(s)));
  return PositiveRational(sum);
}

bool sum_kprimary_atom_check(std::uint64_t k, std::vector<std::uint64_t> subset,
                             std::uint64_t n) {
  std::sort(subset.begin(), subset.end());
  if (k == 0 || subset.size() != k ||
      std::adjacent_find(subset.begin(), subset.end()) != subset.end() ||
      subset.front() < 1 || subset.back() > n) {
    throw Error(ErrorCode::PreconditionViolated,
                "S must be a " + std::to_string(k) + "-subset of 1.." + std::to_string(n));
  }
  const PositiveRational target = sum_kprimary_generator(subset);
  Integer total;
  mpz_bin_uiui(total.get_mpz_t(), n, k);
  std::vector<PositiveRational> others;
  for (std::uint64_t rank = 1; rank <= to_uint64(total); ++rank) {
    auto s = colex_subset(k, rank);
    if (s != subset) others.push_back(sum_kprimary_generator(s));
  }
  if (others.empty()) return true;
  // a_S is an atom iff it is not a sum of the other generators: a sum
  // using a_S itself plus anything nonzero overshoots.
  return !contains(FgMonoid(std::move(others)), target.value());
}

// ---------------------------------------------------------------------------

PadicExtraction padic_candidate_atoms(const family::PAdic& spec, std::size_t n) {
  validate(FamilySpec(spec));
  const IntSeq& nums = spec.numerators;
  auto bounded = nums.is_bounded();
  if (bounded != false) {
    throw Error(ErrorCode::HypothesisViolated,
                bounded ? "numerators bounded" : "numerators not certifiably unbounded");
  }
  auto q = nums.prime_power_base();
  if (!q) {
    throw Error(ErrorCode::HypothesisViolated, "numerators are not powers of a single prime");
  }
  if (*q == spec.p) {
    throw Error(ErrorCode::HypothesisViolated, "numerator prime equals p");
  }
  if (nums.tail_form().is_strictly_increasing() != true) {
    throw Error(ErrorCode::HypothesisViolated,
                "numerators are not strictly increasing on their closed-form tail");
  }

  // From tail_start on the numerators increase, so the minimum over all
  // j > i is attained inside (i, max(tail_start, i + 1)].
  const std::size_t tail = nums.tail_start();
  const std::size_t window = std::max(tail, n + 1);
  std::vector<Integer> values(window + 1);
  for (std::size_t i = 1; i <= window; ++i) values[i] = nums.at(i);

  PadicExtraction out{*q, {}, {}, padic_generators_decreasing(spec).value_or(false)};
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t upper = std::max(tail, i + 1);
    std::size_t via = i + 1;
    for (std::size_t j = i + 1; j <= upper; ++j) {
      if (values[j] <= values[via]) via = j;
    }
    if (values[i] < values[via]) {
      out.kept.push_back(i);
      continue;
    }
    Integer beta_i = multiplicity(values[i], *q);
    Integer beta_m = multiplicity(values[via], *q);
    Integer alpha_i = spec.exponents.at(i);
    Integer alpha_m = spec.exponents.at(via);
    out.excluded.push_back({i, via, alpha_m - alpha_i, beta_i - beta_m});
  }
  return out;
}

bool verify(const family::PAdic& spec, const PadicExpression& e) {
  if (sgn(e.p_exponent) < 0 || sgn(e.q_exponent) < 0) return false;
  auto q = spec.numerators.prime_power_base();
  if (!q) return false;
  const FamilySpec s = spec;
  Integer factor = pow(spec.p, to_uint64(e.p_exponent)) * pow(*q, to_uint64(e.q_exponent));
  return generator_at(s, e.index).value() == Rational(factor) * generator_at(s, e.via).value();
}

// ---------------------------------------------------------------------------

CyclicEmbedding generalized_cyclic_embed(const std::vector<PositiveRational>& rs,
                                         std::size_t i, std::uint64_t m) {
  if (i == 0 || i > rs.size()) {
    throw Error(ErrorCode::BadIndex, "base index " + std::to_string(i) + " outside 1.." +
                                         std::to_string(rs.size()));
  }
  if (m == 0) throw Error(ErrorCode::PreconditionViolated, "exponent must be positive");
  Integer g = 0;
  Integer dens = 1;
  for (const auto& r : rs) {
    g = gcd(g, r.num());
    dens *= r.den();
  }
  if (g == 1) {
    throw Error(ErrorCode::GcdOne, "numerators have gcd 1; no common prime to embed through");
  }
  const Integer p = smallest_prime_factor(g);
  const PositiveRational& r = rs[i - 1];
  Integer c = pow(Integer(r.num() / p), m);
  for (std::size_t j = 0; j < rs.size(); ++j) {
    if (j != i - 1) c *= pow(rs[j].den(), m);
  }
  if (pow(r, m).value() != Rational(c) * pow(Rational(p, dens), m)) {
    throw Error(ErrorCode::PreconditionViolated, "embedding coefficient failed verification");
  }
  return {c, p, dens};
}

// ---------------------------------------------------------------------------

namespace {

struct Support {
  std::vector<Integer> finite;
  std::optional<PrimeStream> stream;
  /// Infinitely many primes, or unbounded powers of some prime.
  bool unbounded;
  std::string text;
};

std::string describe(const PrimeStream& s) {
  return std::visit(overloaded{
                        [](const primes::All&) { return std::string("all primes"); },
                        [](const primes::Residue& r) {
                          return "primes = " + std::to_string(r.residue) + " mod " +
                                 std::to_string(r.modulus);
                        },
                        [](const primes::PartitionClass& c) {
                          return "prime partition class " + std::to_string(c.j);
                        },
                    },
                    s);
}

std::optional<Support> support_of(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::PowerDenominator& f) -> std::optional<Support> {
            return Support{{f.q}, std::nullopt, true, "{" + f.q.get_str() + "}"};
          },
          [](const family::PAdic& f) -> std::optional<Support> {
            bool unbounded = f.numerators.is_bounded() == true;
            if (auto q = f.numerators.prime_power_base(); q && *q != f.p) unbounded = true;
            if (f.numerators.length() || f.exponents.length()) unbounded = false;
            return Support{{f.p}, std::nullopt, unbounded, "{" + f.p.get_str() + "}"};
          },
          [](const family::ElementaryPrimary& f) -> std::optional<Support> {
            return Support{{}, f.primes, true, describe(f.primes)};
          },
          [](const auto&) -> std::optional<Support> { return std::nullopt; },
      },
      spec);
}

/// nullopt when disjointness cannot be decided.
std::optional<bool> disjoint(const Support& a, const Support& b) {
  for (const auto& x : a.finite) {
    for (const auto& y : b.finite) {
      if (x == y) return false;
    }
    if (b.stream && x.fits_ulong_p() && contains(*b.stream, x.get_ui())) return false;
  }
  for (const auto& y : b.finite) {
    if (a.stream && y.fits_ulong_p() && contains(*a.stream, y.get_ui())) return false;
  }
  if (!a.stream || !b.stream) return true;
  if (std::holds_alternative<primes::All>(*a.stream) ||
      std::holds_alternative<primes::All>(*b.stream)) {
    return false;
  }
  if (auto x = std::get_if<primes::Residue>(&*a.stream)) {
    if (auto y = std::get_if<primes::Residue>(&*b.stream)) {
      std::uint64_t g = std::gcd(x->modulus, y->modulus);
      return x->residue % g != y->residue % g;
    }
  }
  if (auto x = std::get_if<primes::PartitionClass>(&*a.stream)) {
    if (auto y = std::get_if<primes::PartitionClass>(&*b.stream)) return x->j != y->j;
  }
  return std::nullopt;
}

}  // namespace

std::optional<NonIsomorphismCertificate> disjoint_prime_noniso(const FamilySpec& a,
                                                               const FamilySpec& b) {
  validate(a);
  validate(b);
  auto sa = support_of(a);
  auto sb = support_of(b);
  if (!sa || !sb) return std::nullopt;
  if (disjoint(*sa, *sb) != true) return std::nullopt;
  if (!sa->unbounded && !sb->unbounded) return std::nullopt;
  const Support& wide = sa->unbounded ? *sa : *sb;
  return NonIsomorphismCertificate{
      sa->text, sb->text,
      "denominator prime supports are disjoint and " + wide.text +
          " carries unbounded denominators; multiplying by a fixed rational removes only "
          "finitely many bounded prime powers, so neither monoid maps onto the other"};
}

}  // namespace puiseux
