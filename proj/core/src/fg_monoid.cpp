#include "puiseux/fg_monoid.hpp"

#include <algorithm>
#include <set>

#include "puiseux/error.hpp"

namespace puiseux {

namespace {

void require_nonnegative(const Rational& x) {
  if (x.sign() < 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "monoid elements are nonnegative, got " + x.str());
  }
}

std::vector<PositiveRational> at_most(const std::vector<PositiveRational>& gens,
                                      const Rational& x) {
  std::vector<PositiveRational> out;
  for (const auto& g : gens) {
    if (g.value() > x) break;
    out.push_back(g);
  }
  return out;
}

}  // namespace

FgMonoid::FgMonoid(std::vector<PositiveRational> generators)
    : generators_(std::move(generators)) {
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());
}

FgMonoid FgMonoid::parse(std::string_view text) {
  std::vector<PositiveRational> gens;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - start);
    gens.push_back(PositiveRational::parse(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return FgMonoid(std::move(gens));
}

FgMonoid FgMonoid::scaled(const PositiveRational& q) const {
  std::vector<PositiveRational> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(g * q);
  return FgMonoid(std::move(gens));
}

ScaledForm to_scaled_integer(const FgMonoid& monoid) {
  if (monoid.is_trivial()) {
    throw Error(ErrorCode::PreconditionViolated, "the trivial monoid has no scaled form");
  }
  Integer l = 1;
  for (const auto& g : monoid.generators()) l = lcm(l, g.den());
  std::vector<Integer> scaled;
  Integer g = 0;
  for (const auto& gen : monoid.generators()) {
    scaled.push_back(gen.num() * (l / gen.den()));
    g = gcd(g, scaled.back());
  }
  for (auto& s : scaled) s /= g;
  return {PositiveRational::make(g, l), NumericalSemigroup(std::move(scaled))};
}

bool contains(const FgMonoid& monoid, const Rational& x) {
  require_nonnegative(x);
  if (x.is_zero()) return true;
  auto gens = at_most(monoid.generators(), x);
  if (gens.empty()) return false;
  auto form = to_scaled_integer(FgMonoid(std::move(gens)));
  // x / scale must be integral: this is exactly the valuation bound
  // v_p(x) >= min_g v_p(g) at every prime p.
  Rational y = x / form.scale;
  if (!y.is_integer()) return false;
  return contains(form.semigroup, y.num());
}

std::vector<PositiveRational> atoms(const FgMonoid& monoid) {
  const auto& gens = monoid.generators();
  std::vector<PositiveRational> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    // Larger generators cannot take part in a sum equal to gens[i].
    FgMonoid smaller(std::vector<PositiveRational>(gens.begin(), gens.begin() + i));
    if (!contains(smaller, gens[i])) out.push_back(gens[i]);
  }
  return out;
}

std::vector<Factorization> factorizations(const FgMonoid& monoid, const Rational& x) {
  require_nonnegative(x);
  if (x.is_zero()) return {Factorization()};
  auto usable = at_most(atoms(monoid), x);
  if (usable.empty()) return {};
  auto form = to_scaled_integer(FgMonoid(usable));
  Rational y = x / form.scale;
  if (!y.is_integer()) return {};
  std::vector<Factorization> out;
  for (const auto& rep : representations(form.semigroup, y.num())) {
    Factorization z;
    for (std::size_t i = 0; i < usable.size(); ++i) z.add(usable[i], rep[i]);
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<Integer> lengths(const FgMonoid& monoid, const Rational& x) {
  std::set<Integer> seen;
  for (const auto& z : factorizations(monoid, x)) seen.insert(z.length());
  return {seen.begin(), seen.end()};
}

std::vector<PositiveRational> atom_support(const FgMonoid& monoid, const Rational& x) {
  require_nonnegative(x);
  std::vector<PositiveRational> out;
  for (const auto& a : atoms(monoid)) {
    if (a.value() > x) break;
    if (contains(monoid, x - a)) out.push_back(a);
  }
  return out;
}

std::optional<PositiveRational> isomorphism_witness(const FgMonoid& a, const FgMonoid& b) {
  if (a.is_trivial() || b.is_trivial()) {
    if (a.is_trivial() && b.is_trivial()) return PositiveRational::make(1, 1);
    return std::nullopt;
  }
  auto atoms_a = atoms(a);
  auto atoms_b = atoms(b);
  if (atoms_a.size() != atoms_b.size()) return std::nullopt;
  PositiveRational r = atoms_b.front() / atoms_a.front();
  for (std::size_t i = 0; i < atoms_a.size(); ++i) {
    if (atoms_a[i] * r != atoms_b[i]) return std::nullopt;
  }
  return r;
}

}  // namespace puiseux
