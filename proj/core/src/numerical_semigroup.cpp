#include "puiseux/numerical_semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "puiseux/error.hpp"

namespace puiseux {

namespace {

std::size_t residue_of(const Integer& x, std::size_t modulus) {
  return static_cast<std::size_t>(mpz_fdiv_ui(x.get_mpz_t(), modulus));
}

/// gcd of g[0..i] for each i.
std::vector<Integer> prefix_gcds(const std::vector<Integer>& gens) {
  std::vector<Integer> out(gens.size());
  Integer g = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    g = ::gcd(g, gens[i]);
    out[i] = g;
  }
  return out;
}

/// Membership by bounded depth-first search; used only when the smallest
/// generator is too large for a residue table.
bool exists_dfs(const std::vector<Integer>& gens, const std::vector<Integer>& gcds,
                std::size_t idx, const Integer& rem) {
  if (rem == 0) return true;
  if (!mpz_divisible_p(rem.get_mpz_t(), gcds[idx].get_mpz_t())) return false;
  if (idx == 0) return true;
  Integer c = rem / gens[idx];
  Integer next = rem - c * gens[idx];
  while (true) {
    if (exists_dfs(gens, gcds, idx - 1, next)) return true;
    if (c == 0) return false;
    --c;
    next += gens[idx];
  }
}

/// Ascending generators not exceeding x.
std::vector<Integer> usable(const std::vector<Integer>& gens, const Integer& x) {
  std::vector<Integer> out;
  for (const auto& g : gens) {
    if (g > x) break;
    out.push_back(g);
  }
  return out;
}

class RepresentationEnumerator {
 public:
  RepresentationEnumerator(const std::vector<Integer>& gens, const Integer& x,
                           bool first_only = false)
      : gens_(gens), gcds_(prefix_gcds(gens)), current_(gens.size()), first_only_(first_only) {
    if (gens_.front() <= ResidueTable::kMaxModulus) {
      ResidueTable table({gens_.front()});
      tables_.push_back(table);
      for (std::size_t i = 1; i < gens_.size(); ++i) {
        table.add(gens_[i]);
        tables_.push_back(table);
      }
    }
    if (reachable(gens_.size() - 1, x)) walk(gens_.size() - 1, x);
  }

  std::vector<Representation> take() { return std::move(out_); }

 private:
  bool reachable(std::size_t idx, const Integer& rem) const {
    if (!mpz_divisible_p(rem.get_mpz_t(), gcds_[idx].get_mpz_t())) return false;
    if (!tables_.empty()) return tables_[idx].contains(rem);
    return true;
  }

  void walk(std::size_t idx, const Integer& rem) {
    if (idx == 0) {
      current_[0] = rem / gens_[0];
      out_.push_back(current_);
      return;
    }
    Integer c = 0;
    Integer next = rem;
    while (sgn(next) >= 0 && !(first_only_ && !out_.empty())) {
      if (reachable(idx - 1, next)) {
        current_[idx] = c;
        walk(idx - 1, next);
      }
      ++c;
      next -= gens_[idx];
    }
    current_[idx] = 0;
  }

  const std::vector<Integer>& gens_;
  std::vector<Integer> gcds_;
  std::vector<ResidueTable> tables_;
  Representation current_;
  bool first_only_;
  std::vector<Representation> out_;
};

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Integer> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw Error(ErrorCode::PreconditionViolated,
                "a numerical semigroup needs at least one generator");
  }
  for (const auto& g : generators_) {
    if (sgn(g) <= 0) {
      throw Error(ErrorCode::NonPositive, "generator " + g.get_str() + " is not positive");
    }
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view text) {
  std::vector<Integer> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - start);
    gens.push_back(parse_integer(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return NumericalSemigroup(std::move(gens));
}

Integer NumericalSemigroup::gcd() const {
  Integer g = 0;
  for (const auto& x : generators_) g = ::gcd(g, x);
  return g;
}

ResidueTable::ResidueTable(const std::vector<Integer>& generators) {
  if (generators.empty()) {
    throw Error(ErrorCode::PreconditionViolated, "residue table needs a generator");
  }
  const Integer& modulus = generators.front();
  if (modulus > kMaxModulus) {
    throw Error(ErrorCode::PreconditionViolated,
                "residue table modulus " + modulus.get_str() + " is too large");
  }
  weights_.assign(modulus.get_ui(), std::nullopt);
  weights_[0] = Integer(0);
  for (std::size_t i = 1; i < generators.size(); ++i) add(generators[i]);
}

void ResidueTable::add(const Integer& generator) {
  const std::size_t m = modulus();
  const std::size_t step = residue_of(generator, m);
  if (step == 0) return;
  const std::size_t d = std::gcd(m, step);
  for (std::size_t r = 0; r < d; ++r) {
    std::optional<std::size_t> best;
    for (std::size_t q = r; q < m; q += d) {
      if (weights_[q] && (!best || *weights_[q] < *weights_[*best])) best = q;
    }
    if (!best) continue;
    Integer n = *weights_[*best];
    std::size_t pos = *best;
    for (std::size_t j = 1; j < m / d; ++j) {
      n += generator;
      pos = (pos + step) % m;
      if (weights_[pos] && *weights_[pos] < n) n = *weights_[pos];
      weights_[pos] = n;
    }
  }
}

bool ResidueTable::contains(const Integer& x) const {
  if (sgn(x) < 0) return false;
  const auto& w = weights_[residue_of(x, modulus())];
  return w && *w <= x;
}

std::vector<Integer> minimal_generators(const NumericalSemigroup& semigroup) {
  const auto& gens = semigroup.generators();
  std::vector<Integer> kept{gens.front()};
  if (gens.front() <= ResidueTable::kMaxModulus) {
    ResidueTable table(kept);
    for (std::size_t i = 1; i < gens.size(); ++i) {
      if (table.contains(gens[i])) continue;
      kept.push_back(gens[i]);
      table.add(gens[i]);
    }
    return kept;
  }
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (!contains(NumericalSemigroup(kept), gens[i])) kept.push_back(gens[i]);
  }
  return kept;
}

Integer frobenius(const NumericalSemigroup& semigroup) {
  if (!semigroup.is_cofinite()) {
    throw Error(ErrorCode::NotCofinite,
                "generators have gcd " + semigroup.gcd().get_str());
  }
  auto atoms = minimal_generators(semigroup);
  if (atoms.front() == 1) return -1;
  if (atoms.size() == 2) return atoms[0] * atoms[1] - atoms[0] - atoms[1];
  ResidueTable table(atoms);
  Integer largest = 0;
  for (std::size_t r = 0; r < table.modulus(); ++r) {
    largest = std::max(largest, *table.weight(r));
  }
  return largest - atoms.front();
}

bool contains(const NumericalSemigroup& semigroup, const Integer& x) {
  if (sgn(x) < 0) {
    throw Error(ErrorCode::PreconditionViolated, "membership of a negative integer");
  }
  if (x == 0) return true;
  auto gens = usable(semigroup.generators(), x);
  if (gens.empty()) return false;
  Integer g = 0;
  for (const auto& v : gens) g = ::gcd(g, v);
  if (!mpz_divisible_p(x.get_mpz_t(), g.get_mpz_t())) return false;
  Integer y = x / g;
  for (auto& v : gens) v /= g;
  if (gens.front() == 1) return true;
  if (gens.front() <= ResidueTable::kMaxModulus) return ResidueTable(gens).contains(y);
  return exists_dfs(gens, prefix_gcds(gens), gens.size() - 1, y);
}

std::vector<Representation> representations(const NumericalSemigroup& semigroup,
                                            const Integer& x) {
  if (sgn(x) < 0) {
    throw Error(ErrorCode::PreconditionViolated, "representations of a negative integer");
  }
  const auto& all = semigroup.generators();
  if (x == 0) return {Representation(all.size(), 0)};
  auto gens = usable(all, x);
  if (gens.empty()) return {};
  auto partial = RepresentationEnumerator(gens, x).take();
  for (auto& rep : partial) rep.resize(all.size(), 0);
  return partial;
}

std::optional<Representation> find_representation(const NumericalSemigroup& semigroup,
                                                  const Integer& x) {
  if (sgn(x) < 0) {
    throw Error(ErrorCode::PreconditionViolated, "representation of a negative integer");
  }
  const auto& all = semigroup.generators();
  if (x == 0) return Representation(all.size(), 0);
  auto gens = usable(all, x);
  if (gens.empty()) return std::nullopt;
  auto found = RepresentationEnumerator(gens, x, true).take();
  if (found.empty()) return std::nullopt;
  found.front().resize(all.size(), 0);
  return found.front();
}

Integer evaluate(const NumericalSemigroup& semigroup, const Representation& coefficients) {
  const auto& gens = semigroup.generators();
  if (coefficients.size() != gens.size()) {
    throw Error(ErrorCode::PreconditionViolated, "coefficient vector length mismatch");
  }
  Integer total = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) total += coefficients[i] * gens[i];
  return total;
}

}  // namespace puiseux
