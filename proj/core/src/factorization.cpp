#include "puiseux/factorization.hpp"

#include "puiseux/error.hpp"

namespace puiseux {

void Factorization::add(const PositiveRational& atom, const Integer& count) {
  if (sgn(count) < 0) {
    throw Error(ErrorCode::PreconditionViolated, "negative multiplicity");
  }
  if (count == 0) return;
  terms_[atom] += count;
}

void Factorization::remove(const PositiveRational& atom, const Integer& count) {
  auto it = terms_.find(atom);
  Integer have = it == terms_.end() ? Integer(0) : it->second;
  if (have < count) {
    throw Error(ErrorCode::InsufficientMultiplicity,
                "need " + count.get_str() + " copies of " + atom.str() + ", have " +
                    have.get_str());
  }
  if (have == count) {
    if (it != terms_.end()) terms_.erase(it);
  } else {
    it->second -= count;
  }
}

Integer Factorization::multiplicity(const PositiveRational& atom) const {
  auto it = terms_.find(atom);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Factorization::length() const {
  Integer total = 0;
  for (const auto& [atom, count] : terms_) total += count;
  return total;
}

Factorization Factorization::scaled(const PositiveRational& scale) const {
  Factorization out;
  for (const auto& [atom, count] : terms_) out.add(atom * scale, count);
  return out;
}

std::string Factorization::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [atom, count] : terms_) {
    if (!out.empty()) out += " + ";
    out += count.get_str() + "*(" + atom.str() + ")";
  }
  return out;
}

Rational evaluate(const Factorization& z) {
  Rational total;
  for (const auto& [atom, count] : z.terms()) total += Rational(count) * atom;
  return total;
}

}  // namespace puiseux
