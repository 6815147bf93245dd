#include "puiseux/serialize.hpp"

#include <limits>
#include <string>

#include "puiseux/error.hpp"

namespace puiseux {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) malformed(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::uint64_t small_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    malformed(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

PositiveRational positive_from_json(const Json& j) {
  if (j.is_string()) return PositiveRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return PositiveRational::make(integer_from_json(j), 1);
  malformed("expected a rational \"n/d\"");
}

}  // namespace

Json integer_json(const Integer& value) {
  if (value.fits_slong_p()) return Json(static_cast<std::int64_t>(value.get_si()));
  return Json(value.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  malformed("expected an integer");
}

Json rational_json(const Rational& value) { return Json(value.str()); }

Json to_json(const Factorization& z) {
  Json factors = Json::array();
  for (const auto& [atom, mult] : z.terms()) {
    factors.push_back({{"atom", atom.str()}, {"mult", integer_json(mult)}});
  }
  return {{"factors", factors}, {"length", integer_json(z.length())}};
}

Factorization factorization_from_json(const Json& j) {
  Factorization z;
  const Json& factors = field(j, "factors");
  if (!factors.is_array()) malformed("\"factors\" must be an array");
  for (const auto& f : factors) {
    z.add(positive_from_json(field(f, "atom")), integer_from_json(field(f, "mult")));
  }
  return z;
}

Json to_json(const IntSeq& seq) {
  return std::visit(
      overloaded{
          [](const seq::Constant& s) -> Json {
            return {{"kind", "constant"}, {"c", integer_json(s.c)}};
          },
          [](const seq::Geometric& s) -> Json {
            return {{"kind", "geometric"}, {"c", integer_json(s.c)}, {"q", integer_json(s.q)}};
          },
          [](const seq::Power& s) -> Json {
            return {{"kind", "power"}, {"q", integer_json(s.q)}};
          },
          [](const seq::Affine& s) -> Json {
            return {{"kind", "affine"}, {"a", integer_json(s.a)}, {"b", integer_json(s.b)}};
          },
          [](const seq::AffineExponent& s) -> Json {
            return {{"kind", "affine-exponent"},
                    {"q", integer_json(s.q)},
                    {"a", integer_json(s.a)},
                    {"b", integer_json(s.b)}};
          },
          [](const seq::Explicit& s) -> Json {
            Json values = Json::array();
            for (const auto& v : s.prefix) values.push_back(integer_json(v));
            Json out = {{"kind", "explicit"}, {"values", values}};
            if (s.tail) out["tail"] = to_json(*s.tail);
            return out;
          },
      },
      seq.form());
}

IntSeq int_seq_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "constant") return IntSeq::constant(integer_from_json(field(j, "c")));
  if (kind == "geometric") {
    return IntSeq::geometric(integer_from_json(field(j, "c")), integer_from_json(field(j, "q")));
  }
  if (kind == "power") return IntSeq::power(integer_from_json(field(j, "q")));
  if (kind == "affine") {
    return IntSeq::affine(integer_from_json(field(j, "a")), integer_from_json(field(j, "b")));
  }
  if (kind == "affine-exponent") {
    return IntSeq::affine_exponent(integer_from_json(field(j, "q")),
                                   integer_from_json(field(j, "a")),
                                   integer_from_json(field(j, "b")));
  }
  if (kind == "explicit") {
    const Json& values = field(j, "values");
    if (!values.is_array()) malformed("\"values\" must be an array");
    std::vector<Integer> prefix;
    for (const auto& v : values) prefix.push_back(integer_from_json(v));
    std::optional<IntSeq> tail;
    if (j.contains("tail")) tail = int_seq_from_json(j.at("tail"));
    return IntSeq::explicit_values(std::move(prefix), std::move(tail));
  }
  malformed("unknown sequence kind \"" + kind + "\"");
}

Json to_json(const PrimeStream& stream) {
  return std::visit(overloaded{
                        [](const primes::All&) -> Json { return {{"kind", "all"}}; },
                        [](const primes::Residue& r) -> Json {
                          return {{"kind", "residue"},
                                  {"modulus", r.modulus},
                                  {"residue", r.residue}};
                        },
                        [](const primes::PartitionClass& c) -> Json {
                          return {{"kind", "partition-class"}, {"j", c.j}};
                        },
                    },
                    stream);
}

PrimeStream prime_stream_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "all") return primes::All{};
  if (kind == "residue") return primes::Residue{small_field(j, "modulus"), small_field(j, "residue")};
  if (kind == "partition-class") return primes::PartitionClass{small_field(j, "j")};
  malformed("unknown prime stream kind \"" + kind + "\"");
}

Json to_json(const FamilySpec& spec) {
  Json out = {{"family", std::string(family_name(spec))}};
  std::visit(overloaded{
                 [&](const family::PowerDenominator& f) { out["q"] = integer_json(f.q); },
                 [&](const family::ElementaryPrimary& f) { out["primes"] = to_json(f.primes); },
                 [&](const family::ElementaryKPrimary& f) { out["k"] = f.k; },
                 [&](const family::PartitionedKPrimary& f) { out["k"] = f.k; },
                 [&](const family::SumKPrimary& f) { out["k"] = f.k; },
                 [&](const family::PAdic& f) {
                   out["p"] = integer_json(f.p);
                   out["numerators"] = to_json(f.numerators);
                   out["exponents"] = to_json(f.exponents);
                 },
                 [&](const family::SquaredPowerPair& f) { out["p"] = integer_json(f.p); },
                 [&](const family::Cyclic& f) { out["r"] = f.r.str(); },
                 [&](const family::GeneralizedCyclic& f) {
                   Json rs = Json::array();
                   for (const auto& r : f.rs) rs.push_back(r.str());
                   out["r"] = rs;
                 },
                 [&](const family::ExplicitList& f) {
                   Json gens = Json::array();
                   for (const auto& g : f.monoid.generators()) gens.push_back(g.str());
                   out["gens"] = gens;
                 },
                 [](const auto&) {},
             },
             spec);
  return out;
}

FamilySpec family_from_json(const Json& j) {
  try {
    const std::string name = string_field(j, "family");
    FamilySpec spec = [&]() -> FamilySpec {
      if (name == "PowerDenominator") return family::PowerDenominator{integer_from_json(field(j, "q"))};
      if (name == "HalfPrime") return family::HalfPrime{};
      if (name == "TwoAdicOddPrime") return family::TwoAdicOddPrime{};
      if (name == "ElementaryPrimary") {
        return family::ElementaryPrimary{j.contains("primes") ? prime_stream_from_json(j.at("primes"))
                                                              : PrimeStream(primes::All{})};
      }
      if (name == "ElementaryKPrimary") return family::ElementaryKPrimary{small_field(j, "k")};
      if (name == "PartitionedKPrimary") return family::PartitionedKPrimary{small_field(j, "k")};
      if (name == "SumKPrimary") return family::SumKPrimary{small_field(j, "k")};
      if (name == "PAdic") {
        return family::PAdic{integer_from_json(field(j, "p")),
                             int_seq_from_json(field(j, "numerators")),
                             int_seq_from_json(field(j, "exponents"))};
      }
      if (name == "SquaredPowerPair") return family::SquaredPowerPair{integer_from_json(field(j, "p"))};
      if (name == "Cyclic") return family::Cyclic{positive_from_json(field(j, "r"))};
      if (name == "GeneralizedCyclic") {
        const Json& rs = field(j, "r");
        if (!rs.is_array()) malformed("\"r\" must be an array of rationals");
        std::vector<PositiveRational> out;
        for (const auto& r : rs) out.push_back(positive_from_json(r));
        return family::GeneralizedCyclic{std::move(out)};
      }
      if (name == "BfNotFf") return family::BfNotFf{};
      if (name == "ExplicitList") {
        const Json& gens = field(j, "gens");
        if (!gens.is_array()) malformed("\"gens\" must be an array of rationals");
        std::vector<PositiveRational> out;
        for (const auto& g : gens) out.push_back(positive_from_json(g));
        return family::ExplicitList{FgMonoid(std::move(out))};
      }
      malformed("unknown family \"" + name + "\"");
    }();
    return spec;
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
}

namespace {

Json finding_json(const Finding& f) {
  Json out = {{"verdict", std::string(to_string(f.verdict))}};
  out["citation"] = f.citation.empty() ? Json(nullptr) : Json(f.citation);
  if (f.paper_asserted) out["paper_asserted"] = true;
  return out;
}

}  // namespace

Json to_json(const ClassificationReport& r) {
  return {{"dense", finding_json(r.dense)},
          {"atomic", finding_json(r.atomic)},
          {"antimatter", finding_json(r.antimatter)},
          {"strongly_bounded", finding_json(r.strongly_bounded)},
          {"finite", finding_json(r.finite)},
          {"hereditarily_atomic", finding_json(r.hereditarily_atomic)},
          {"justification", r.justification}};
}

Json to_json(const CyclicMembership& membership) {
  return std::visit(overloaded{
                        [](const cyclic::Member& m) -> Json {
                          return {{"result", "member"}, {"witness", to_json(m.witness)}};
                        },
                        [](const cyclic::NonMember& n) -> Json {
                          return {{"result", "non-member"},
                                  {"reason", n.reason},
                                  {"detail", n.detail}};
                        },
                        [](const cyclic::UnknownUpTo& u) -> Json {
                          return {{"result", "unknown"}, {"cap", u.cap}};
                        },
                    },
                    membership);
}

Json to_json(const Approximation& a, const Rational& target) {
  Rational gap = target - a.value.value();
  return {{"value", a.value.str()},
          {"index", a.index},
          {"generator", a.generator.str()},
          {"multiplier", integer_json(a.multiplier)},
          {"gap", gap.str()},
          {"identity", a.value.str() + " = " + a.multiplier.get_str() + "*(" + a.generator.str() +
                           ")"}};
}

Json to_json(const std::vector<DenseAtomEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    out.push_back({{"k", e.k},
                   {"target", e.target.str()},
                   {"prime", e.prime},
                   {"exponent", e.exponent},
                   {"numerator", integer_json(e.numerator)},
                   {"generator", e.generator.str()},
                   {"error", e.error.str()}});
  }
  return out;
}

Json to_json(const AntimatterWitness& w) {
  Json primes = Json::array();
  for (const auto& p : w.primes) primes.push_back(integer_json(p));
  const std::string lhs = w.p_prime.get_str() + "*" + w.q_prime.get_str();
  return {{"primes", primes},
          {"m", integer_json(w.m)},
          {"p_prime", integer_json(w.p_prime)},
          {"n", integer_json(w.n)},
          {"q_prime", integer_json(w.q_prime)},
          {"identity", lhs + " = " + w.m.get_str() + "*" + w.q.get_str() + "*" +
                           w.q_prime.get_str() + " + " + w.n.get_str() + "*" + w.p.get_str() +
                           "*" + w.p_prime.get_str() + " + " + w.p.get_str() + "*" +
                           w.q.get_str()},
          {"generator", w.generator.str()},
          {"decomposition", to_json(w.decomposition)},
          {"decomposition_identity", w.generator.str() + " = " + w.decomposition.str()}};
}

Json to_json(const PadicExtraction& e, const family::PAdic& spec) {
  Json excluded = Json::array();
  const FamilySpec s = spec;
  for (const auto& x : e.excluded) {
    excluded.push_back({{"index", x.index},
                        {"via", x.via},
                        {"p_exponent", integer_json(x.p_exponent)},
                        {"q_exponent", integer_json(x.q_exponent)},
                        {"identity", generator_at(s, x.index).str() + " = " + spec.p.get_str() +
                                         "^" + x.p_exponent.get_str() + " * " + e.q.get_str() +
                                         "^" + x.q_exponent.get_str() + " * " +
                                         generator_at(s, x.via).str()}});
  }
  return {{"q", integer_json(e.q)},
          {"kept", e.kept},
          {"excluded", excluded},
          {"decreasing", e.decreasing}};
}

Json to_json(const CyclicEmbedding& e, const std::vector<PositiveRational>& rs, std::size_t i,
             std::uint64_t m) {
  Rational base(e.prime, e.denominator_product);
  return {{"coefficient", integer_json(e.coefficient)},
          {"prime", integer_json(e.prime)},
          {"base", base.str()},
          {"identity", "(" + rs.at(i - 1).str() + ")^" + std::to_string(m) + " = " +
                           e.coefficient.get_str() + " * (" + base.str() + ")^" +
                           std::to_string(m)}};
}

Json to_json(const NonIsomorphismCertificate& c) {
  return {{"support_a", c.support_a}, {"support_b", c.support_b}, {"reason", c.reason}};
}

Json to_json(const ClaimOutcome& o) {
  Json params = Json::object();
  for (const auto& [k, v] : o.parameters) params[k] = v;
  return {{"claim_id", o.claim_id},
          {"status", std::string(to_string(o.status))},
          {"witnesses", o.witnesses},
          {"parameters", params},
          {"citation", o.citation}};
}

}  // namespace puiseux
