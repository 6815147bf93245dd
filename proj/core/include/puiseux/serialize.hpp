#pragma once

#include <nlohmann/json.hpp>

#include "puiseux/classify.hpp"
#include "puiseux/constructions.hpp"
#include "puiseux/cyclic.hpp"
#include "puiseux/factorization.hpp"
#include "puiseux/family.hpp"
#include "puiseux/rational.hpp"
#include "puiseux/sequences.hpp"
#include "puiseux/verifier.hpp"

namespace puiseux {

using Json = nlohmann::json;

/// Integers serialize as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; both forms parse back.
Json integer_json(const Integer& value);
Integer integer_from_json(const Json& j);

/// Rationals are "n/d" strings ("0" for zero).
Json rational_json(const Rational& value);

/// {"factors": [{"atom": "n/d", "mult": k}, ...], "length": L}
Json to_json(const Factorization& z);
Factorization factorization_from_json(const Json& j);

/// {"kind": "constant" | "geometric" | "power" | "affine" |
///  "affine-exponent" | "explicit", ...}
Json to_json(const IntSeq& seq);
IntSeq int_seq_from_json(const Json& j);

/// {"kind": "all"} | {"kind": "residue", "modulus", "residue"} |
/// {"kind": "partition-class", "j"}
Json to_json(const PrimeStream& stream);
PrimeStream prime_stream_from_json(const Json& j);

/// {"family": "<name>", ...fields}. Throws ParseError on malformed input.
Json to_json(const FamilySpec& spec);
FamilySpec family_from_json(const Json& j);

Json to_json(const ClassificationReport& report);
Json to_json(const CyclicMembership& membership);
Json to_json(const Approximation& a, const Rational& target);
Json to_json(const std::vector<DenseAtomEntry>& entries);
Json to_json(const AntimatterWitness& w);
Json to_json(const PadicExtraction& e, const family::PAdic& spec);
Json to_json(const CyclicEmbedding& e, const std::vector<PositiveRational>& rs, std::size_t i,
             std::uint64_t m);
Json to_json(const NonIsomorphismCertificate& c);
Json to_json(const ClaimOutcome& outcome);

}  // namespace puiseux
