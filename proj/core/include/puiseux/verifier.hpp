#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace puiseux {

enum class ClaimStatus { Confirmed, Refuted, DataOnly, Inconclusive };

std::string_view to_string(ClaimStatus status);

struct ClaimOutcome {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::Inconclusive;
  /// Exact identities or counterexamples, each re-checked before it is
  /// recorded.
  std::vector<std::string> witnesses;
  std::map<std::string, std::int64_t> parameters;
  std::string citation;
};

struct VerifierParams {
  std::size_t truncation = 50;
  std::uint64_t cap = 8;
  std::uint64_t prime_limit = 100000;
};

/// "C1" .. "C15" in order.
std::vector<std::string> claim_ids();

/// Runs the named claims ("all" expands to every claim) and returns the
/// outcomes ordered by claim number. Throws UnknownClaim for an
/// unrecognized id.
std::vector<ClaimOutcome> run_claims(const std::vector<std::string>& ids,
                                     const VerifierParams& params = {});

}  // namespace puiseux
