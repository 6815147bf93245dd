#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "puiseux/family.hpp"

namespace puiseux {

enum class Verdict { Yes, No, Unknown };

std::string_view to_string(Verdict verdict);

/// One property of a family together with the result that settles it.
/// `paper_asserted` marks verdicts resting on a published theorem the
/// library relies on without re-deriving.
struct Finding {
  Verdict verdict = Verdict::Unknown;
  std::string citation;
  bool paper_asserted = false;
};

struct ClassificationReport {
  Finding dense;
  Finding atomic;
  Finding antimatter;
  Finding strongly_bounded;
  Finding finite;
  Finding hereditarily_atomic;
  /// Distinct citation tags, in the order the fields above use them.
  std::vector<std::string> justification;
};

/// Rule dispatch over the closed-form families. A field no known result
/// covers stays Unknown; nothing is extrapolated from truncations.
ClassificationReport classify(const FamilySpec& spec);

/// Ratio r_{n+1}/r_n of a p-adic family's generators on its closed-form
/// tail, when both sequences make it constant.
std::optional<Rational> padic_tail_ratio(const family::PAdic& spec);

/// Whether the generators of a p-adic family strictly decrease, decided
/// from the explicit prefix and the closed-form tail.
std::optional<bool> padic_generators_decreasing(const family::PAdic& spec);

}  // namespace puiseux
