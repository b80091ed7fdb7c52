#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agk/rational.hpp"

namespace agk {

enum class VerdictLevel {
    LiouvilleIntegrable,
    RationalExcluded,
    MeromorphicExcluded,
    NotExcluded,
    Inconclusive,
};

const char* to_string(VerdictLevel level);

struct VerdictWitness {
    std::optional<std::int64_t> l;      // triangular-number index
    std::optional<std::int64_t> j;      // admissible-table index
    std::optional<int> family;          // admissible-table row
    std::string second_integral;        // closed form for the integrable families
};

/// Structured integrability conclusion. Every verdict names the rule that
/// produced it; LiouvilleIntegrable is reserved for the three closed families.
struct Verdict {
    VerdictLevel level = VerdictLevel::Inconclusive;
    std::string rule;
    VerdictWitness witness;
    std::optional<Rational> kappa;  // defined when a != 0
    std::vector<std::string> notes;
};

}  // namespace agk
