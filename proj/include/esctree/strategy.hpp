#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace esctree {

/// The eight support-strategy categories attached to supporter turns.
enum class Strategy {
    EmotionalValidation,
    Affirmation,
    CollaborativePlanning,
    EmpatheticStatements,
    AvoidJudgmentAndCriticism,
    ProvideDifferentPerspectives,
    ReframeNegativeThoughts,
    ShareInformation,
};

inline constexpr std::size_t kStrategyCount = 8;

/// All strategies in declaration order. Declaration order is the
/// deterministic tie-break order used throughout the search.
const std::array<Strategy, kStrategyCount>& all_strategies();

/// Canonical display name, e.g. "Emotional Validation". Round-trips
/// losslessly through strategy_from_string.
std::string_view to_string(Strategy s);

/// Strict inverse of to_string: accepts canonical names only.
std::optional<Strategy> strategy_from_string(std::string_view name);

}  // namespace esctree
