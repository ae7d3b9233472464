#include "esctree/strategy.hpp"

namespace esctree {

const std::array<Strategy, kStrategyCount>& all_strategies() {
    static const std::array<Strategy, kStrategyCount> order = {
        Strategy::EmotionalValidation,
        Strategy::Affirmation,
        Strategy::CollaborativePlanning,
        Strategy::EmpatheticStatements,
        Strategy::AvoidJudgmentAndCriticism,
        Strategy::ProvideDifferentPerspectives,
        Strategy::ReframeNegativeThoughts,
        Strategy::ShareInformation,
    };
    return order;
}

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::EmotionalValidation: return "Emotional Validation";
        case Strategy::Affirmation: return "Affirmation";
        case Strategy::CollaborativePlanning: return "Collaborative Planning";
        case Strategy::EmpatheticStatements: return "Empathetic Statements";
        case Strategy::AvoidJudgmentAndCriticism: return "Avoid Judgment and Criticism";
        case Strategy::ProvideDifferentPerspectives: return "Provide Different Perspectives";
        case Strategy::ReframeNegativeThoughts: return "Reframe Negative Thoughts";
        case Strategy::ShareInformation: return "Share Information";
    }
    return "";
}

std::optional<Strategy> strategy_from_string(std::string_view name) {
    for (Strategy s : all_strategies()) {
        if (to_string(s) == name) return s;
    }
    return std::nullopt;
}

}  // namespace esctree
