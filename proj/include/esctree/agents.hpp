#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "esctree/dialogue.hpp"
#include "esctree/strategy.hpp"

namespace esctree {

enum class AgentRole { Seeker, Supporter, Strategist, Rewarder };

std::string_view to_string(AgentRole r);

/// Rubric scores from the reward judge, each on the 0-4 scale.
struct JudgeScores {
    int empathy = 0;
    int information = 0;
    int humanoid = 0;
    int strategy = 0;

    bool operator==(const JudgeScores&) const = default;
};

/// One interface for the four dialogue roles. The public methods check
/// preconditions and enforce the score-range contracts; concrete
/// backends implement the do_* hooks.
///
/// All roles are safe to invoke concurrently.
class AgentBackend {
public:
    virtual ~AgentBackend() = default;

    /// Seeker turn for a history ending in a supporter turn.
    /// nullopt signals end of dialogue.
    std::optional<Utterance> seeker_reply(std::span<const Utterance> history);

    /// Supporter turn for a history ending in a seeker turn; the returned
    /// utterance carries exactly the given strategy.
    Utterance supporter_reply(std::span<const Utterance> history, Strategy strategy);

    /// Strategist scores for all 8 strategies, each in [1,10]. A backend
    /// emitting a score outside the range raises OutOfRangeScore; scores
    /// are never clamped.
    std::map<Strategy, double> score_strategies(std::span<const Utterance> history);

    /// Reward judge over a history ending in a supporter turn.
    JudgeScores judge(std::span<const Utterance> history);

protected:
    virtual std::optional<Utterance> do_seeker_reply(std::span<const Utterance> history) = 0;
    virtual Utterance do_supporter_reply(std::span<const Utterance> history, Strategy strategy) = 0;
    virtual std::map<Strategy, double> do_score_strategies(std::span<const Utterance> history) = 0;
    virtual JudgeScores do_judge(std::span<const Utterance> history) = 0;
};

}  // namespace esctree
