#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "esctree/agents.hpp"

namespace esctree {

/// Lookup tables driving the deterministic scripted backend. Indexed
/// tables are keyed by turn depth and wrap around (index mod size).
struct ScriptedFixture {
    /// Emit end-of-dialogue once the history already holds this many
    /// seeker turns.
    std::optional<int> end_after_seeker_turns;

    /// Seeker line for depth k (number of prior seeker turns).
    std::vector<std::string> seeker_lines;

    /// Supporter lines per strategy, indexed by prior supporter-turn
    /// count. Missing strategies fall back to a synthesized line.
    std::map<Strategy, std::vector<std::string>> supporter_lines;

    /// Full 8-strategy score maps indexed by supporter-turn depth.
    std::vector<std::map<Strategy, double>> strategy_scores;

    /// Judge scores indexed by supporter-turn depth; by-strategy entries
    /// override by the strategy of the last supporter turn.
    std::vector<JudgeScores> judge_scores;
    std::map<Strategy, JudgeScores> judge_scores_by_strategy;

    static ScriptedFixture from_json_text(const std::string& text);
    static ScriptedFixture load(const std::filesystem::path& file);
};

/// Deterministic backend: every reply is a pure function of the history
/// and the fixture tables. Two runs with equal fixtures produce
/// byte-identical transcripts.
class ScriptedBackend : public AgentBackend {
public:
    explicit ScriptedBackend(ScriptedFixture fixture);

    const ScriptedFixture& fixture() const { return fixture_; }

protected:
    std::optional<Utterance> do_seeker_reply(std::span<const Utterance> history) override;
    Utterance do_supporter_reply(std::span<const Utterance> history, Strategy strategy) override;
    std::map<Strategy, double> do_score_strategies(std::span<const Utterance> history) override;
    JudgeScores do_judge(std::span<const Utterance> history) override;

private:
    ScriptedFixture fixture_;
};

}  // namespace esctree
