#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esctree/strategy.hpp"

namespace esctree {

enum class Role { Seeker, Supporter };

std::string_view to_string(Role r);
std::optional<Role> role_from_string(std::string_view name);

/// One dialogue turn. Supporter turns carry exactly one strategy,
/// seeker turns carry none.
struct Utterance {
    Role role = Role::Seeker;
    std::optional<Strategy> strategy;
    std::string text;

    static Utterance seeker(std::string text);
    static Utterance supporter(Strategy strategy, std::string text);

    bool operator==(const Utterance&) const = default;
};

/// A flat strategy-annotated multi-turn dialogue. Turns strictly
/// alternate Seeker/Supporter starting with Seeker.
struct DialogueRecord {
    std::string id;
    std::string scene;
    std::string description;
    std::vector<Utterance> turns;

    bool operator==(const DialogueRecord&) const = default;
};

/// Structural problems with a single utterance or record; empty means valid.
std::vector<std::string> validate_record(const DialogueRecord& record);

/// True iff turns alternate Seeker/Supporter starting with Seeker and
/// every utterance satisfies the role/strategy pairing rule.
bool record_is_valid(const DialogueRecord& record);

}  // namespace esctree
