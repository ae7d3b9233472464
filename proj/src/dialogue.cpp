#include "esctree/dialogue.hpp"

namespace esctree {

std::string_view to_string(Role r) {
    return r == Role::Seeker ? "seeker" : "supporter";
}

std::optional<Role> role_from_string(std::string_view name) {
    if (name == "seeker") return Role::Seeker;
    if (name == "supporter") return Role::Supporter;
    return std::nullopt;
}

Utterance Utterance::seeker(std::string text) {
    return Utterance{Role::Seeker, std::nullopt, std::move(text)};
}

Utterance Utterance::supporter(Strategy strategy, std::string text) {
    return Utterance{Role::Supporter, strategy, std::move(text)};
}

std::vector<std::string> validate_record(const DialogueRecord& record) {
    std::vector<std::string> violations;
    for (std::size_t i = 0; i < record.turns.size(); ++i) {
        const Utterance& u = record.turns[i];
        const Role expected = (i % 2 == 0) ? Role::Seeker : Role::Supporter;
        if (u.role != expected) {
            violations.push_back("turn " + std::to_string(i) +
                                 ": roles must alternate starting with seeker");
        }
        if (u.role == Role::Supporter && !u.strategy.has_value()) {
            violations.push_back("turn " + std::to_string(i) +
                                 ": supporter turn lacks a strategy");
        }
        if (u.role == Role::Seeker && u.strategy.has_value()) {
            violations.push_back("turn " + std::to_string(i) +
                                 ": seeker turn carries a strategy");
        }
        if (u.text.empty()) {
            violations.push_back("turn " + std::to_string(i) + ": empty text");
        }
    }
    return violations;
}

bool record_is_valid(const DialogueRecord& record) {
    return validate_record(record).empty();
}

}  // namespace esctree
