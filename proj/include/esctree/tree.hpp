#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "esctree/config.hpp"
#include "esctree/dialogue.hpp"
#include "esctree/strategy.hpp"

namespace esctree {

enum class NodeKind { Root, Unexpanded, Expanded, End };

std::string_view to_string(NodeKind k);
std::optional<NodeKind> node_kind_from_string(std::string_view name);

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// One state in the conversation tree.
///
/// Root holds the seed's opening seeker utterance in seeker_reply.
/// Unexpanded nodes carry only a strategy plus its prior/raw score.
/// Expanded nodes additionally hold both generated replies; End nodes
/// hold the supporter reply only and close the dialogue.
struct Node {
    NodeKind kind = NodeKind::Unexpanded;
    std::optional<Strategy> strategy;
    double prior = 0.0;                       ///< softmax-normalized strategist score
    std::optional<double> raw_score;          ///< strategist score on the 1-10 scale
    std::optional<std::string> supporter_reply;
    std::optional<std::string> seeker_reply;
    double q = 0.0;                           ///< running mean of propagated rewards
    std::int64_t n = 0;                       ///< visit count
    NodeId parent = kNoNode;
    std::vector<NodeId> children;
};

/// Arena-backed conversation tree. Node handles are stable indices into
/// the arena; children are ordered by creation. Single-writer: at most
/// one mutator at a time, concurrent readers are fine between mutations.
class ConversationTree {
public:
    ConversationTree() = default;

    /// Decomposes a seed dialogue into the tree backbone: the root holds
    /// the opening seeker turn, and each supporter turn becomes a
    /// materialized child chained under the previous one (End-kind when
    /// the seed stops on a supporter turn). Backbone nodes enter with
    /// q=0, n=0 and prior 1 until their parent is expanded.
    ConversationTree(SearchConfig config, DialogueRecord seed);

    NodeId root() const { return nodes_.empty() ? kNoNode : 0; }
    bool empty() const { return nodes_.empty(); }
    std::size_t size() const { return nodes_.size(); }

    const Node& node(NodeId id) const;
    Node& node_mut(NodeId id);

    /// Appends a node and links it under `parent` (kNoNode for the root,
    /// allowed only once, as the first node).
    NodeId add_node(Node n, NodeId parent);

    const SearchConfig& config() const { return config_; }
    const DialogueRecord& seed() const { return seed_; }

    /// Utterances along the root-to-id path, in dialogue order: the
    /// root's seeker turn, then each node's supporter turn followed by
    /// its seeker turn when present.
    std::vector<Utterance> history(NodeId id) const;

    /// Path of node ids from the root down to id, inclusive.
    std::vector<NodeId> path_from_root(NodeId id) const;

    std::string to_json_text() const;
    static ConversationTree from_json_text(const std::string& text);

    void save(const std::filesystem::path& file) const;
    static ConversationTree load(const std::filesystem::path& file);

private:
    SearchConfig config_;
    DialogueRecord seed_;
    std::vector<Node> nodes_;
};

/// Checks every structural invariant: node-kind field rules, prior and
/// score ranges, sibling priors summing to 1, and that parent/child
/// links form a rooted tree with no cycles. Violations are returned as
/// human-readable strings naming the offending node; empty means valid.
std::vector<std::string> validate_tree(const ConversationTree& tree);

}  // namespace esctree
