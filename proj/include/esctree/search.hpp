#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "esctree/agents.hpp"
#include "esctree/config.hpp"
#include "esctree/tree.hpp"

namespace esctree {

/// Accounting for one search run.
struct SearchStats {
    std::int64_t iterations_run = 0;
    std::int64_t end_nodes_found = 0;   ///< End-kind nodes in the final tree
    std::int64_t nodes_created = 0;     ///< nodes added by expansion (backbone excluded)
    std::map<AgentRole, std::int64_t> agent_calls;
    std::chrono::duration<double> wall_time{0.0};
};

/// One structured progress line per iteration.
struct IterationLog {
    std::int64_t iteration = 0;
    NodeId selected = kNoNode;
    std::string phase;            ///< "expand", "materialize" or "revisit-end"
    NodeId simulated = kNoNode;
    double reward = 0.0;
    std::int64_t end_nodes = 0;
};

using IterationLogger = std::function<void(const IterationLog&)>;

struct SearchResult {
    ConversationTree tree;
    SearchStats stats;
    /// Set when an agent call failed mid-run; the tree is the valid
    /// partial result up to that point.
    std::optional<std::string> error;
};

/// Selection score: q + c * prior * sqrt(parent_n) / (n + 1).
double pucb_score(double q, double prior, std::int64_t n, std::int64_t parent_n, double c);

/// Softmax normalization of strategist scores. Outputs sum to 1 and
/// preserve the raw-score ordering.
std::map<Strategy, double> softmax_priors(const std::map<Strategy, double>& raw_scores);

/// Descends from the root, at each level taking the child with maximal
/// PUCB score (first/lowest index wins ties), and stops at the first
/// node that is Unexpanded, End, or whose strategy children have not
/// been generated yet.
NodeId select_leaf(const ConversationTree& tree, double c);

/// Generates the strategy children of a Root or Expanded node: the
/// strategist scores all 8 strategies on the node's history, priors are
/// softmax-normalized, and one Unexpanded child per strategy is appended
/// with q=0, n=0. A pre-existing backbone child is absorbed into the
/// sibling set: it receives its strategy's prior and raw score instead
/// of a duplicate child. Returns the newly created handles. Expanding a
/// node twice raises DoubleExpansion.
std::vector<NodeId> expand(ConversationTree& tree, NodeId id, AgentBackend& agents);

/// Turns an Unexpanded node into an Expanded one (or End when the seeker
/// closes the dialogue) by generating the supporter reply for the node's
/// strategy and then the seeker reply. On agent failure the node is left
/// untouched. Returns the same handle.
NodeId materialize(ConversationTree& tree, NodeId id, AgentBackend& agents);

/// Reward of one judged supporter turn: (E + I + H + alpha*S)/10 + bias.
double compute_reward(const JudgeScores& scores, double alpha, double bias);

/// Estimates a node's value without mutating the tree. End nodes return
/// the reward of their own judged turn. Expanded nodes run up to
/// rollout_depth greedy steps (highest raw strategist score each step,
/// declaration order on ties), judging each generated supporter turn and
/// stopping early when the seeker ends the dialogue; the result is the
/// arithmetic mean over the judged rollout turns. Rollout turns are
/// ephemeral and never enter the tree.
double simulate(const ConversationTree& tree, NodeId id, AgentBackend& agents,
                const SearchConfig& config);

/// Updates the node and every ancestor up to the root:
/// q <- (n*q + reward) / (n+1), n <- n+1.
void backpropagate(ConversationTree& tree, NodeId id, double reward);

/// Full search loop over one seed: the seed is decomposed into the tree
/// backbone, then select -> (expand | materialize) -> simulate ->
/// backpropagate iterates until max_iterations is reached or the tree
/// holds max_end_nodes End nodes. Agent errors stop the run and are
/// reported alongside the partial tree.
SearchResult run_search(const DialogueRecord& seed, AgentBackend& agents,
                        const SearchConfig& config, IterationLogger logger = {});

}  // namespace esctree
