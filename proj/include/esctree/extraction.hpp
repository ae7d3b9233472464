#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "esctree/agents.hpp"
#include "esctree/dialogue.hpp"
#include "esctree/tree.hpp"

namespace esctree {

/// A root-to-End path on which every node's q exceeds the threshold.
struct Path {
    std::string seed_id;
    std::vector<NodeId> nodes;   ///< from a root child down to an End node
    double min_q = 0.0;
};

/// One side of a preference pair: a supporter turn with its search value.
struct PairSide {
    Strategy strategy = Strategy::EmotionalValidation;
    std::string text;
    double q = 0.0;

    bool operator==(const PairSide&) const = default;
};

/// A turn-level preference pair: chosen and rejected supporter turns
/// from sibling nodes sharing the same history prefix.
struct PreferencePair {
    std::string seed_id;
    std::int64_t turn_index = 0;       ///< 0-based supporter-turn index on the path
    std::vector<Utterance> history;    ///< shared prefix up to the siblings' parent
    PairSide chosen;
    PairSide rejected;

    bool operator==(const PreferencePair&) const = default;
};

/// A seed dialogue as read from disk, before strategy mapping: supporter
/// strategies are free-form source names.
struct RawUtterance {
    Role role = Role::Seeker;
    std::optional<std::string> strategy;
    std::string text;
};

struct RawSeedRecord {
    std::string id;
    std::string scene;
    std::string description;
    std::vector<RawUtterance> turns;
};

/// Maps one of the 15 source strategy names onto the 8 categories.
/// Unknown names and "Others" raise UnmappedStrategy.
Strategy map_strategy(std::string_view source_name);

struct SeedRejection {
    std::string reason;
};

using SeedFilterResult = std::variant<DialogueRecord, SeedRejection>;

/// Ingest filter: rejects records with a supporter turn that lacks a
/// strategy, carries an unmappable or "Others" strategy, or whose turns
/// do not strictly alternate starting with the seeker. Accepted records
/// come back with every strategy mapped onto the 8 categories.
SeedFilterResult filter_seed(const RawSeedRecord& record);

/// Exactly the root-to-End paths on which every node's q > theta,
/// in depth-first child-index order.
std::vector<Path> valid_paths(const ConversationTree& tree, double theta);

struct ExtractOptions {
    /// Generate supporter text for unmaterialized low-q siblings instead
    /// of skipping them; requires an agent backend.
    bool materialize_rejected = false;
    AgentBackend* agents = nullptr;
};

/// Preference pairs per the strict-threshold rule: for every node on a
/// valid path, each sibling with q < theta yields one pair (q equal to
/// theta is excluded from both sides). Siblings without supporter text
/// are skipped unless materialize_rejected is set. Duplicate pairs from
/// overlapping valid paths are deduplicated by content.
std::vector<PreferencePair> extract_pairs(const ConversationTree& tree, double theta,
                                          const ExtractOptions& options = {});

/// Ablation variant: for every gold supporter turn of the seed embedded
/// in the tree, pairs the gold turn with a uniformly random non-gold
/// strategy whose reply is generated by the supporter agent.
std::vector<PreferencePair> random_pairs(const ConversationTree& tree, AgentBackend& agents,
                                         std::uint64_t rng_seed);

/// Flattens each valid path into one chosen-side dialogue record.
std::vector<DialogueRecord> sft_subset(std::span<const Path> paths,
                                       const ConversationTree& tree);

// --- line-oriented dataset files (JSON record per line, UTF-8) ---

void serialize_dataset(std::span<const PreferencePair> pairs,
                       const std::filesystem::path& destination);
std::vector<PreferencePair> deserialize_dataset(const std::filesystem::path& source);

std::string pair_to_json_line(const PreferencePair& pair);
PreferencePair pair_from_json_line(const std::string& line, std::size_t line_number);

void write_dialogues(std::span<const DialogueRecord> records,
                     const std::filesystem::path& destination);
std::vector<DialogueRecord> read_dialogues(const std::filesystem::path& source);

std::vector<RawSeedRecord> read_raw_seeds(const std::filesystem::path& source);

}  // namespace esctree
