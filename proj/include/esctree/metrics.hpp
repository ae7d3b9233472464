#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "esctree/dialogue.hpp"
#include "esctree/extraction.hpp"
#include "esctree/strategy.hpp"

namespace esctree {

/// A probability distribution over the 8 strategies (sums to 1).
struct StrategyDistribution {
    std::map<Strategy, double> probs;
};

/// Dataset-level counting statistics. Averages are exact quotients of
/// the counted sums, reported as 0 on empty inputs.
struct DatasetStats {
    std::int64_t dialogues = 0;
    std::int64_t utterances = 0;
    double avg_dialogue_len = 0.0;     ///< utterances per dialogue
    double avg_utterance_len = 0.0;    ///< whitespace tokens per utterance
    std::int64_t preferred_utterances = 0;
    std::int64_t dispreferred_utterances = 0;
    double avg_len_preferred = 0.0;
    double avg_len_dispreferred = 0.0;
};

/// Lowercased whitespace tokenization (Unicode whitespace, ASCII
/// lowercasing, no stemming).
std::vector<std::string> whitespace_tokens(std::string_view text);

/// Unweighted mean of per-class F1 over all 8 classes; classes absent
/// from both predictions and golds contribute 0 and stay in the mean.
double macro_f1(std::span<const Strategy> predictions, std::span<const Strategy> golds);

/// Per-class F1 weighted by gold-class support.
double weighted_f1(std::span<const Strategy> predictions, std::span<const Strategy> golds);

/// Strategy-preference bias: mean over the 8 strategies of
/// |log((predicted_s + eps) / (ideal_s + eps))| with eps = 1e-6.
///
/// This is a local definition: it realizes "deviation from an ideal
/// strategy distribution, lower is better" and is stable on zero-mass
/// classes, but it is not numerically comparable to bias figures
/// computed with other formulas.
double preference_bias(const StrategyDistribution& predicted,
                       const StrategyDistribution& ideal);

/// ROUGE-L F1 over lowercase whitespace tokens: with LCS length l,
/// P = l/|candidate|, R = l/|reference|, F1 = 2PR/(P+R); 0 when either
/// side is empty or the LCS is.
double rouge_l(std::string_view candidate, std::string_view reference);

/// Stage of utterance k (0-based) in a dialogue of n_utterances:
/// min(floor(k/n * 6), 5) * 0.2, one of {0, 0.2, 0.4, 0.6, 0.8, 1.0}.
double stage_index(std::int64_t k, std::int64_t n_utterances);

inline constexpr std::size_t kStageCount = 6;

/// Per-stage strategy distributions over every supporter utterance in
/// the records; stages with no supporter utterance are nullopt.
std::array<std::optional<StrategyDistribution>, kStageCount>
strategy_stage_distribution(std::span<const DialogueRecord> records);

/// Counts over a preference dataset plus its flattened dialogue records.
DatasetStats dataset_stats(std::span<const PreferencePair> pairs,
                           std::span<const DialogueRecord> records);

}  // namespace esctree
