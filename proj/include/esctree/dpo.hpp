#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "esctree/dialogue.hpp"
#include "esctree/extraction.hpp"

namespace esctree::dpo {

/// Sum log-probability of a target supporter turn given a history.
/// Granularity (which tokens the sum covers) is the provider's business;
/// by default providers are expected to score the strategy tag
/// concatenated with the response text.
using LogProbProvider =
    std::function<double(std::span<const Utterance> history, const Utterance& target)>;

struct TurnLossInput {
    double logp_policy_chosen = 0.0;
    double logp_ref_chosen = 0.0;
    double logp_policy_rejected = 0.0;
    double logp_ref_rejected = 0.0;
    double beta = 0.1;
};

/// Turn-level preference loss
///   -log sigmoid(beta*(lpc - lrc) - beta*(lpr - lrr)),
/// evaluated as softplus of the negated argument so it stays finite for
/// |beta*delta| up to 1e4 and beyond. Raises NonFiniteInput on
/// non-finite inputs or beta <= 0.
double turn_loss(const TurnLossInput& input);

/// Analytic gradient of turn_loss w.r.t. the four log-probabilities, in
/// input order.
std::array<double, 4> turn_loss_grad(const TurnLossInput& input);

/// Loss of one preference pair: both providers are queried on
/// (pair.history, chosen) and (pair.history, rejected); the conditioning
/// history is the chosen-side prefix stored in the pair.
double pair_loss(const PreferencePair& pair, const LogProbProvider& policy,
                 const LogProbProvider& ref, double beta);

struct DatasetObjective {
    double mean_loss = 0.0;
    std::vector<double> per_pair;
};

/// Mean of pair_loss over a non-empty pair list (compensated summation,
/// so the mean is permutation-invariant to 1e-12).
DatasetObjective dataset_objective(std::span<const PreferencePair> pairs,
                                   const LogProbProvider& policy,
                                   const LogProbProvider& ref, double beta);

/// Max relative error between turn_loss_grad and central finite
/// differences with step h over the four coordinates.
double grad_check(const TurnLossInput& input, double h);

}  // namespace esctree::dpo
