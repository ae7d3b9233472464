#pragma once

#include <cstdint>

namespace esctree {

/// All search tunables. Defaults follow the reference setup:
/// c=1, alpha=7, bias=-3, theta=0.5.
struct SearchConfig {
    double c = 1.0;                 ///< exploration constant in the PUCB score
    double alpha = 7.0;             ///< strategy weight in the reward
    double bias = -3.0;             ///< additive reward bias
    double theta = 0.5;             ///< quality threshold for path/pair extraction
    std::int32_t rollout_depth = 3;      ///< greedy simulation steps
    std::int32_t max_iterations = 50;    ///< search iteration budget
    std::int32_t max_end_nodes = 5;      ///< stop once this many end nodes exist
    std::uint64_t rng_seed = 0;

    bool operator==(const SearchConfig&) const = default;
};

}  // namespace esctree
