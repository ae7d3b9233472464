#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace esctree {

/// The six attributes scored per text.
extern const std::array<std::string_view, 6> kToxicityAttributes;

struct ToxicityClientConfig {
    std::string endpoint_url;
    std::string api_key_env_name;
    std::chrono::milliseconds timeout{10000};
    int max_retries = 2;
    /// Requests are spaced at least this far apart (per client call).
    std::chrono::milliseconds min_request_interval{1000};
    std::chrono::milliseconds backoff_base{250};
    std::uint64_t rng_seed = 0;
};

/// Scores each text against the toxicity service: one HTTPS POST of
/// {comment:{text}, requestedAttributes} per text, rate-limited and
/// retried on 429/5xx/transport errors. Returns one attribute->score map
/// per input text, in order.
std::vector<std::map<std::string, double>> toxicity_scores(
    const std::vector<std::string>& texts, const ToxicityClientConfig& config);

}  // namespace esctree
