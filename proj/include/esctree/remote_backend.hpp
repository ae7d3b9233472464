#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>

#include "esctree/agents.hpp"

namespace esctree {

/// Settings for the chat-completions-style HTTP backend. The API key is
/// read from the named environment variable at request time and is never
/// written to any file.
struct RemoteBackendConfig {
    std::string endpoint_url;              ///< e.g. http://host:8080/v1/chat/completions
    std::string model_name;
    std::string api_key_env_name;          ///< bearer token source; empty = no auth header
    std::chrono::milliseconds timeout{30000};
    int max_retries = 2;                   ///< retries after the first attempt
    std::map<AgentRole, std::filesystem::path> prompt_template_paths;

    std::string end_token = "[END]";       ///< seeker end-of-dialogue sentinel
    double temperature = 0.7;
    std::chrono::milliseconds backoff_base{250};  ///< first retry delay before jitter
    std::uint64_t rng_seed = 0;            ///< backoff jitter seed
};

/// HTTP backend speaking the chat-completions wire shape:
/// POST {model, messages, temperature}, bearer token from the
/// environment. Failed requests are retried with jittered exponential
/// backoff, max_retries+1 attempts in total.
///
/// Reply grammar: seeker/supporter replies are free text (a seeker reply
/// containing the end token closes the dialogue); the strategist must
/// emit one "<Strategy Name>=<score>" line per strategy; the judge must
/// emit "E=<0-4>,I=<0-4>,H=<0-4>,S=<0-4>".
class RemoteBackend : public AgentBackend {
public:
    explicit RemoteBackend(RemoteBackendConfig config);

    const RemoteBackendConfig& config() const { return config_; }

protected:
    std::optional<Utterance> do_seeker_reply(std::span<const Utterance> history) override;
    Utterance do_supporter_reply(std::span<const Utterance> history, Strategy strategy) override;
    std::map<Strategy, double> do_score_strategies(std::span<const Utterance> history) override;
    JudgeScores do_judge(std::span<const Utterance> history) override;

private:
    std::string complete(AgentRole role, const std::string& prompt);
    std::string render_prompt(AgentRole role,
                              std::span<const Utterance> history,
                              const std::optional<Strategy>& strategy) const;
    std::chrono::milliseconds backoff_delay(int attempt);

    RemoteBackendConfig config_;
    std::map<AgentRole, std::string> templates_;
    std::mutex rng_mutex_;
    std::mt19937_64 rng_;
};

/// Renders a history block for prompt templates: one line per turn,
/// "Seeker: ..." or "Supporter (Strategy): ...".
std::string render_history(std::span<const Utterance> history);

}  // namespace esctree
