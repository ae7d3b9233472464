#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "esctree/config.hpp"
#include "esctree/remote_backend.hpp"

namespace esctree {

enum class BackendKind { Scripted, Remote };

struct AgentsSettings {
    BackendKind backend = BackendKind::Scripted;
    std::filesystem::path fixture;    ///< scripted backend tables
    RemoteBackendConfig remote;
};

enum class ExtractionMode { Pro, Random };

struct ExtractionSettings {
    ExtractionMode mode = ExtractionMode::Pro;
    bool materialize_rejected = false;
};

/// One configuration file drives every command. Sections: [mcts],
/// [agents], [extraction], [cso].
struct AppConfig {
    SearchConfig search;
    AgentsSettings agents;
    ExtractionSettings extraction;
    double beta = 0.1;   ///< [cso] preference-loss temperature
};

/// INI-style parse: "[section]" headers, "key = value" lines, '#' or ';'
/// comments. Unknown sections or keys raise ConfigError.
AppConfig load_app_config(const std::filesystem::path& file);
AppConfig parse_app_config(const std::string& text, const std::filesystem::path& base_dir);

}  // namespace esctree
