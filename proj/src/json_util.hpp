#pragma once

// Internal JSON helpers shared by the serialization code. Canonical
// field order matters: files must re-serialize byte-identically, so all
// writers build nlohmann::ordered_json.

#include <optional>
#include <string>

#include <json.hpp>

#include "esctree/dialogue.hpp"
#include "esctree/errors.hpp"

namespace esctree::detail {

using ordered_json = nlohmann::ordered_json;

ordered_json utterance_to_json(const Utterance& u);
Utterance utterance_from_json(const ordered_json& j);

ordered_json record_to_json(const DialogueRecord& r);
DialogueRecord record_from_json(const ordered_json& j);

/// Reads a whole file; IoError when it cannot be opened.
std::string read_file(const std::filesystem::path& file);

/// get<T> with a descriptive Error instead of nlohmann's type_error.
template <typename T>
T require(const ordered_json& j, const char* key) {
    if (!j.contains(key)) {
        throw Error(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw Error(std::string("field '") + key + "' has the wrong type");
    }
}

template <typename T>
std::optional<T> optional_field(const ordered_json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw Error(std::string("field '") + key + "' has the wrong type");
    }
}

}  // namespace esctree::detail
