#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "esctree/search.hpp"

namespace esctree {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// 64-bit FNV-1a over a byte string; the change-detection digest used in
/// run manifests (not a cryptographic hash).
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64_file(const std::filesystem::path& file);
std::string digest_hex(std::uint64_t digest);

struct ManifestInput {
    std::string path;
    std::string digest;
};

struct ManifestSeed {
    std::string id;
    std::string status;                    ///< "ok", "rejected", "failed", "skipped"
    std::optional<std::string> reason;
    std::optional<std::string> tree_file;  ///< relative to the output dir
    std::optional<std::string> digest;
    std::optional<SearchStats> stats;
};

/// Record of one expansion run: config echo, input/output digests, and
/// per-seed outcomes. Written atomically (temp file + rename) at run end.
struct RunManifest {
    SearchConfig config;
    std::uint64_t rng_seed = 0;
    std::vector<ManifestInput> inputs;
    std::vector<ManifestSeed> seeds;

    std::string to_json_text() const;
    static RunManifest from_json_text(const std::string& text);

    void save(const std::filesystem::path& file) const;
    static std::optional<RunManifest> load(const std::filesystem::path& file);
};

/// Writes bytes to a temp file in the target directory and renames it
/// over the destination.
void atomic_write(const std::filesystem::path& file, std::string_view bytes);

}  // namespace esctree
