#pragma once

// Run manifests. Outputs are hashed with SHA-256; the manifest itself holds
// timestamps and is never among the hashed outputs.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chilab/lab/serialize.hpp"

namespace chilab::lab {

struct OutputRecord {
    std::string path;  ///< relative to the output directory
    std::string sha256;
    std::uint64_t bytes = 0;
};

struct Manifest {
    std::string experiment;
    Json parameters;  ///< everything needed to rerun: command, arguments, format
    std::uint64_t master_seed = 0;
    std::string stream_assignment;
    std::size_t workers = 1;
    std::optional<std::uint64_t> node_budget;
    std::string started;
    std::string finished;
    std::vector<OutputRecord> outputs;
    Json toolchain;
};

inline constexpr const char* kManifestFile = "manifest.json";

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::string& path);

/// Compiler, standard library, build type, platform and Boost version.
Json toolchain_fingerprint();

/// Current UTC time as ISO 8601.
std::string utc_now();

Json to_json(const Manifest& m);
Manifest manifest_from_json(const Json& j);

Manifest read_manifest(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);
std::string read_text_file(const std::string& path);

}  // namespace chilab::lab
