#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chilab/lab/serialize.hpp"

namespace chilab::cli {

enum class Format { csv, json };

struct Settings {
    std::string out = "chilab-out";
    Format format = Format::json;
    std::size_t threads = 1;
    std::uint64_t budget_ms = 10'000;
};

struct OutputFile {
    std::string name;
    std::string content;
};

struct CommandResult {
    std::vector<OutputFile> files;  ///< files[0] is the primary output, echoed to stdout
    std::uint64_t master_seed = 0;
    std::string stream_assignment = "none";
    std::optional<std::uint64_t> node_budget;
};

/// Runs one subcommand described by {"command": name, "args": {...}}.
/// Pure in its inputs: the same parameters give the same bytes.
CommandResult run_command(const lab::Json& params, const Settings& settings);

std::string format_name(Format f);
Format parse_format(const std::string& text);

}  // namespace chilab::cli
