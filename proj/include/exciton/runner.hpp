// Orchestrates a configured run and writes its artefacts: a data table per
// command plus manifest.json describing inputs, constants and results.
// Identical configurations produce byte-identical files.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exciton/config.hpp"
#include "exciton/invariants.hpp"

namespace exciton {

enum class Command { modes, pattern, trace, scenario_two_seg };

std::optional<Command> parse_command(std::string_view name);
const char* to_string(Command c);

struct RunOptions {
    Command command = Command::modes;
    std::filesystem::path out_dir = "out";
    OutputFormat format = OutputFormat::csv;
    int threads = 1;
    bool check = false;  // also run the invariant suite
};

struct RunReport {
    std::vector<std::filesystem::path> files;  // in write order
    std::vector<std::string> warnings;
    std::vector<CheckResult> checks;

    bool checks_passed() const;
};

/// Computation failures surface as DomainError / GeometryError, file problems
/// as IoError.
RunReport run(const RunConfig& config, const RunOptions& options);

}  // namespace exciton
