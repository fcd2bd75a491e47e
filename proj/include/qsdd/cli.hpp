#pragma once

#include <string>

#include "qsdd/checks.hpp"

namespace qsdd::cli {

/// Everything a subcommand needs; a run is deterministic given the
/// full configuration.
struct CommandConfig {
    int m = 1;
    int n = 0;             // 0: unset
    int k = -1;            // -1: unset
    long max_size = -1;    // -1: unset (use the documented default)
    std::string basis = "forest";
    std::string format = "text";  // text | json | tsv
    std::string input;            // polynomial text or code literal
    unsigned long seed = 20240101;
    std::string suite;            // verify subcommand
};

struct CommandResult {
    std::string output;
    int exit_code = 0;  // 0 ok, 1 verification failure, 2 usage/parse error
};

CommandResult cmd_table(const CommandConfig& cfg);
CommandResult cmd_expand(const CommandConfig& cfg);
CommandResult cmd_reduce(const CommandConfig& cfg);
CommandResult cmd_volume(const CommandConfig& cfg);
CommandResult cmd_verify(const CommandConfig& cfg);

} // namespace qsdd::cli
