#pragma once

// Command dispatch for the sepvar tool. Exit codes: 0 success, 1 a
// mathematical check failed, 2 usage or input error.

#include <string>
#include <vector>

namespace sepvar {

struct CommandResult {
    int exit_code = 0;
    std::string output;  // JSON document (or help text), newline-terminated
};

/// `args` excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace sepvar
