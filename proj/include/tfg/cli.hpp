#pragma once

#include <string>
#include <vector>

namespace tfg {

struct CommandOutcome {
    int exit_code = 0;
    std::string payload;
    std::vector<std::string> diagnostics;
    bool quiet = false;
};

// Exit codes: 0 success / tables matched, 2 usage, 3 validation,
// 4 guard exceeded, 5 table diff with missing rows.
CommandOutcome run(const std::vector<std::string>& argv);

// Prints payload to stdout and diagnostics to stderr, returns the exit code.
int main_entry(int argc, char** argv);

} // namespace tfg
