#pragma once

// Command-line front end: parses `cyclomon <command> --instance file.json ...`,
// dispatches to the owning module, and prints one JSON report to stdout.
// Exit codes: 0 ok/certified, 2 solver or iteration errors, 3 certification
// failed, 64 parse errors.

#include <string>
#include <vector>

namespace cyclomon::cli {

inline constexpr const char* kToolVersion = "cyclomon 0.1.0";
inline constexpr const char* kToleranceEnvVar = "CYCLOMON_TOLERANCES";

struct RunResult {
    int exit_code = 0;
    std::string report;  // JSON text (empty only for usage errors)
};

/// args excludes the program name.
RunResult run(const std::vector<std::string>& args);

/// Prints the report to stdout and returns the exit code.
int main_entry(int argc, char** argv);

}  // namespace cyclomon::cli
