#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abckit/harness.hpp"

namespace abckit {

/// Command-line misuse; exit_code() is 2 for errors and 0 for help requests
/// (what() then carries the help text).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& message, int exit_code = 2)
        : std::runtime_error(message), exit_code_(exit_code) {}
    int exit_code() const { return exit_code_; }

private:
    int exit_code_;
};

struct CliConfig {
    enum class Command { kRun, kListProblems, kVerifyRegistry, kCompare };

    Command command = Command::kRun;
    std::string problem_filter = "*";  // glob over problem names (*, ?)
    std::string variant = "ioabc";
    int runs = 100;
    std::uint64_t budget = 200000;
    std::uint64_t seed = 1;
    int colony_size = 60;
    int limit = 1500;
    int workers = 0;  // 0 = available parallelism
    std::string output_path;  // empty = stdout
    std::string format = "csv";  // csv | table
    std::string baseline_file;    // compare inputs
    std::string challenger_file;
};

/// Simple glob over *, ? (no character classes).
bool glob_match(const std::string& pattern, const std::string& text);

/// Parses argv (without the program name). Throws UsageError on misuse,
/// with exit code 0 for --help.
CliConfig parse_args(const std::vector<std::string>& args);

/// Executes a parsed command. Returns 0 on success, 1 on runtime failure.
int run_cli(const CliConfig& config);

/// Full entry point: parse, dispatch, map errors to exit codes 0/1/2.
int cli_main(int argc, const char* const* argv);

}  // namespace abckit
