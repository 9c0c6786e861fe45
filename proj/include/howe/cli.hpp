#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "howe/exactnum.hpp"

namespace howe::cli {

/// Invalid command line or config file; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the usage text.
class HelpRequested : public ConfigError {
public:
    using ConfigError::ConfigError;
};

enum class ExitCode : int { ok = 0, verification_failed = 1, invalid_config = 2 };

/// Parses "p" or "p/q". With `parameter_slot` set, integer values are
/// rejected because a1 and a2 must be non-integers.
Scalar parse_rational(std::string_view text, bool parameter_slot = false);

struct RunConfig {
    std::string command;
    int n = 0;
    std::string a1;
    std::string a2;
    std::int64_t b_min = -3;
    std::int64_t b_max = 3;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t c_max = 4;
    int depth = 5;
    int box = 3;
    int samples = 30;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::string format = "json";
    std::string variant = "plain";
    bool oracle = false;
};

/// Parses argv (argv[0] is the program name). Throws ConfigError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes a parsed config; the report goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping errors to exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace howe::cli
