#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "howe/report.hpp"
#include "howe/weylmodule.hpp"

namespace howe {

/// Sizes for the invariant suite run by `verify`.
struct SuiteConfig {
    explicit SuiteConfig(ModuleParams p) : params(std::move(p)) {}

    ModuleParams params;
    std::int64_t b_min = -3;
    std::int64_t b_max = 3;
    std::int64_t c_max = 4;
    int depth = 5;
    int box = 3;
    int samples = 30;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

struct SuiteCheck {
    std::string module;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs every module's invariant checks. Each check draws from its own
/// stream derived from the seed, so the outcome does not depend on `jobs`.
std::vector<SuiteCheck> run_suite(const SuiteConfig& config);

Json suite_json(const SuiteConfig& config, const std::vector<SuiteCheck>& checks);
std::string suite_markdown(const SuiteConfig& config, const std::vector<SuiteCheck>& checks);

}  // namespace howe
