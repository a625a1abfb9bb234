#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtknots::cli {

struct CaseResult {
    std::string name;
    bool ok;
    std::string detail;
};

struct SuiteOptions {
    int max_n = 0;  // 0 selects the suite default
    int max_m = 0;
    std::uint64_t seed = 0;
    int threads = 1;
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite name.
std::vector<CaseResult> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace qtknots::cli
