#pragma once

#include <string>
#include <vector>

namespace isotropic {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;  // check succeeded and finished within the limit
    bool check_ok = false;
    std::string detail;   // summary, or the first counterexample
    double seconds = 0;
    double limit_seconds = 0;
};

struct SuiteOptions {
    // Caps the weight bound of the sweeps; -1 keeps the full bounds.
    int max_weight = -1;
    unsigned threads = 0;
};

struct CriterionInfo {
    int id;
    const char* name;
    const char* group;
    double limit_seconds;
};

const std::vector<CriterionInfo>& criteria();
// Suite names: "all", a group name, or a criterion number.
std::vector<std::string> suite_names();
std::vector<int> suite_members(const std::string& suite);

CriterionResult run_criterion(int id, const SuiteOptions& opts = {});
std::vector<CriterionResult> run_suite(const std::string& suite, const SuiteOptions& opts = {});

std::string format_result(const CriterionResult& r);

}  // namespace isotropic
