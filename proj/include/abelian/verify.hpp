#pragma once

#include <string>
#include <vector>

namespace abelian {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int workers = 1;          // independent criteria may run concurrently
    std::string suite = "";   // empty = all, otherwise a criterion name filter
};

/// Runs the acceptance battery. Output order and content are deterministic
/// and independent of the worker count.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {});

/// One "PASS/FAIL criterion-N name: detail" line per criterion.
std::string format_report(const std::vector<CriterionResult>& results);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace abelian
