// Runs the full acceptance battery and prints one PASS/FAIL line per
// criterion; exits non-zero when anything fails.

#include <cstdio>
#include <cstdlib>

#include "abelian/verify.hpp"

int main() {
    abelian::VerifyOptions options;
    if (const char* env = std::getenv("ABELIAN_WORKERS")) options.workers = std::atoi(env);
    if (options.workers < 1) options.workers = 1;
    auto results = abelian::run_acceptance(options);
    std::fputs(abelian::format_report(results).c_str(), stdout);
    return abelian::all_pass(results) && !results.empty() ? 0 : 1;
}
