#pragma once

#include <string>
#include <vector>

namespace permucell::suite {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool stable = true;   // truncation-stability verdict where applicable
    std::string detail;   // counts checked, or the first failure found
    double seconds = 0.0;
};

struct SuiteOptions {
    int jobs = 1;
    std::string artifact_dir;  // empty = do not write artifact files
};

/// Runs every acceptance criterion; one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt);

/// Deterministic artifact files (betti tables, f-vectors, a cached boundary
/// matrix, bracket compatibility report) under the given directory.
void write_suite_artifacts(const std::string& dir);

/// True iff every criterion passed (not-yet-stable counts as passing).
bool all_passed(const std::vector<CriterionResult>& results);

std::string format_report(const std::vector<CriterionResult>& results);

}  // namespace permucell::suite
