#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "compton/constants.hpp"

// Self-contained acceptance suite: every numbered check computes its
// observable from scratch and compares against the pinned targets and
// tolerances in verify.cpp. Used by both the acceptance test binary and the
// `verify` CLI subcommand.

namespace compton {

struct VerifyOptions {
    // Coupling used in cross-section and rate checks; overridable so a test
    // harness can confirm the suite catches a corrupted constant.
    double alpha_fs = constants::alpha_fs;
    // Skip the whole-curve and grid checks (quick CI subset).
    bool quick = false;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt = {});

// True when every non-skipped criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

// One line per criterion: "[NN] PASS|FAIL|SKIP name | detail".
void print_results(const std::vector<CriterionResult>& results,
                   std::ostream& os);

} // namespace compton
