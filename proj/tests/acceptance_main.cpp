// Acceptance gate: runs every numbered check at full resolution and prints
// one PASS/FAIL line per criterion. Exit status 0 iff all criteria pass, so
// the suite can gate CI directly.

#include <iostream>

#include "compton/verify.hpp"

int main() {
    const auto results = compton::run_acceptance();
    compton::print_results(results, std::cout);
    const bool ok = compton::all_passed(results);
    std::cout << (ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
    return ok ? 0 : 1;
}
