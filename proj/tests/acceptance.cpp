// Acceptance battery: one pass/fail line per criterion, exact arithmetic
// throughout (tolerance identically zero).
#include <cstdio>
#include <iostream>

#include "permucell/suite.hpp"

int main() {
    permucell::suite::SuiteOptions opt;
    opt.jobs = 1;
    auto results = permucell::suite::run_acceptance(opt);
    std::cout << permucell::suite::format_report(results);
    return permucell::suite::all_passed(results) ? 0 : 1;
}
