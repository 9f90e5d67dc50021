#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thetalift/domain.hpp"

namespace thetalift {

// Seeded property suites driving the invariants of every module. Shared by
// the CLI `verify` subcommand and the acceptance tests; identical seeds give
// identical results.

struct SuiteReport {
    std::string suite;
    int cases = 0;
    int failures = 0;
    double worst_error = 0.0;
    bool has_kappa = false;
    cplx kappa = 1.0;

    bool passed() const { return failures == 0 && cases > 0; }
};

std::vector<std::string> suite_names();

// tol <= 0 selects each suite's default tolerance.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, double tol,
                      long long p = 0, long long N = 5);  // p = 0: both 2 and 3 for hecke

}  // namespace thetalift
