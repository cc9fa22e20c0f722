#pragma once

#include <string>
#include <vector>

#include "cyclic/numeric.hpp"

namespace cyclic {

// Invariant sweeps, one suite per module, plus golden-table comparisons.
// Suites run every check across their range and report failure counts;
// they are the workhorse behind `cyclic verify` and the acceptance tests.

struct SuiteOptions {
    i64 max_b = 0;   // odd-modulus sweep bound; 0 picks the suite default
    i64 max_n = 0;   // general-modulus bound (mod*/algebra suites)
    i64 max_p = 0;   // prime bound
};

struct SuiteResult {
    std::string name;
    i64 checked = 0;
    i64 failures = 0;
    std::vector<std::string> messages;   // first few failure details
};

const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

} // namespace cyclic
