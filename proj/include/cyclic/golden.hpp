#pragma once

#include <string>
#include <vector>

#include "cyclic/numeric.hpp"

namespace cyclic::golden {

// Known-good reference values used by the verification suites.

struct MdsRow {
    i64 b = 0;
    std::vector<std::vector<i64>> cycles;
};

// Complete MDS systems for odd b = 3..71.
const std::vector<MdsRow>& mds_table();

struct PstarRow {
    i64 b = 0;
    std::string rendering;
};

// Canonical renderings of P*(b, x) for odd b = 3..21.
const std::vector<PstarRow>& pstar_table();

struct CoachRow {
    std::vector<i64> a;
    std::vector<int> k;
};

// The four coaches of the b = 65 system.
const std::vector<CoachRow>& coach_65();

// The 42-label tour for b = 7, first cycle.
const std::vector<i64>& tour_7_1();

// Coefficients (ascending) of the minimal polynomial of 2 cos(2 pi / 65).
const std::vector<i64>& mpr2_65();

} // namespace cyclic::golden
