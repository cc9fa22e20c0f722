#pragma once

#include <vector>

#include "cyclic/numeric.hpp"

namespace cyclic {

// Unsigned cycle of the recurrence q_j = |b - 2 q_{j-1}| on odd residues
// coprime to b; the primitive period starts at the seed.
struct SbbCycle {
    i64 b = 0;
    std::vector<i64> q;
    i64 pes() const { return static_cast<i64>(q.size()); }
};

// Signed variant: q_j = b - 2|q_{j-1}|, seeded so the sequence is purely
// periodic. The seed sign is +1 exactly when 2*q_last < b for the matching
// unsigned cycle; for the first cycle this equals (-1)^((b+1)/2).
struct SignedCycle {
    i64 b = 0;
    std::vector<i64> q;
};

struct SbbSystem {
    i64 b = 0;
    std::vector<SbbCycle> cycles;
    i64 count = 0;   // B(b)
    i64 pes = 0;     // common period
};

SbbCycle sbb_cycle(i64 b, i64 q0);

// Cycles seeded at 1, then at the smallest member of RRSodd(b) not yet
// covered; together they partition RRSodd(b).
SbbSystem sbb_system(i64 b);

std::vector<SignedCycle> sbb_signed_system(i64 b);

i64 cycle_sum(const SbbCycle& cycle);

} // namespace cyclic
