#pragma once

#include <vector>

#include "cyclic/numeric.hpp"

namespace cyclic {

// Modified modular doubling cycle: the primitive period of
// mod*(a * 2^j, b) for j >= 1, with odd seed a from RRS*(b).
// The seed reappears as the last element.
struct MdsCycle {
    i64 b = 0;
    i64 seed = 0;
    std::vector<i64> c;
    i64 period() const { return static_cast<i64>(c.size()); }
};

struct MdsSystem {
    i64 b = 0;
    std::vector<MdsCycle> cycles;
    i64 count = 0;    // c*(b)
    i64 period = 0;   // P(b), common to all cycles
};

// Built by the branch recurrence c_j = 2c or b - 2c (split at (b-1)/4),
// starting from c_1 = mod*(2a, b).
MdsCycle mds_cycle(i64 b, i64 a);

// Same cycle built from direct powers mod*(a*2^j, b); cross-check path.
MdsCycle mds_cycle_by_powers(i64 b, i64 a);

// Cycles seeded at 1, then at the smallest odd member of RRS*(b) not yet
// covered; together they cover RRS*(b) exactly once.
MdsSystem mds_system(i64 b);

// [a, c_1, ..., c_{P-1}]: the cycle rotated to start at its seed.
std::vector<i64> mds_prime_variant(const MdsCycle& cycle);

// Plain doubling cycle mod(a*2^j, b); period is P(b) when 2^P = +1 (mod b)
// and 2 P(b) when 2^P = -1.
std::vector<i64> ds_cycle(i64 b, i64 a);

} // namespace cyclic
