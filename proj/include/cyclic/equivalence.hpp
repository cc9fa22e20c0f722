#pragma once

#include <vector>

#include "cyclic/coach.hpp"
#include "cyclic/mds.hpp"
#include "cyclic/schick.hpp"

namespace cyclic {

// Conversions between the three systems. Each map is applied verbatim and
// validated against the target recurrence, so the round-trip tests are
// genuine cross-checks rather than re-derivations.

// Odd elements of an MDS cycle, their 1-based positions, and the backward
// step counts of the seed-first variant. co.back() is the seed (position P).
struct OddSkeleton {
    i64 b = 0;
    std::vector<i64> co;        // odd elements in cycle order
    std::vector<i64> indices;   // positions in the cycle, 1-based
    std::vector<i64> l_prime;   // index differences, wrapping to P; sums to P
};

struct CoachSymbolLists {
    std::vector<i64> u;   // odd elements read backwards
    std::vector<i64> l;   // backward index steps, ind(u_{r+1}) := 0
};

// Coach rows reversed for expansion: cy has length r+1 with
// cy_1 = a_1 = cy_{r+1}, ly has length r and sums to the quasi-order.
struct ModifiedCoachSymbol {
    std::vector<i64> cy;
    std::vector<i64> ly;
};

OddSkeleton odd_skeleton(const MdsCycle& cycle);

CoachSymbolLists coach_symbol_lists(const MdsCycle& cycle);

// A = U, K = L.
Coach mds_to_coach(const MdsCycle& cycle);

ModifiedCoachSymbol modified_coach_symbol(const Coach& coach);

// One-line expansion: ly_j - 1 doublings inserted between cy_j and cy_{j+1};
// length k(b) + 1, first and last entries equal the coach seed.
std::vector<i64> emcsy(const Coach& coach);

// EMCSy without its leading seed.
MdsCycle coach_to_mds(const Coach& coach);

// q_j = b - 2 c_{P-1+j} with cyclic indices; q_0 equals the MDS seed.
SbbCycle mds_to_sbb(const MdsCycle& cycle);

// c_j = (b - q_{j+1}) / 2 with cyclic indices.
MdsCycle sbb_to_mds(const SbbCycle& cycle);

} // namespace cyclic
