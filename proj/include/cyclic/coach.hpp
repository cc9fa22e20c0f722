#pragma once

#include <vector>

#include "cyclic/numeric.hpp"

namespace cyclic {

// A coach is a two-row symbol closed under a_{j+1} = (b - a_j) / 2^{k_j},
// where 2^{k_j} is the exact power of 2 in b - a_j. The upper row holds
// odd residues coprime to b below b/2, the lower row the exponents.
struct Coach {
    i64 b = 0;
    std::vector<i64> a;   // upper row
    std::vector<int> k;   // lower row
    i64 length() const { return static_cast<i64>(a.size()); }
    i64 k_sum() const;
};

struct CoachSystem {
    i64 b = 0;
    std::vector<Coach> coaches;
    i64 c = 0;     // coach count
    i64 k = 0;     // quasi-order: the common lower-row sum
    std::vector<i64> r_tuple() const;
};

// Least k >= 1 with 2^k = +-1 (mod b), and the achieved sign.
struct QuasiOrder {
    i64 k = 0;
    int sign = 0;  // +1 or -1
};

Coach coach(i64 b, i64 a1);

// Coaches seeded at 1, then at the smallest odd member of RRS*(b) not in
// any previous upper row.
CoachSystem coach_system(i64 b);

QuasiOrder quasi_order(i64 b);

struct CoachTheoremReport {
    i64 b = 0;
    i64 c = 0;
    i64 k = 0;
    i64 product = 0;
    i64 phi_half = 0;
    bool holds = false;
};

// Recomputes phi(b)/2 independently and compares with c(b)*k(b).
CoachTheoremReport verify_coach_theorem(i64 b);

} // namespace cyclic
