#pragma once

#include <vector>

#include "cyclic/numeric.hpp"

namespace cyclic {

// sign * 2 cos(pi j / b) with j from RRS*(b).
struct SignedResidue {
    int sign = 0;   // +1 or -1
    i64 j = 0;
    bool operator==(const SignedResidue& other) const = default;
};

// Cycle of iterating x^2 - 2 on the seed 2 cos(pi a / b), starting with
// one application. Entry k represents 2 cos(pi a 2^k / b); its residue is
// mod*(a 2^k, b) and its sign is the sign of cos(pi x / b) for
// x = mod(a 2^k, 2b), i.e. "+" exactly on (0, b/2) and (3b/2, 2b).
struct IcosCycle {
    i64 b = 0;
    i64 seed = 0;
    std::vector<SignedResidue> entries;
};

IcosCycle icos_cycle(i64 b, i64 a);

// Seeds enumerated as in the MDS system; the residues across all cycles
// cover RRS*(b) exactly once.
std::vector<IcosCycle> icos_system(i64 b);

// Numeric values sign * 2 cos(pi j / b). Also cross-checks each entry
// against the iteration v -> v^2 - 2 from the numeric seed, carried in
// extended precision (plain double decorrelates after ~40 steps because
// the map doubles angle errors); throws logic_error beyond tolerance.
std::vector<double> icos_numeric(const IcosCycle& cycle, double tolerance = 1e-9);

} // namespace cyclic
