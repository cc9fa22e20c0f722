#pragma once

#include <vector>

#include "cyclic/numeric.hpp"

namespace cyclic {

// Reduced residue systems and the folded congruence mod*.
//
// mod*(a, n) identifies a with -a: it is mod(a, n) when that lies in
// [0, n/2], and mod(-a, n) otherwise. The representatives form RRS*(n),
// the first half of the ordinary reduced residue system, on which
// multiplication is well defined (addition is not).

enum class ResidueKind { Full, Half, OddFull, OddHalf, EvenHalf };

struct ResidueSet {
    i64 n = 0;
    ResidueKind kind = ResidueKind::Full;
    std::vector<i64> elements; // ascending
};

// |RRS*(n)|: 1 for n = 1, 2; phi(n)/2 for n >= 3.
i64 sigma_star(i64 n);

// Degree of 2*cos(pi/n): 1 for n = 1; phi(2n)/2 for n >= 2.
i64 delta_degree(i64 n);

// RRS(n): ascending coprime residues in [0, n-1]; {0} for n = 1.
ResidueSet rrs(i64 n);

// RRS*(n): first half of RRS(n); {0} for n = 1, {1} for n = 2.
ResidueSet rrs_star(i64 n);

// RRSodd(b): odd coprime residues in [1, b-2], for odd b >= 3.
ResidueSet rrs_odd(i64 b);

// Parity split of RRS*(b).
ResidueSet rrs_star_odd(i64 b);
ResidueSet rrs_star_even(i64 b);

// Folded residue of a, for gcd(a, n) = 1. Errors on non-coprime input.
i64 mod_star(i64 a, i64 n);

// mod*(a*b, n); both factors must be coprime to n.
i64 mod_star_mul(i64 a, i64 b, i64 n);

// Least k >= 1 with mod*(a^k, n) = 1 (order in the group G*_n).
i64 mod_star_order(i64 a, i64 n);

// Element orders of G*_n over RRS*(n), with a cyclicity flag.
struct GStarStructure {
    i64 n = 0;
    i64 group_order = 0;            // sigma*(n)
    std::vector<i64> orders;        // aligned with rrs_star(n).elements
    i64 max_order = 0;
    bool cyclic = false;            // some element has order sigma*(n)
};

GStarStructure gstar_structure(i64 n);

} // namespace cyclic
