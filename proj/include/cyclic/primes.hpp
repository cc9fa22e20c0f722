#pragma once

#include <vector>

#include "cyclic/numeric.hpp"

namespace cyclic {

// Least e >= 1 with a^e = 1 (mod m), for gcd(a, m) = 1, m >= 2.
i64 mult_order(i64 a, i64 m);

// For odd primes p >= 5: pes(p) = order(4, p), 2*order(4, p) = order(2, 3p)
// and B(p) = (p-1)/order(2, 3p). p = 3 is the special single-cycle case.
struct PrimeClassification {
    i64 p = 0;
    i64 pes = 0;
    i64 cycle_count = 0;   // B(p)
    i64 order4 = 0;        // order of 4 mod p
    i64 order2_3p = 0;     // order of 2 mod 3p
    bool single_cycle = false;
};

PrimeClassification classify_prime(i64 p);

// Odd primes p <= limit with B(p) >= 2, ascending.
std::vector<i64> primes_with_multicycle(i64 limit);

// Slow full characterization: every odd prime q < p satisfies
// phi(p*q)/2 > order(2, p*q). Quadratic in pi(p); for cross-checks only.
bool multicycle_q_criterion(i64 p);

} // namespace cyclic
