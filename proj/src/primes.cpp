#include "cyclic/primes.hpp"

namespace cyclic {

i64 mult_order(i64 a, i64 m) {
    require(m >= 2, "mult_order: modulus must be >= 2");
    i64 base = mod_floor(a, m);
    require(std::gcd(base, m) == 1, "mult_order: argument not coprime to modulus");
    i64 x = base;
    i64 order = 1;
    while (x != 1) {
        x = mul_mod(x, base, m);
        ++order;
        if (order > m) throw std::logic_error("mult_order: no closure");
    }
    return order;
}

PrimeClassification classify_prime(i64 p) {
    require(p >= 3 && p % 2 == 1 && is_prime(p), "classify_prime: p must be an odd prime");
    PrimeClassification result;
    result.p = p;
    result.order2_3p = mult_order(2, 3 * p);
    if (p == 3) {
        result.order4 = 1;
        result.pes = 1;
        result.cycle_count = 1;
    } else {
        result.order4 = mult_order(4, p);
        result.pes = result.order4;
        result.cycle_count = (p - 1) / result.order2_3p;
    }
    result.single_cycle = result.cycle_count == 1;
    return result;
}

std::vector<i64> primes_with_multicycle(i64 limit) {
    require(limit >= 3, "primes_with_multicycle: limit must be >= 3");
    std::vector<i64> out;
    for (i64 p = 5; p <= limit; p += 2) {
        if (!is_prime(p)) continue;
        if (!classify_prime(p).single_cycle) out.push_back(p);
    }
    return out;
}

bool multicycle_q_criterion(i64 p) {
    require(p >= 3 && p % 2 == 1 && is_prime(p), "multicycle_q_criterion: p must be an odd prime");
    for (i64 q = 3; q < p; q += 2) {
        if (!is_prime(q)) continue;
        if (euler_phi(p * q) / 2 == mult_order(2, p * q)) return false;
    }
    return p > 3;   // p = 3 has no smaller odd prime and B(3) = 1
}

} // namespace cyclic
