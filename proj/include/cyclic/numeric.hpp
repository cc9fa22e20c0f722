#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cyclic {

using i64 = std::int64_t;

// Euler's totient by trial-division factorization.
i64 euler_phi(i64 n);

// Deterministic trial-division primality test.
bool is_prime(i64 n);

// 2-adic valuation of n > 0.
int valuation2(i64 n);

// Canonical representative of a mod n in [0, n-1], also for negative a.
inline i64 mod_floor(i64 a, i64 n) {
    i64 m = a % n;
    return m < 0 ? m + n : m;
}

inline i64 mul_mod(i64 a, i64 b, i64 n) {
    return static_cast<i64>(static_cast<__int128>(a) * b % n);
}

i64 pow_mod(i64 base, i64 exp, i64 n);

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline void require_odd_modulus(i64 b) {
    require(b >= 3 && b % 2 == 1, "modulus must be odd and >= 3");
}

} // namespace cyclic
