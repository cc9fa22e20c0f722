#include "cyclic/numeric.hpp"

namespace cyclic {

i64 euler_phi(i64 n) {
    require(n >= 1, "euler_phi: n must be positive");
    i64 result = n;
    i64 m = n;
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (i64 p = 3; p * p <= n; p += 2) {
        if (n % p == 0) return false;
    }
    return true;
}

int valuation2(i64 n) {
    require(n > 0, "valuation2: n must be positive");
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

i64 pow_mod(i64 base, i64 exp, i64 n) {
    require(n >= 1 && exp >= 0, "pow_mod: bad arguments");
    if (n == 1) return 0;
    i64 result = 1;
    i64 b = mod_floor(base, n);
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, b, n);
        b = mul_mod(b, b, n);
        exp >>= 1;
    }
    return result;
}

} // namespace cyclic
