#include "cyclic/residue.hpp"

#include <algorithm>

namespace cyclic {

namespace {

std::vector<i64> coprime_scan(i64 n) {
    std::vector<i64> out;
    for (i64 k = 1; k < n; ++k) {
        if (std::gcd(k, n) == 1) out.push_back(k);
    }
    return out;
}

} // namespace

i64 sigma_star(i64 n) {
    require(n >= 1, "sigma_star: n must be positive");
    if (n <= 2) return 1;
    return euler_phi(n) / 2;
}

i64 delta_degree(i64 n) {
    require(n >= 1, "delta_degree: n must be positive");
    if (n == 1) return 1;
    return euler_phi(2 * n) / 2;
}

ResidueSet rrs(i64 n) {
    require(n >= 1, "rrs: n must be positive");
    if (n == 1) return {1, ResidueKind::Full, {0}};
    return {n, ResidueKind::Full, coprime_scan(n)};
}

ResidueSet rrs_star(i64 n) {
    require(n >= 1, "rrs_star: n must be positive");
    if (n == 1) return {1, ResidueKind::Half, {0}};
    if (n == 2) return {2, ResidueKind::Half, {1}};
    std::vector<i64> full = coprime_scan(n);
    full.resize(full.size() / 2);
    return {n, ResidueKind::Half, std::move(full)};
}

ResidueSet rrs_odd(i64 b) {
    require_odd_modulus(b);
    std::vector<i64> out;
    for (i64 k = 1; k <= b - 2; k += 2) {
        if (std::gcd(k, b) == 1) out.push_back(k);
    }
    return {b, ResidueKind::OddFull, std::move(out)};
}

namespace {

ResidueSet star_parity(i64 b, bool odd) {
    ResidueSet half = rrs_star(b);
    std::vector<i64> out;
    for (i64 v : half.elements) {
        if ((v % 2 == 1) == odd) out.push_back(v);
    }
    return {b, odd ? ResidueKind::OddHalf : ResidueKind::EvenHalf, std::move(out)};
}

} // namespace

ResidueSet rrs_star_odd(i64 b) {
    require(b >= 3, "rrs_star_odd: b must be >= 3");
    return star_parity(b, true);
}

ResidueSet rrs_star_even(i64 b) {
    require(b >= 3, "rrs_star_even: b must be >= 3");
    return star_parity(b, false);
}

i64 mod_star(i64 a, i64 n) {
    require(n >= 1, "mod_star: n must be positive");
    i64 m = mod_floor(a, n);
    if (std::gcd(m, n) != 1 && n != 1) {
        throw std::domain_error("mod_star: argument not coprime to modulus");
    }
    // fold at n/2, decided exactly: 2m <= n keeps m
    return 2 * m <= n ? m : n - m;
}

i64 mod_star_mul(i64 a, i64 b, i64 n) {
    require(n >= 1, "mod_star_mul: n must be positive");
    i64 x = mod_star(a, n);
    i64 y = mod_star(b, n);
    return mod_star(mul_mod(x, y, n), n);
}

i64 mod_star_order(i64 a, i64 n) {
    require(n >= 1, "mod_star_order: n must be positive");
    if (n == 1) {
        mod_star(a, n);
        return 1;
    }
    i64 identity = 1;
    i64 x = mod_star(a, n);
    i64 order = 1;
    while (x != identity) {
        x = mod_star_mul(x, a, n);
        ++order;
        if (order > n) throw std::logic_error("mod_star_order: no closure");
    }
    return order;
}

GStarStructure gstar_structure(i64 n) {
    require(n >= 3, "gstar_structure: n must be >= 3");
    GStarStructure result;
    result.n = n;
    result.group_order = sigma_star(n);
    for (i64 a : rrs_star(n).elements) {
        result.orders.push_back(mod_star_order(a, n));
    }
    result.max_order = *std::max_element(result.orders.begin(), result.orders.end());
    result.cyclic = result.max_order == result.group_order;
    return result;
}

} // namespace cyclic
