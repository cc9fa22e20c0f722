#include "cyclic/icos.hpp"

#include <cmath>
#include <numbers>

#include "cyclic/mds.hpp"
#include "cyclic/residue.hpp"
#include "highprec.hpp"

namespace cyclic {

namespace {

// Sign of cos(pi x / b) for integer x in (0, 2b); the boundaries b/2 and
// 3b/2 cannot be hit since b is odd.
int cosine_sign(i64 x, i64 b) {
    return (2 * x < b || 2 * x > 3 * b) ? +1 : -1;
}

} // namespace

IcosCycle icos_cycle(i64 b, i64 a) {
    require_odd_modulus(b);
    require(a % 2 == 1 && a >= 1 && 2 * a < b && std::gcd(a, b) == 1,
            "icos_cycle: seed must be an odd member of RRS*(b)");
    IcosCycle cycle{b, a, {}};
    i64 x = mod_floor(2 * a, 2 * b);
    while (true) {
        cycle.entries.push_back({cosine_sign(x, b), mod_star(x, b)});
        if (cycle.entries.back().j == a) break;
        x = mod_floor(2 * x, 2 * b);
    }
    return cycle;
}

std::vector<IcosCycle> icos_system(i64 b) {
    require_odd_modulus(b);
    std::vector<IcosCycle> out;
    std::vector<bool> covered(b, false);
    for (i64 seed : rrs_star_odd(b).elements) {
        if (covered[seed]) continue;
        IcosCycle cycle = icos_cycle(b, seed);
        for (const SignedResidue& entry : cycle.entries) {
            if (entry.j % 2 == 1) covered[entry.j] = true;
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::vector<double> icos_numeric(const IcosCycle& cycle, double tolerance) {
    std::vector<double> values;
    values.reserve(cycle.entries.size());
    for (const SignedResidue& entry : cycle.entries) {
        values.push_back(entry.sign * 2.0 *
                         std::cos(std::numbers::pi * static_cast<double>(entry.j) /
                                  static_cast<double>(cycle.b)));
    }
    // Cross-check against the actual iteration v -> v^2 - 2. Carried at
    // 768 bits: the map doubles angle errors each step, so plain double
    // iterates decorrelate from the symbolic entries after ~40 steps.
    const mp_bitcnt_t prec = 768;
    mpf_class v = 2 * highprec::cos_pi_ratio(cycle.seed, cycle.b, prec);
    for (std::size_t k = 0; k < values.size(); ++k) {
        v = v * v - 2;
        double deviation = std::abs(mpf_class(v - values[k]).get_d());
        if (deviation > tolerance) {
            throw std::logic_error("icos_numeric: iteration deviates from symbolic entry");
        }
    }
    return values;
}

} // namespace cyclic
