#include "cyclic/schick.hpp"

#include <numeric>

#include "cyclic/residue.hpp"

namespace cyclic {

SbbCycle sbb_cycle(i64 b, i64 q0) {
    require_odd_modulus(b);
    require(q0 % 2 == 1 && q0 >= 1 && q0 < b && std::gcd(q0, b) == 1,
            "sbb_cycle: seed must be positive, odd, coprime to b and below b");
    SbbCycle cycle{b, {q0}};
    i64 q = q0;
    while (true) {
        q = std::abs(b - 2 * q);
        if (q == q0) break;
        cycle.q.push_back(q);
    }
    return cycle;
}

SbbSystem sbb_system(i64 b) {
    require_odd_modulus(b);
    SbbSystem system;
    system.b = b;
    std::vector<bool> covered(b, false);
    for (i64 seed : rrs_odd(b).elements) {
        if (covered[seed]) continue;
        SbbCycle cycle = sbb_cycle(b, seed);
        for (i64 q : cycle.q) covered[q] = true;
        system.cycles.push_back(std::move(cycle));
    }
    system.count = static_cast<i64>(system.cycles.size());
    system.pes = system.cycles.front().pes();
    return system;
}

std::vector<SignedCycle> sbb_signed_system(i64 b) {
    SbbSystem unsigned_system = sbb_system(b);
    std::vector<SignedCycle> out;
    out.reserve(unsigned_system.cycles.size());
    for (const SbbCycle& cycle : unsigned_system.cycles) {
        // The seed sign making the signed sequence purely periodic is
        // forced by the closing step q_0 = b - 2*q_last.
        int sign = 2 * cycle.q.back() < b ? +1 : -1;
        i64 seed = sign * cycle.q.front();
        SignedCycle signed_cycle{b, {seed}};
        i64 q = seed;
        for (i64 step = 1; step < cycle.pes(); ++step) {
            q = b - 2 * std::abs(q);
            signed_cycle.q.push_back(q);
        }
        if (b - 2 * std::abs(q) != seed) {
            throw std::logic_error("sbb_signed_system: cycle failed to close");
        }
        out.push_back(std::move(signed_cycle));
    }
    // First cycle's sign agrees with (-1)^((b+1)/2).
    int expected_first = ((b + 1) / 2) % 2 == 0 ? +1 : -1;
    if ((out.front().q.front() > 0 ? +1 : -1) != expected_first) {
        throw std::logic_error("sbb_signed_system: unexpected first seed sign");
    }
    return out;
}

i64 cycle_sum(const SbbCycle& cycle) {
    return std::accumulate(cycle.q.begin(), cycle.q.end(), i64{0});
}

} // namespace cyclic
