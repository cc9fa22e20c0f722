#include "cyclic/coach.hpp"

#include <numeric>

#include "cyclic/residue.hpp"

namespace cyclic {

i64 Coach::k_sum() const {
    return std::accumulate(k.begin(), k.end(), i64{0});
}

std::vector<i64> CoachSystem::r_tuple() const {
    std::vector<i64> out;
    out.reserve(coaches.size());
    for (const Coach& coach : coaches) out.push_back(coach.length());
    return out;
}

Coach coach(i64 b, i64 a1) {
    require_odd_modulus(b);
    require(a1 % 2 == 1 && a1 >= 1 && 2 * a1 < b && std::gcd(a1, b) == 1,
            "coach: seed must be odd, coprime to b and below b/2");
    Coach result{b, {a1}, {}};
    i64 a = a1;
    while (true) {
        int v = valuation2(b - a);
        result.k.push_back(v);
        a = (b - a) >> v;
        if (a == a1) break;
        result.a.push_back(a);
    }
    return result;
}

CoachSystem coach_system(i64 b) {
    require_odd_modulus(b);
    CoachSystem system;
    system.b = b;
    std::vector<bool> covered(b, false);
    for (i64 seed : rrs_star_odd(b).elements) {
        if (covered[seed]) continue;
        Coach next = coach(b, seed);
        for (i64 a : next.a) covered[a] = true;
        system.coaches.push_back(std::move(next));
    }
    system.c = static_cast<i64>(system.coaches.size());
    system.k = system.coaches.front().k_sum();
    return system;
}

QuasiOrder quasi_order(i64 b) {
    require_odd_modulus(b);
    i64 x = 1;
    for (i64 k = 1; k <= b; ++k) {
        x = mul_mod(x, 2, b);
        if (x == 1) return {k, +1};
        if (x == b - 1) return {k, -1};
    }
    throw std::logic_error("quasi_order: no exponent found");
}

CoachTheoremReport verify_coach_theorem(i64 b) {
    CoachSystem system = coach_system(b);
    CoachTheoremReport report;
    report.b = b;
    report.c = system.c;
    report.k = system.k;
    report.product = system.c * system.k;
    report.phi_half = euler_phi(b) / 2;
    report.holds = report.product == report.phi_half;
    return report;
}

} // namespace cyclic
