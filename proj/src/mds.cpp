#include "cyclic/mds.hpp"

#include "cyclic/residue.hpp"

namespace cyclic {

namespace {

void check_seed(i64 b, i64 a) {
    require_odd_modulus(b);
    require(a % 2 == 1 && a >= 1 && 2 * a < b && std::gcd(a, b) == 1,
            "mds: seed must be an odd member of RRS*(b)");
}

} // namespace

MdsCycle mds_cycle(i64 b, i64 a) {
    check_seed(b, a);
    MdsCycle cycle{b, a, {}};
    i64 split = (b - 1) / 4;
    i64 c = mod_star(2 * a, b);
    cycle.c.push_back(c);
    while (c != a) {
        c = c <= split ? 2 * c : b - 2 * c;
        cycle.c.push_back(c);
    }
    return cycle;
}

MdsCycle mds_cycle_by_powers(i64 b, i64 a) {
    check_seed(b, a);
    MdsCycle cycle{b, a, {}};
    i64 doubled = mod_floor(2 * a, b);
    i64 c = mod_star(doubled, b);
    cycle.c.push_back(c);
    while (c != a) {
        doubled = mod_floor(2 * doubled, b);
        c = mod_star(doubled, b);
        cycle.c.push_back(c);
    }
    return cycle;
}

MdsSystem mds_system(i64 b) {
    require_odd_modulus(b);
    MdsSystem system;
    system.b = b;
    std::vector<bool> covered(b, false);
    for (i64 seed : rrs_star_odd(b).elements) {
        if (covered[seed]) continue;
        MdsCycle cycle = mds_cycle(b, seed);
        for (i64 c : cycle.c) {
            if (c % 2 == 1) covered[c] = true;
        }
        system.cycles.push_back(std::move(cycle));
    }
    system.count = static_cast<i64>(system.cycles.size());
    system.period = system.cycles.front().period();
    return system;
}

std::vector<i64> mds_prime_variant(const MdsCycle& cycle) {
    std::vector<i64> out;
    out.reserve(cycle.c.size());
    out.push_back(cycle.seed);
    out.insert(out.end(), cycle.c.begin(), cycle.c.end() - 1);
    return out;
}

std::vector<i64> ds_cycle(i64 b, i64 a) {
    check_seed(b, a);
    std::vector<i64> out;
    i64 d = mod_floor(2 * a, b);
    out.push_back(d);
    while (d != a) {
        d = mod_floor(2 * d, b);
        out.push_back(d);
    }
    return out;
}

} // namespace cyclic
