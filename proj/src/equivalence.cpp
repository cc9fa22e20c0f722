#include "cyclic/equivalence.hpp"

namespace cyclic {

OddSkeleton odd_skeleton(const MdsCycle& cycle) {
    require(!cycle.c.empty() && cycle.c.back() == cycle.seed,
            "odd_skeleton: malformed MDS cycle");
    OddSkeleton skeleton;
    skeleton.b = cycle.b;
    for (std::size_t i = 0; i < cycle.c.size(); ++i) {
        if (cycle.c[i] % 2 == 1) {
            skeleton.co.push_back(cycle.c[i]);
            skeleton.indices.push_back(static_cast<i64>(i + 1));
        }
    }
    // Seed-first variant: positions 0, ind(co_1), ..., ind(co_{r-1}), P.
    i64 period = cycle.period();
    i64 prev = 0;
    for (std::size_t j = 0; j + 1 < skeleton.indices.size(); ++j) {
        skeleton.l_prime.push_back(skeleton.indices[j] - prev);
        prev = skeleton.indices[j];
    }
    skeleton.l_prime.push_back(period - prev);

    // Odd-element recurrence: each odd entry is b - 2^l * previous odd.
    i64 b = cycle.b;
    i64 previous = cycle.seed;
    for (std::size_t j = 0; j + 1 < skeleton.co.size(); ++j) {
        if (skeleton.co[j] != b - (i64{1} << skeleton.l_prime[j]) * previous) {
            throw std::logic_error("odd_skeleton: odd-element recurrence violated");
        }
        previous = skeleton.co[j];
    }
    return skeleton;
}

CoachSymbolLists coach_symbol_lists(const MdsCycle& cycle) {
    OddSkeleton skeleton = odd_skeleton(cycle);
    CoachSymbolLists lists;
    std::size_t r = skeleton.co.size();
    for (std::size_t j = 0; j < r; ++j) {
        lists.u.push_back(skeleton.co[r - 1 - j]);
        i64 ind = skeleton.indices[r - 1 - j];
        i64 next_ind = j + 1 < r ? skeleton.indices[r - 2 - j] : 0;
        lists.l.push_back(ind - next_ind);
    }
    return lists;
}

Coach mds_to_coach(const MdsCycle& cycle) {
    CoachSymbolLists lists = coach_symbol_lists(cycle);
    Coach coach;
    coach.b = cycle.b;
    coach.a = lists.u;
    for (i64 l : lists.l) coach.k.push_back(static_cast<int>(l));
    // The rows must satisfy a_{j+1} = (b - a_j) / 2^{k_j} cyclically.
    for (std::size_t j = 0; j < coach.a.size(); ++j) {
        i64 next = coach.a[(j + 1) % coach.a.size()];
        if ((coach.b - coach.a[j]) != (next << coach.k[j])) {
            throw std::logic_error("mds_to_coach: coach recurrence violated");
        }
    }
    return coach;
}

ModifiedCoachSymbol modified_coach_symbol(const Coach& coach) {
    std::size_t r = coach.a.size();
    require(r > 0, "modified_coach_symbol: empty coach");
    ModifiedCoachSymbol symbol;
    symbol.cy.push_back(coach.a[0]);
    for (std::size_t j = 2; j <= r + 1; ++j) {
        symbol.cy.push_back(coach.a[r + 1 - j]);
    }
    for (std::size_t j = 1; j <= r; ++j) {
        symbol.ly.push_back(coach.k[r - j]);
    }
    return symbol;
}

std::vector<i64> emcsy(const Coach& coach) {
    ModifiedCoachSymbol symbol = modified_coach_symbol(coach);
    std::vector<i64> out;
    for (std::size_t j = 0; j + 1 < symbol.cy.size(); ++j) {
        i64 value = symbol.cy[j];
        out.push_back(value);
        for (i64 t = 1; t < symbol.ly[j]; ++t) {
            value *= 2;
            out.push_back(value);
        }
    }
    out.push_back(symbol.cy.back());
    return out;
}

MdsCycle coach_to_mds(const Coach& coach) {
    std::vector<i64> expanded = emcsy(coach);
    MdsCycle cycle;
    cycle.b = coach.b;
    cycle.seed = coach.a[0];
    cycle.c.assign(expanded.begin() + 1, expanded.end());
    return cycle;
}

SbbCycle mds_to_sbb(const MdsCycle& cycle) {
    i64 period = cycle.period();
    SbbCycle out;
    out.b = cycle.b;
    out.q.reserve(period);
    for (i64 j = 0; j < period; ++j) {
        out.q.push_back(cycle.b - 2 * cycle.c[(period - 2 + j + period) % period]);
    }
    if (out.q.front() != cycle.seed) {
        throw std::logic_error("mds_to_sbb: seed mismatch");
    }
    return out;
}

MdsCycle sbb_to_mds(const SbbCycle& cycle) {
    i64 period = cycle.pes();
    MdsCycle out;
    out.b = cycle.b;
    out.seed = cycle.q.front();
    out.c.reserve(period);
    for (i64 j = 1; j <= period; ++j) {
        i64 q_next = cycle.q[(j + 1) % period];
        if ((cycle.b - q_next) % 2 != 0) {
            throw std::logic_error("sbb_to_mds: parity failure");
        }
        out.c.push_back((cycle.b - q_next) / 2);
    }
    return out;
}

} // namespace cyclic
