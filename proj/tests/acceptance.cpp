// Acceptance suite: ten timed criteria, one pass/fail line each.
// Usage: acceptance_tests [criterion ...]; no arguments runs all ten.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyclic/algebra.hpp"
#include "cyclic/coach.hpp"
#include "cyclic/equivalence.hpp"
#include "cyclic/golden.hpp"
#include "cyclic/icos.hpp"
#include "cyclic/mds.hpp"
#include "cyclic/primes.hpp"
#include "cyclic/render.hpp"
#include "cyclic/residue.hpp"
#include "cyclic/schick.hpp"
#include "cyclic/tour.hpp"

using namespace cyclic;

namespace {

struct Criterion {
    int id;
    const char* summary;
    double limit_ms;
    std::function<bool(std::string&)> run;
};

bool expect(bool ok, const char* what, std::string& detail) {
    if (!ok && detail.empty()) detail = what;
    return ok;
}

bool criterion_coach_65(std::string& detail) {
    CoachSystem system = coach_system(65);
    bool ok = expect(system.c == 4, "coach count", detail) &
              expect(system.k == 6, "quasi-order", detail) &
              expect(system.r_tuple() == std::vector<i64>{1, 3, 3, 5}, "r-tuple", detail);
    const auto& rows = golden::coach_65();
    ok &= expect(system.coaches.size() == rows.size(), "row count", detail);
    for (std::size_t i = 0; ok && i < rows.size(); ++i) {
        ok &= expect(system.coaches[i].a == rows[i].a, "upper row", detail);
        ok &= expect(system.coaches[i].k == rows[i].k, "lower row", detail);
    }
    return ok;
}

bool criterion_mds_table(std::string& detail) {
    bool ok = true;
    for (const golden::MdsRow& row : golden::mds_table()) {
        MdsSystem system = mds_system(row.b);
        MdsSystem reference;
        reference.b = row.b;
        for (const std::vector<i64>& cycle : row.cycles) {
            reference.cycles.push_back({row.b, cycle.back(), cycle});
        }
        if (render_mds_row(system) != render_mds_row(reference)) {
            std::ostringstream message;
            message << "row b = " << row.b << " differs";
            detail = message.str();
            ok = false;
        }
    }
    return ok;
}

bool criterion_tour_7(std::string& detail) {
    EulerTour tour = euler_tour(7, sbb_cycle(7, 1), 1);
    bool ok = expect(tour.labels == golden::tour_7_1(), "label list", detail) &
              expect(tour.length() == 42, "length", detail);
    TourStats stats = tour_stats(tour);
    ok &= expect(stats.distinct_nodes == 14, "node count", detail);
    for (const auto& [node, visits] : stats.visits) {
        ok &= expect(visits == 3, "visit count", detail);
    }
    return ok;
}

bool criterion_theorem_sweeps(std::string& detail) {
    for (i64 b = 3; b <= 2001; b += 2) {
        i64 phi_half = euler_phi(b) / 2;
        QuasiOrder order = quasi_order(b);
        CoachSystem coaches = coach_system(b);
        SbbSystem sbb = sbb_system(b);
        MdsSystem mds = mds_system(b);
        bool ok = coaches.c * coaches.k == phi_half &&
                  sbb.count * sbb.pes == phi_half &&
                  mds.count * mds.period == phi_half &&
                  mds.period == coaches.k && coaches.k == sbb.pes &&
                  sbb.pes == order.k;
        if (!ok) {
            detail = "identity failed at b = " + std::to_string(b);
            return false;
        }
    }
    return true;
}

bool criterion_tour_lengths(std::string& detail) {
    for (i64 b = 3; b <= 201; b += 2) {
        SbbSystem system = sbb_system(b);
        for (std::size_t i = 0; i < system.cycles.size(); ++i) {
            EulerTour tour;
            try {
                tour = euler_tour(b, system.cycles[i], i + 1);
            } catch (const std::logic_error&) {
                detail = "length mismatch at b = " + std::to_string(b);
                return false;
            }
            TourStats stats = tour_stats(tour);
            if (!stats.loop_free || !stats.arcs_distinct) {
                detail = "arc set not simple at b = " + std::to_string(b);
                return false;
            }
        }
    }
    return true;
}

bool criterion_equivalence(std::string& detail) {
    bool ok =
        expect(emcsy(coach(63, 5)) == std::vector<i64>{5, 10, 20, 23, 17, 29, 5},
               "expanded symbol for b = 63", detail) &
        expect(mds_to_sbb(mds_cycle(63, 5)).q ==
                   std::vector<i64>{5, 53, 43, 23, 17, 29},
               "cycle map for b = 63", detail) &
        expect(sbb_to_mds(sbb_cycle(63, 11)).c ==
                   std::vector<i64>{22, 19, 25, 13, 26, 11},
               "inverse cycle map for b = 63", detail);
    CoachSymbolLists lists = coach_symbol_lists(mds_cycle(63, 11));
    ok &= expect(lists.u == std::vector<i64>{11, 13, 25, 19}, "U list", detail);
    ok &= expect(lists.l == std::vector<i64>{2, 1, 1, 2}, "L list", detail);
    if (!ok) return false;

    for (i64 b = 3; b <= 501; b += 2) {
        MdsSystem mds = mds_system(b);
        for (const MdsCycle& cycle : mds.cycles) {
            Coach as_coach;
            SbbCycle as_sbb;
            try {
                as_coach = mds_to_coach(cycle);
                as_sbb = mds_to_sbb(cycle);
            } catch (const std::logic_error&) {
                detail = "conversion failed at b = " + std::to_string(b);
                return false;
            }
            MdsCycle back1 = coach_to_mds(as_coach);
            MdsCycle back2 = sbb_to_mds(as_sbb);
            if (back1.c != cycle.c || back2.c != cycle.c) {
                detail = "round-trip failed at b = " + std::to_string(b);
                return false;
            }
        }
        CoachSystem coaches = coach_system(b);
        for (const Coach& c : coaches.coaches) {
            Coach back = mds_to_coach(coach_to_mds(c));
            if (back.a != c.a || back.k != c.k) {
                detail = "coach round-trip failed at b = " + std::to_string(b);
                return false;
            }
        }
    }
    return true;
}

bool criterion_primes(std::string& detail) {
    for (i64 p = 5; p < 10000; p += 2) {
        if (!is_prime(p)) continue;
        PrimeClassification info = classify_prime(p);
        if (2 * info.order4 != info.order2_3p || quasi_order(p).k != info.order4) {
            detail = "order identity failed at p = " + std::to_string(p);
            return false;
        }
        if (p < 2000 && info.cycle_count != sbb_system(p).count) {
            detail = "cycle count mismatch at p = " + std::to_string(p);
            return false;
        }
    }
    bool ok = expect(primes_with_multicycle(45) == std::vector<i64>{17, 31, 41, 43},
                     "multi-cycle list", detail);
    for (i64 p : {3, 5, 7, 11, 13, 19, 23, 29, 37}) {
        ok &= expect(classify_prime(p).single_cycle, "single-cycle classification",
                     detail);
    }
    return ok;
}

bool criterion_polynomials(std::string& detail) {
    for (const golden::PstarRow& row : golden::pstar_table()) {
        if (render_rho_poly(p_star(row.b)) != row.rendering) {
            detail = "P* differs at b = " + std::to_string(row.b);
            return false;
        }
    }
    IntPoly m65 = mpr2(65);
    const auto& expected = golden::mpr2_65();
    if (m65.degree() != 24) {
        detail = "mpr2(65) degree";
        return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (m65[i] != expected[i]) {
            detail = "mpr2(65) coefficient " + std::to_string(i);
            return false;
        }
    }
    for (i64 n = 1; n <= 200; ++n) {
        if (mpr2(n) != mpr2_via_product(n)) {
            detail = "mpr2 routes disagree at n = " + std::to_string(n);
            return false;
        }
        if (std::abs(evaluate_at_cos(minimal_poly_C(n), 1, n)) >= 1e-6) {
            detail = "numeric root check failed at n = " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_icos(std::string& detail) {
    bool ok = expect(icos_cycle(17, 1).entries ==
                         std::vector<SignedResidue>{{+1, 2}, {+1, 4}, {+1, 8}, {-1, 1}},
                     "first cycle for b = 17", detail) &
              expect(icos_cycle(17, 3).entries ==
                         std::vector<SignedResidue>{{+1, 6}, {-1, 5}, {-1, 7}, {-1, 3}},
                     "second cycle for b = 17", detail);
    std::vector<double> values = icos_numeric(icos_cycle(17, 1), 1e-6);
    const double reference[4] = {1.864944459, 1.478017835, 0.1845367190, -1.965946199};
    for (int i = 0; i < 4; ++i) {
        ok &= expect(std::abs(values[i] - reference[i]) < 1e-6, "numeric value", detail);
    }
    if (!ok) return false;

    for (i64 b = 3; b <= 501; b += 2) {
        std::vector<IcosCycle> cycles = icos_system(b);
        MdsSystem mds = mds_system(b);
        if (cycles.size() != mds.cycles.size()) {
            detail = "system size mismatch at b = " + std::to_string(b);
            return false;
        }
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            if (cycles[i].entries.size() != mds.cycles[i].c.size()) {
                detail = "period mismatch at b = " + std::to_string(b);
                return false;
            }
            for (std::size_t j = 0; j < cycles[i].entries.size(); ++j) {
                if (cycles[i].entries[j].j != mds.cycles[i].c[j]) {
                    detail = "residue mismatch at b = " + std::to_string(b);
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_mod_star(std::string& detail) {
    for (i64 n = 3; n <= 200; ++n) {
        std::vector<i64> full = rrs(n).elements;
        for (i64 a : full) {
            for (i64 b : full) {
                if (mod_star_mul(a, b, n) != mod_star(a * b, n)) {
                    detail = "multiplicativity failed at n = " + std::to_string(n);
                    return false;
                }
            }
        }
        std::vector<i64> half = rrs_star(n).elements;
        std::set<i64> members(half.begin(), half.end());
        for (i64 a : half) {
            int inverses = 0;
            for (i64 b : half) {
                i64 product = mod_star_mul(a, b, n);
                if (!members.count(product)) {
                    detail = "closure failed at n = " + std::to_string(n);
                    return false;
                }
                if (product == 1) ++inverses;
            }
            if (inverses != 1) {
                detail = "inverse not unique at n = " + std::to_string(n);
                return false;
            }
        }
    }
    GStarStructure g65 = gstar_structure(65);
    return expect(!g65.cyclic && g65.max_order == 12, "structure of G*_65", detail);
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "b=65 coach system matches the reference symbol", 1.0, criterion_coach_65},
        {2, "mds systems match the b=3..71 reference table", 100.0, criterion_mds_table},
        {3, "b=7 tour reproduces the 42-label reference trail", 1.0, criterion_tour_7},
        {4, "count*period identities for odd b in [3, 2001]", 60000.0,
         criterion_theorem_sweeps},
        {5, "tour lengths match the closed form for odd b in [3, 201]", 30000.0,
         criterion_tour_lengths},
        {6, "conversion round-trips for odd b in [3, 501]", 30000.0,
         criterion_equivalence},
        {7, "prime order identities below 10^4", 60000.0, criterion_primes},
        {8, "reference polynomials and dual construction routes", 60000.0,
         criterion_polynomials},
        {9, "icos residues and numeric values", 30000.0, criterion_icos},
        {10, "mod* multiplicativity and group axioms up to 200", 10000.0,
         criterion_mod_star},
    };
    return all;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& criterion : criteria()) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), criterion.id) == selected.end()) {
            continue;
        }
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& error) {
            detail = error.what();
        }
        double elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                      start)
                .count();
        if (elapsed_ms > criterion.limit_ms) {
            ok = false;
            if (detail.empty()) detail = "time limit exceeded";
        }
        std::printf("%s criterion %d: %s (%.2f ms, limit %.0f ms)%s%s\n",
                    ok ? "PASS" : "FAIL", criterion.id, criterion.summary, elapsed_ms,
                    criterion.limit_ms, detail.empty() ? "" : " -- ",
                    detail.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
