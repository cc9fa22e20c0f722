#include "cyclic/verify.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

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

namespace cyclic {

namespace {

struct Checker {
    SuiteResult result;

    void operator()(bool ok, const std::string& context) {
        ++result.checked;
        if (!ok) {
            ++result.failures;
            if (result.messages.size() < 5) result.messages.push_back(context);
        }
    }
};

std::string at_b(const char* what, i64 b) {
    std::ostringstream out;
    out << what << " at b = " << b;
    return out.str();
}

SuiteResult suite_modstar(const SuiteOptions& options) {
    i64 max_n = options.max_n ? options.max_n : (options.max_b ? options.max_b : 200);
    Checker check;
    check.result.name = "modstar";
    for (i64 n = 3; n <= max_n; ++n) {
        ResidueSet half = rrs_star(n);
        check(static_cast<i64>(half.elements.size()) == euler_phi(n) / 2,
              at_b("RRS* size", n));
        check(2 * half.elements.back() <= n, at_b("RRS* bound", n));

        ResidueSet full = rrs(n);
        for (i64 a : full.elements) {
            check(mod_star(a, n) == mod_star(n - a, n), at_b("fold symmetry", n));
        }
        for (i64 a : full.elements) {
            for (i64 b : full.elements) {
                if (mod_star_mul(a, b, n) != mod_star(a * b, n)) {
                    check(false, at_b("multiplicativity", n));
                }
            }
        }
        check(true, at_b("multiplicativity sweep", n));

        ResidueSet odd = rrs_star_odd(n);
        ResidueSet even = rrs_star_even(n);
        check(odd.elements.size() + even.elements.size() == half.elements.size(),
              at_b("parity split", n));

        if (n <= 100) {
            std::set<i64> members(half.elements.begin(), half.elements.end());
            for (i64 a : half.elements) {
                bool has_inverse = false;
                for (i64 b : half.elements) {
                    i64 product = mod_star_mul(a, b, n);
                    if (!members.count(product)) check(false, at_b("closure", n));
                    if (product == mod_star(1, n)) {
                        if (has_inverse) check(false, at_b("inverse uniqueness", n));
                        has_inverse = true;
                    }
                }
                if (!has_inverse) check(false, at_b("inverse existence", n));
            }
            check(true, at_b("group axioms", n));
        }
    }
    return check.result;
}

SuiteResult suite_coach(const SuiteOptions& options) {
    i64 max_b = options.max_b ? options.max_b : 2001;
    Checker check;
    check.result.name = "coach";
    for (i64 b = 3; b <= max_b; b += 2) {
        CoachSystem system = coach_system(b);
        QuasiOrder order = quasi_order(b);
        check(system.k == order.k, at_b("k-sum equals quasi-order", b));
        int sign = 0;
        bool sums_ok = true, signs_ok = true;
        for (const Coach& coach : system.coaches) {
            if (coach.k_sum() != system.k) sums_ok = false;
            int coach_sign = coach.length() % 2 == 0 ? +1 : -1;
            if (sign == 0) sign = coach_sign;
            if (coach_sign != sign) signs_ok = false;
        }
        check(sums_ok, at_b("common k-sum", b));
        check(signs_ok, at_b("(-1)^r constant across coaches", b));
        check(sign == order.sign, at_b("2^k = (-1)^r (mod b)", b));
        check(pow_mod(2, system.k, b) == (order.sign == 1 ? 1 : b - 1),
              at_b("quasi-order congruence", b));
        check(system.c * system.k == euler_phi(b) / 2, at_b("coach theorem", b));

        std::vector<i64> merged;
        for (const Coach& coach : system.coaches) {
            merged.insert(merged.end(), coach.a.begin(), coach.a.end());
        }
        std::sort(merged.begin(), merged.end());
        check(merged == rrs_star_odd(b).elements, at_b("upper rows partition RRS*odd", b));
    }
    return check.result;
}

SuiteResult suite_schick(const SuiteOptions& options) {
    i64 max_b = options.max_b ? options.max_b : 2001;
    i64 signed_max = std::min<i64>(max_b, 501);
    Checker check;
    check.result.name = "schick";
    for (i64 b = 3; b <= max_b; b += 2) {
        SbbSystem system = sbb_system(b);
        QuasiOrder order = quasi_order(b);
        bool period_ok = true;
        for (const SbbCycle& cycle : system.cycles) {
            if (cycle.pes() != order.k) period_ok = false;
        }
        check(period_ok, at_b("pes equals quasi-order", b));
        check(system.count * system.pes == euler_phi(b) / 2, at_b("cycle-count theorem", b));

        std::vector<i64> merged;
        for (const SbbCycle& cycle : system.cycles) {
            merged.insert(merged.end(), cycle.q.begin(), cycle.q.end());
        }
        std::sort(merged.begin(), merged.end());
        check(merged == rrs_odd(b).elements, at_b("cycles partition RRSodd", b));

        if (b <= signed_max) {
            std::vector<SignedCycle> signed_cycles = sbb_signed_system(b);
            bool abs_ok = signed_cycles.size() == system.cycles.size();
            for (std::size_t i = 0; abs_ok && i < signed_cycles.size(); ++i) {
                if (signed_cycles[i].q.size() != system.cycles[i].q.size()) abs_ok = false;
                for (std::size_t j = 0; abs_ok && j < signed_cycles[i].q.size(); ++j) {
                    if (std::abs(signed_cycles[i].q[j]) != system.cycles[i].q[j]) abs_ok = false;
                }
            }
            check(abs_ok, at_b("signed cycles match unsigned", b));
        }
    }
    return check.result;
}

SuiteResult suite_mds(const SuiteOptions& options) {
    i64 max_b = options.max_b ? options.max_b : 2001;
    i64 recurrence_max = std::min<i64>(max_b, 501);
    Checker check;
    check.result.name = "mds";
    for (i64 b = 3; b <= max_b; b += 2) {
        MdsSystem system = mds_system(b);
        QuasiOrder order = quasi_order(b);
        bool periods_ok = true, seeds_ok = true;
        for (const MdsCycle& cycle : system.cycles) {
            if (cycle.period() != order.k) periods_ok = false;
            if (cycle.c.back() != cycle.seed) seeds_ok = false;
        }
        check(periods_ok, at_b("P equals quasi-order", b));
        check(seeds_ok, at_b("last element is the seed", b));
        check(system.count * system.period == euler_phi(b) / 2,
              at_b("count-times-period theorem", b));

        std::vector<i64> merged;
        for (const MdsCycle& cycle : system.cycles) {
            merged.insert(merged.end(), cycle.c.begin(), cycle.c.end());
        }
        std::sort(merged.begin(), merged.end());
        check(merged == rrs_star(b).elements, at_b("cycles cover RRS*", b));

        check(system.count == sbb_system(b).count, at_b("c* equals B", b));
        check(system.count == coach_system(b).c, at_b("c* equals c", b));

        if (b <= recurrence_max) {
            bool one_line_ok = true, powers_ok = true;
            for (const MdsCycle& cycle : system.cycles) {
                i64 prev = cycle.seed;
                for (i64 c : cycle.c) {
                    if (c != (b - std::abs(b - 4 * prev)) / 2) one_line_ok = false;
                    prev = c;
                }
                if (!(mds_cycle_by_powers(b, cycle.seed).c == cycle.c)) powers_ok = false;
            }
            check(one_line_ok, at_b("one-line recurrence", b));
            check(powers_ok, at_b("direct-power construction agrees", b));
        }
    }
    return check.result;
}

SuiteResult suite_tour(const SuiteOptions& options) {
    i64 max_b = options.max_b ? options.max_b : 201;
    Checker check;
    check.result.name = "tour";
    for (i64 b = 3; b <= max_b; b += 2) {
        SbbSystem system = sbb_system(b);
        for (std::size_t i = 0; i < system.cycles.size(); ++i) {
            const SbbCycle& cycle = system.cycles[i];
            EulerTour tour;
            try {
                tour = euler_tour(b, cycle, i + 1);   // throws if length mismatches
            } catch (const std::logic_error&) {
                check(false, at_b("tour closes at predicted length", b));
                continue;
            }
            check(true, at_b("tour closes at predicted length", b));
            i64 g = std::gcd(cycle_sum(cycle), 2 * b);
            check(tour.blocks == 2 * b / g, at_b("block count", b));
            TourStats stats = tour_stats(tour);
            check(stats.loop_free, at_b("no loops", b));
            check(stats.arcs_distinct, at_b("no repeated arcs", b));

            std::map<i64, i64> in_degree, out_degree;
            for (std::size_t t = 0; t < tour.labels.size(); ++t) {
                ++out_degree[tour.labels[t]];
                ++in_degree[tour.labels[(t + 1) % tour.labels.size()]];
            }
            check(in_degree == out_degree, at_b("in-degree equals out-degree", b));
        }
    }
    return check.result;
}

SuiteResult suite_equivalence(const SuiteOptions& options) {
    i64 max_b = options.max_b ? options.max_b : 501;
    Checker check;
    check.result.name = "equivalence";
    for (i64 b = 3; b <= max_b; b += 2) {
        MdsSystem mds = mds_system(b);
        CoachSystem coaches = coach_system(b);
        SbbSystem sbb = sbb_system(b);
        QuasiOrder order = quasi_order(b);
        check(mds.cycles.size() == coaches.coaches.size() &&
                  mds.cycles.size() == sbb.cycles.size(),
              at_b("system sizes agree", b));
        for (std::size_t i = 0; i < mds.cycles.size(); ++i) {
            const MdsCycle& cycle = mds.cycles[i];
            Coach converted;
            try {
                converted = mds_to_coach(cycle);
            } catch (const std::logic_error&) {
                check(false, at_b("mds_to_coach recurrence", b));
                continue;
            }
            check(converted.a == coaches.coaches[i].a &&
                      converted.k == coaches.coaches[i].k,
                  at_b("mds_to_coach equals coach", b));

            MdsCycle back = coach_to_mds(converted);
            check(back.c == cycle.c && back.seed == cycle.seed,
                  at_b("coach_to_mds round-trip", b));

            SbbCycle to_sbb = mds_to_sbb(cycle);
            check(to_sbb.q == sbb.cycles[i].q, at_b("mds_to_sbb equals cycle", b));

            MdsCycle back2 = sbb_to_mds(to_sbb);
            check(back2.c == cycle.c && back2.seed == cycle.seed,
                  at_b("sbb_to_mds round-trip", b));

            // Triangle: coach -> mds -> sbb lands on the same-seed cycle.
            SbbCycle triangle = mds_to_sbb(coach_to_mds(coaches.coaches[i]));
            check(triangle.q == sbb.cycles[i].q, at_b("triangle consistency", b));

            OddSkeleton skeleton = odd_skeleton(cycle);
            check(static_cast<i64>(skeleton.co.size()) == coaches.coaches[i].length(),
                  at_b("r* equals coach length", b));
            int star_sign = skeleton.co.size() % 2 == 0 ? +1 : -1;
            check(star_sign == order.sign, at_b("(-1)^r* matches quasi-order sign", b));
        }
    }
    return check.result;
}

SuiteResult suite_primes(const SuiteOptions& options) {
    i64 max_p = options.max_p ? options.max_p : 10000;
    i64 cycle_max = std::min<i64>(max_p, 2000);
    Checker check;
    check.result.name = "primes";
    for (i64 p = 5; p < max_p; p += 2) {
        if (!is_prime(p)) continue;
        PrimeClassification info = classify_prime(p);
        check(2 * info.order4 == info.order2_3p, at_b("2 order(4,p) = order(2,3p)", p));
        check(quasi_order(p).k == info.order4, at_b("pes equals order(4,p)", p));
        check(info.cycle_count >= 1, at_b("cycle count positive", p));
        if (p < cycle_max) {
            check(info.cycle_count == sbb_system(p).count,
                  at_b("order formula matches cycle construction", p));
        }
    }
    return check.result;
}

SuiteResult suite_icos(const SuiteOptions& options) {
    i64 max_b = options.max_b ? options.max_b : 501;
    Checker check;
    check.result.name = "icos";
    for (i64 b = 3; b <= max_b; b += 2) {
        std::vector<IcosCycle> cycles = icos_system(b);
        MdsSystem mds = mds_system(b);
        QuasiOrder order = quasi_order(b);
        check(cycles.size() == mds.cycles.size(), at_b("cycle counts agree", b));
        std::vector<i64> residues;
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            check(static_cast<i64>(cycles[i].entries.size()) == order.k,
                  at_b("period equals P", b));
            bool match = cycles[i].entries.size() == mds.cycles[i].c.size();
            for (std::size_t j = 0; match && j < cycles[i].entries.size(); ++j) {
                if (cycles[i].entries[j].j != mds.cycles[i].c[j]) match = false;
            }
            check(match, at_b("residues equal MDS cycle", b));
            for (const SignedResidue& entry : cycles[i].entries) residues.push_back(entry.j);
            double tolerance = b <= 201 ? 1e-9 : 1e-6;
            try {
                icos_numeric(cycles[i], tolerance);
                check(true, at_b("iteration matches symbolic entries", b));
            } catch (const std::logic_error&) {
                check(false, at_b("iteration matches symbolic entries", b));
            }
        }
        std::sort(residues.begin(), residues.end());
        check(residues == rrs_star(b).elements, at_b("residues cover RRS*", b));
    }
    return check.result;
}

// (-1)^deg * p(-x): maps roots to their negatives.
IntPoly mirror(const IntPoly& p) {
    std::vector<BigInt> coeffs = p.coeffs();
    i64 degree = p.degree();
    for (i64 i = 0; i <= degree; ++i) {
        if ((degree - i) % 2 == 1) coeffs[i] = -coeffs[i];
    }
    return IntPoly{std::move(coeffs)};
}

IntPoly compose(const IntPoly& outer, const IntPoly& inner) {
    IntPoly value;
    for (std::size_t i = outer.coeffs().size(); i-- > 0;) {
        value = value * inner + IntPoly::constant(outer.coeffs()[i]);
        if (i == 0) break;
    }
    return value;
}

SuiteResult suite_algebra(const SuiteOptions& options) {
    i64 max_n = options.max_n ? options.max_n : 200;
    Checker check;
    check.result.name = "algebra";

    for (i64 n = 1; n <= 12; ++n) {
        for (i64 m = 1; m <= 12; ++m) {
            check(compose(chebyshev_R(n), chebyshev_R(m)) == chebyshev_R(n * m),
                  at_b("R(n, R(m, x)) = R(nm, x) at n", n));
        }
    }

    for (i64 n = 1; n <= max_n; ++n) {
        IntPoly c = minimal_poly_C(n);
        check(c.is_monic() && c.degree() == delta_degree(n), at_b("C degree", n));
        IntPoly m = mpr2(n);
        check(m.is_monic() && m.degree() == sigma_star(n), at_b("MPR2 degree", n));
        check(m == mpr2_via_product(n), at_b("MPR2 product route agrees", n));
        check(std::abs(evaluate_at_cos(c, 1, n)) < 1e-6, at_b("C numeric root", n));
        check(std::abs(evaluate_at_cos(m, 2, n)) < 1e-6, at_b("MPR2 numeric root", n));
    }

    for (i64 n = 2; n <= std::min<i64>(max_n, 50); ++n) {
        // Monic polynomial with roots 2 cos(pi k/n), k = 1..n-1: the fold of
        // 1 + z^2 + ... + z^(2(n-1)), against the product of C factors over
        // divisors (odd divisors also contribute their mirrored polynomial).
        std::vector<BigInt> even_powers(2 * n - 1, BigInt{0});
        for (i64 i = 0; i < n; ++i) even_powers[2 * i] = 1;
        IntPoly all_roots = fold_palindromic(IntPoly{std::move(even_powers)});
        IntPoly product = IntPoly::constant(1);
        for (i64 d = 2; d <= n; ++d) {
            if (n % d != 0) continue;
            IntPoly c = minimal_poly_C(d);
            product = product * c;
            if (d % 2 == 1) product = product * mirror(c);
        }
        check(all_roots == product, at_b("divisor product identity", n));
    }
    return check.result;
}

SuiteResult suite_table1(const SuiteOptions&) {
    Checker check;
    check.result.name = "table1";
    for (const golden::PstarRow& row : golden::pstar_table()) {
        check(render_rho_poly(p_star(row.b)) == row.rendering, at_b("P* rendering", row.b));
    }
    return check.result;
}

SuiteResult suite_table2(const SuiteOptions&) {
    Checker check;
    check.result.name = "table2";
    for (const golden::MdsRow& row : golden::mds_table()) {
        MdsSystem system = mds_system(row.b);
        bool equal = system.cycles.size() == row.cycles.size();
        for (std::size_t i = 0; equal && i < row.cycles.size(); ++i) {
            if (system.cycles[i].c != row.cycles[i]) equal = false;
        }
        check(equal, at_b("cycle lists", row.b));

        MdsSystem reference;
        reference.b = row.b;
        for (const std::vector<i64>& cycle : row.cycles) {
            reference.cycles.push_back({row.b, cycle.back(), cycle});
        }
        check(render_mds_row(system) == render_mds_row(reference),
              at_b("canonical rendering", row.b));
    }
    return check.result;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "modstar", "coach",  "schick", "mds",    "tour",   "equivalence",
        "primes",  "icos",   "algebra", "table1", "table2",
    };
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "modstar") return suite_modstar(options);
    if (name == "coach") return suite_coach(options);
    if (name == "schick") return suite_schick(options);
    if (name == "mds") return suite_mds(options);
    if (name == "tour") return suite_tour(options);
    if (name == "equivalence") return suite_equivalence(options);
    if (name == "primes") return suite_primes(options);
    if (name == "icos") return suite_icos(options);
    if (name == "algebra") return suite_algebra(options);
    if (name == "table1") return suite_table1(options);
    if (name == "table2") return suite_table2(options);
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

} // namespace cyclic
