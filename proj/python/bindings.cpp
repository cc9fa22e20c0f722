#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclic/algebra.hpp"
#include "cyclic/coach.hpp"
#include "cyclic/equivalence.hpp"
#include "cyclic/icos.hpp"
#include "cyclic/mds.hpp"
#include "cyclic/primes.hpp"
#include "cyclic/render.hpp"
#include "cyclic/residue.hpp"
#include "cyclic/schick.hpp"
#include "cyclic/sequences.hpp"
#include "cyclic/tour.hpp"
#include "cyclic/verify.hpp"

namespace py = pybind11;
using namespace cyclic;

namespace {

py::object big_to_int(const BigInt& value) {
    std::string digits = value.get_str();
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::list poly_coeffs(const IntPoly& p) {
    py::list out;
    for (const BigInt& c : p.coeffs()) out.append(big_to_int(c));
    return out;
}

py::list rho_poly_coeffs(const RhoPoly& p) {
    py::list out;
    for (const RhoElement& e : p.coeff) {
        py::list inner;
        for (const BigInt& c : e.coeff) inner.append(big_to_int(c));
        out.append(inner);
    }
    return out;
}

py::dict coach_dict(const Coach& coach) {
    py::dict out;
    out["b"] = coach.b;
    out["a"] = coach.a;
    out["k"] = coach.k;
    return out;
}

py::dict tour_dict(const EulerTour& tour) {
    TourStats stats = tour_stats(tour);
    py::dict out;
    out["b"] = tour.b;
    out["cycle"] = tour.cycle;
    out["labels"] = tour.labels;
    out["L"] = tour.length();
    out["m"] = tour.blocks;
    out["N"] = stats.distinct_nodes;
    out["regular"] = stats.regular;
    return out;
}

} // namespace

PYBIND11_MODULE(pycyclic, m) {
    m.doc() = "cycles of odd integers: coach, Schick and doubling systems, "
              "polygon tours, and exact polynomial constructions";

    m.def("euler_phi", &euler_phi, py::arg("n"));
    m.def("sigma_star", &sigma_star, py::arg("n"));
    m.def("delta_degree", &delta_degree, py::arg("n"));
    m.def("rrs", [](i64 n) { return rrs(n).elements; }, py::arg("n"));
    m.def("rrs_star", [](i64 n) { return rrs_star(n).elements; }, py::arg("n"));
    m.def("rrs_odd", [](i64 b) { return rrs_odd(b).elements; }, py::arg("b"));
    m.def("mod_star", &mod_star, py::arg("a"), py::arg("n"));
    m.def("mod_star_mul", &mod_star_mul, py::arg("a"), py::arg("b"), py::arg("n"));
    m.def("mod_star_order", &mod_star_order, py::arg("a"), py::arg("n"));
    m.def(
        "gstar_structure",
        [](i64 n) {
            GStarStructure g = gstar_structure(n);
            py::dict out;
            out["n"] = g.n;
            out["group_order"] = g.group_order;
            out["orders"] = g.orders;
            out["max_order"] = g.max_order;
            out["cyclic"] = g.cyclic;
            return out;
        },
        py::arg("n"));

    m.def(
        "coach", [](i64 b, i64 a1) { return coach_dict(coach(b, a1)); }, py::arg("b"),
        py::arg("a1"));
    m.def(
        "coach_system",
        [](i64 b) {
            CoachSystem system = coach_system(b);
            py::dict out;
            out["b"] = system.b;
            out["c"] = system.c;
            out["k"] = system.k;
            out["r_tuple"] = system.r_tuple();
            py::list coaches;
            for (const Coach& c : system.coaches) coaches.append(coach_dict(c));
            out["coaches"] = coaches;
            return out;
        },
        py::arg("b"));
    m.def(
        "quasi_order",
        [](i64 b) {
            QuasiOrder q = quasi_order(b);
            return py::make_tuple(q.k, q.sign);
        },
        py::arg("b"));
    m.def(
        "verify_coach_theorem",
        [](i64 b) {
            CoachTheoremReport report = verify_coach_theorem(b);
            py::dict out;
            out["b"] = report.b;
            out["c"] = report.c;
            out["k"] = report.k;
            out["product"] = report.product;
            out["phi_half"] = report.phi_half;
            out["holds"] = report.holds;
            return out;
        },
        py::arg("b"));

    m.def(
        "sbb_cycle", [](i64 b, i64 q0) { return sbb_cycle(b, q0).q; }, py::arg("b"),
        py::arg("q0"));
    m.def(
        "sbb_system",
        [](i64 b) {
            SbbSystem system = sbb_system(b);
            py::list cycles;
            for (const SbbCycle& cycle : system.cycles) cycles.append(cycle.q);
            py::dict out;
            out["b"] = system.b;
            out["count"] = system.count;
            out["pes"] = system.pes;
            out["cycles"] = cycles;
            return out;
        },
        py::arg("b"));
    m.def(
        "sbb_signed_system",
        [](i64 b) {
            py::list cycles;
            for (const SignedCycle& cycle : sbb_signed_system(b)) cycles.append(cycle.q);
            return cycles;
        },
        py::arg("b"));
    m.def(
        "cycle_sum", [](i64 b, i64 q0) { return cycle_sum(sbb_cycle(b, q0)); },
        py::arg("b"), py::arg("q0"));

    m.def(
        "mds_cycle", [](i64 b, i64 a) { return mds_cycle(b, a).c; }, py::arg("b"),
        py::arg("a"));
    m.def(
        "mds_system",
        [](i64 b) {
            MdsSystem system = mds_system(b);
            py::list cycles;
            for (const MdsCycle& cycle : system.cycles) cycles.append(cycle.c);
            py::dict out;
            out["b"] = system.b;
            out["count"] = system.count;
            out["period"] = system.period;
            out["cycles"] = cycles;
            return out;
        },
        py::arg("b"));
    m.def(
        "mds_prime_variant", [](i64 b, i64 a) { return mds_prime_variant(mds_cycle(b, a)); },
        py::arg("b"), py::arg("a"));
    m.def("ds_cycle", &ds_cycle, py::arg("b"), py::arg("a"));

    m.def(
        "tour_length", [](i64 b, i64 q0) { return tour_length(b, sbb_cycle(b, q0)); },
        py::arg("b"), py::arg("q0"));
    m.def(
        "euler_tour",
        [](i64 b, std::size_t cycle_index) {
            SbbSystem system = sbb_system(b);
            if (cycle_index < 1 || cycle_index > system.cycles.size()) {
                throw std::invalid_argument("cycle index out of range");
            }
            return tour_dict(euler_tour(b, system.cycles[cycle_index - 1], cycle_index));
        },
        py::arg("b"), py::arg("cycle") = 1);
    m.def(
        "export_graph",
        [](i64 b, std::size_t cycle_index, const std::string& format) {
            SbbSystem system = sbb_system(b);
            if (cycle_index < 1 || cycle_index > system.cycles.size()) {
                throw std::invalid_argument("cycle index out of range");
            }
            EulerTour tour = euler_tour(b, system.cycles[cycle_index - 1], cycle_index);
            if (format == "dot") return export_graph(tour, GraphFormat::Dot);
            if (format == "svg") return export_graph(tour, GraphFormat::Svg);
            throw std::invalid_argument("format must be 'dot' or 'svg'");
        },
        py::arg("b"), py::arg("cycle") = 1, py::arg("format") = "dot");

    m.def(
        "mds_to_coach", [](i64 b, i64 a) { return coach_dict(mds_to_coach(mds_cycle(b, a))); },
        py::arg("b"), py::arg("a"));
    m.def(
        "coach_to_mds",
        [](i64 b, i64 a1) { return coach_to_mds(coach(b, a1)).c; }, py::arg("b"),
        py::arg("a1"));
    m.def(
        "mds_to_sbb", [](i64 b, i64 a) { return mds_to_sbb(mds_cycle(b, a)).q; },
        py::arg("b"), py::arg("a"));
    m.def(
        "sbb_to_mds", [](i64 b, i64 q0) { return sbb_to_mds(sbb_cycle(b, q0)).c; },
        py::arg("b"), py::arg("q0"));
    m.def(
        "emcsy", [](i64 b, i64 a1) { return emcsy(coach(b, a1)); }, py::arg("b"),
        py::arg("a1"));

    m.def("mult_order", &mult_order, py::arg("a"), py::arg("m"));
    m.def(
        "classify_prime",
        [](i64 p) {
            PrimeClassification info = classify_prime(p);
            py::dict out;
            out["p"] = info.p;
            out["pes"] = info.pes;
            out["B"] = info.cycle_count;
            out["order4"] = info.order4;
            out["order2_3p"] = info.order2_3p;
            out["single_cycle"] = info.single_cycle;
            return out;
        },
        py::arg("p"));
    m.def("primes_with_multicycle", &primes_with_multicycle, py::arg("limit"));

    m.def("chebyshev_R", [](i64 n) { return poly_coeffs(chebyshev_R(n)); }, py::arg("n"));
    m.def(
        "minimal_poly_C", [](i64 n) { return poly_coeffs(minimal_poly_C(n)); },
        py::arg("n"));
    m.def("mpr2", [](i64 n) { return poly_coeffs(mpr2(n)); }, py::arg("n"));
    m.def(
        "p_star",
        [](i64 b) {
            RhoPoly p = p_star(b);
            py::dict out;
            out["b"] = p.b;
            out["coefficients"] = rho_poly_coeffs(p);
            out["rendering"] = render_rho_poly(p);
            return out;
        },
        py::arg("b"));

    m.def(
        "icos_system",
        [](i64 b) {
            py::list cycles;
            for (const IcosCycle& cycle : icos_system(b)) {
                py::list entries;
                for (const SignedResidue& entry : cycle.entries) {
                    entries.append(py::make_tuple(entry.sign, entry.j));
                }
                cycles.append(entries);
            }
            return cycles;
        },
        py::arg("b"));
    m.def(
        "icos_numeric",
        [](i64 b, i64 a, double tolerance) {
            return icos_numeric(icos_cycle(b, a), tolerance);
        },
        py::arg("b"), py::arg("a"), py::arg("tolerance") = 1e-9);

    m.def("sequence_terms", &sequence_terms, py::arg("id"), py::arg("count"));
    m.def(
        "verify",
        [](const std::string& suite, i64 max_b, i64 max_n, i64 max_p) {
            SuiteOptions options;
            options.max_b = max_b;
            options.max_n = max_n;
            options.max_p = max_p;
            SuiteResult result = run_suite(suite, options);
            py::dict out;
            out["name"] = result.name;
            out["checked"] = result.checked;
            out["failures"] = result.failures;
            out["messages"] = result.messages;
            return out;
        },
        py::arg("suite"), py::arg("max_b") = 0, py::arg("max_n") = 0,
        py::arg("max_p") = 0);
}
