#include "cyclic/render.hpp"

#include <algorithm>
#include <sstream>

namespace cyclic {

std::string render_list(const std::vector<i64>& values, char open, char close) {
    std::ostringstream out;
    out << open;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ", ";
        out << values[i];
    }
    out << close;
    return out.str();
}

std::string render_mds_row(const MdsSystem& system) {
    std::ostringstream out;
    for (std::size_t i = 0; i < system.cycles.size(); ++i) {
        if (i) out << ", ";
        out << render_list(system.cycles[i].c);
    }
    return out.str();
}

std::string render_sbb_row(const SbbSystem& system) {
    std::ostringstream out;
    for (std::size_t i = 0; i < system.cycles.size(); ++i) {
        if (i) out << ", ";
        out << render_list(system.cycles[i].q, '(', ')');
    }
    return out.str();
}

std::string render_signed_row(const std::vector<SignedCycle>& cycles) {
    std::ostringstream out;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (i) out << ", ";
        out << render_list(cycles[i].q, '(', ')');
    }
    return out.str();
}

std::string render_coach_display(const CoachSystem& system) {
    std::vector<std::vector<std::string>> upper, lower;
    std::vector<std::vector<std::size_t>> widths;
    for (const Coach& coach : system.coaches) {
        std::vector<std::string> a_row, k_row;
        std::vector<std::size_t> w_row;
        for (std::size_t j = 0; j < coach.a.size(); ++j) {
            a_row.push_back(std::to_string(coach.a[j]));
            k_row.push_back(std::to_string(coach.k[j]));
            w_row.push_back(std::max(a_row.back().size(), k_row.back().size()));
        }
        upper.push_back(std::move(a_row));
        lower.push_back(std::move(k_row));
        widths.push_back(std::move(w_row));
    }
    auto line = [&](const std::vector<std::vector<std::string>>& rows) {
        std::ostringstream out;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) out << " | ";
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (j) out << ' ';
                std::string cell = rows[i][j];
                out << std::string(widths[i][j] - cell.size(), ' ') << cell;
            }
        }
        return out.str();
    };
    return line(upper) + "\n" + line(lower);
}

std::string render_icos_row(const std::vector<IcosCycle>& cycles) {
    std::ostringstream out;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (i) out << ", ";
        out << '[';
        for (std::size_t j = 0; j < cycles[i].entries.size(); ++j) {
            if (j) out << ", ";
            const SignedResidue& entry = cycles[i].entries[j];
            out << '(' << (entry.sign > 0 ? '+' : '-') << ',' << entry.j << ')';
        }
        out << ']';
    }
    return out.str();
}

namespace {

struct Term {
    bool negative = false;
    std::string body;
};

// "3", "2*rho", "rho^2", "1" for unit constants
std::string monomial_body(const BigInt& magnitude, const std::string& var, i64 power) {
    std::ostringstream out;
    if (power == 0 || magnitude != 1) out << magnitude.get_str();
    if (power >= 1) {
        if (magnitude != 1) out << '*';
        out << var;
        if (power >= 2) out << '^' << power;
    }
    return out.str();
}

std::string attach_x(const std::string& coefficient, i64 power) {
    if (power == 0) return coefficient;
    std::string x = power == 1 ? "x" : "x^" + std::to_string(power);
    if (coefficient == "1") return x;
    return coefficient + "*" + x;
}

std::string join_terms(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].negative) out << '-';
        } else {
            out << (terms[i].negative ? " - " : " + ");
        }
        out << terms[i].body;
    }
    return out.str();
}

// Signed sum like "-3 + 2*rho^2", ascending powers.
std::string signed_sum(const std::vector<BigInt>& coeffs, const std::string& var) {
    std::vector<Term> terms;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (coeffs[t] == 0) continue;
        terms.push_back({coeffs[t] < 0, monomial_body(abs(coeffs[t]), var, static_cast<i64>(t))});
    }
    return join_terms(terms);
}

} // namespace

std::string render_int_poly(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<Term> terms;
    for (i64 k = p.degree(); k >= 0; --k) {
        const BigInt& c = p[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        terms.push_back({c < 0, attach_x(monomial_body(abs(c), "x", 0), k)});
    }
    return join_terms(terms);
}

std::string render_rho_poly(const RhoPoly& p) {
    std::vector<Term> terms;
    for (i64 k = p.degree(); k >= 0; --k) {
        const RhoElement& e = p.coeff[static_cast<std::size_t>(k)];
        std::size_t nonzero = 0;
        std::size_t where = 0;
        for (std::size_t t = 0; t < e.coeff.size(); ++t) {
            if (e.coeff[t] != 0) {
                ++nonzero;
                where = t;
            }
        }
        if (nonzero == 0) continue;
        if (nonzero == 1) {
            const BigInt& c = e.coeff[where];
            terms.push_back(
                {c < 0, attach_x(monomial_body(abs(c), "rho", static_cast<i64>(where)), k)});
        } else {
            terms.push_back({false, attach_x("(" + signed_sum(e.coeff, "rho") + ")", k)});
        }
    }
    return join_terms(terms);
}

namespace {

i64 phi_half(i64 b) { return euler_phi(b) / 2; }

} // namespace

json to_json(const CoachSystem& system) {
    json cycles = json::array();
    for (const Coach& coach : system.coaches) {
        cycles.push_back({{"a", coach.a}, {"k", coach.k}});
    }
    return {{"b", system.b},
            {"kind", "coach"},
            {"count", system.c},
            {"period", system.k},
            {"cycles", cycles},
            {"meta",
             {{"phiHalf", phi_half(system.b)},
              {"rTuple", system.r_tuple()},
              {"sign", quasi_order(system.b).sign}}}};
}

json to_json(const SbbSystem& system) {
    json cycles = json::array();
    for (const SbbCycle& cycle : system.cycles) cycles.push_back(cycle.q);
    return {{"b", system.b},
            {"kind", "sbb"},
            {"count", system.count},
            {"period", system.pes},
            {"cycles", cycles},
            {"meta", {{"phiHalf", phi_half(system.b)}}}};
}

json to_json(const std::vector<SignedCycle>& cycles, i64 b) {
    json rows = json::array();
    for (const SignedCycle& cycle : cycles) rows.push_back(cycle.q);
    return {{"b", b},
            {"kind", "sbb-signed"},
            {"count", cycles.size()},
            {"period", cycles.empty() ? 0 : cycles.front().q.size()},
            {"cycles", rows},
            {"meta", {{"phiHalf", phi_half(b)}}}};
}

json to_json(const MdsSystem& system) {
    json cycles = json::array();
    for (const MdsCycle& cycle : system.cycles) cycles.push_back(cycle.c);
    return {{"b", system.b},
            {"kind", "mds"},
            {"count", system.count},
            {"period", system.period},
            {"cycles", cycles},
            {"meta", {{"phiHalf", phi_half(system.b)}}}};
}

json to_json(const std::vector<IcosCycle>& cycles, i64 b) {
    json rows = json::array();
    for (const IcosCycle& cycle : cycles) {
        json row = json::array();
        for (const SignedResidue& entry : cycle.entries) {
            row.push_back({{"sign", entry.sign}, {"j", entry.j}});
        }
        rows.push_back(row);
    }
    return {{"b", b},
            {"kind", "icos"},
            {"count", cycles.size()},
            {"period", cycles.empty() ? 0 : cycles.front().entries.size()},
            {"cycles", rows},
            {"meta", {{"phiHalf", phi_half(b)}}}};
}

json to_json(const EulerTour& tour) {
    TourStats stats = tour_stats(tour);
    return {{"b", tour.b},
            {"kind", "tour"},
            {"cycleIndex", tour.cycle_index},
            {"cycle", tour.cycle},
            {"L", tour.length()},
            {"m", tour.blocks},
            {"N", stats.distinct_nodes},
            {"regular", stats.regular},
            {"labels", tour.labels}};
}

json to_json(const IntPoly& p) {
    json coeffs = json::array();
    for (const BigInt& c : p.coeffs()) coeffs.push_back(c.get_str());
    return {{"degree", p.degree()}, {"coefficients", coeffs},
            {"rendering", render_int_poly(p)}};
}

json to_json(const RhoPoly& p) {
    json coeffs = json::array();
    for (const RhoElement& e : p.coeff) {
        json inner = json::array();
        for (const BigInt& c : e.coeff) inner.push_back(c.get_str());
        coeffs.push_back(inner);
    }
    return {{"b", p.b}, {"degree", p.degree()}, {"coefficients", coeffs},
            {"rendering", render_rho_poly(p)}};
}

namespace {

constexpr const char* kCrlf = "\r\n";

} // namespace

std::string to_csv(const CoachSystem& system) {
    std::ostringstream out;
    out << "b,coach,position,a,k" << kCrlf;
    for (std::size_t i = 0; i < system.coaches.size(); ++i) {
        const Coach& coach = system.coaches[i];
        for (std::size_t j = 0; j < coach.a.size(); ++j) {
            out << system.b << ',' << i + 1 << ',' << j + 1 << ',' << coach.a[j]
                << ',' << coach.k[j] << kCrlf;
        }
    }
    return out.str();
}

namespace {

std::string cycles_csv(i64 b, const std::vector<std::vector<i64>>& cycles) {
    std::ostringstream out;
    out << "b,cycle,position,value" << kCrlf;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = 0; j < cycles[i].size(); ++j) {
            out << b << ',' << i + 1 << ',' << j + 1 << ',' << cycles[i][j] << kCrlf;
        }
    }
    return out.str();
}

} // namespace

std::string to_csv(const SbbSystem& system) {
    std::vector<std::vector<i64>> cycles;
    for (const SbbCycle& cycle : system.cycles) cycles.push_back(cycle.q);
    return cycles_csv(system.b, cycles);
}

std::string to_csv(const std::vector<SignedCycle>& cycles, i64 b) {
    std::vector<std::vector<i64>> rows;
    for (const SignedCycle& cycle : cycles) rows.push_back(cycle.q);
    return cycles_csv(b, rows);
}

std::string to_csv(const MdsSystem& system) {
    std::vector<std::vector<i64>> cycles;
    for (const MdsCycle& cycle : system.cycles) cycles.push_back(cycle.c);
    return cycles_csv(system.b, cycles);
}

std::string to_csv(const std::vector<IcosCycle>& cycles, i64 b) {
    std::ostringstream out;
    out << "b,cycle,position,sign,j" << kCrlf;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = 0; j < cycles[i].entries.size(); ++j) {
            out << b << ',' << i + 1 << ',' << j + 1 << ','
                << cycles[i].entries[j].sign << ',' << cycles[i].entries[j].j << kCrlf;
        }
    }
    return out.str();
}

} // namespace cyclic
