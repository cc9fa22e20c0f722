#include "cyclic/sequences.hpp"

#include <functional>
#include <map>

#include "cyclic/coach.hpp"
#include "cyclic/mds.hpp"
#include "cyclic/residue.hpp"
#include "cyclic/schick.hpp"

namespace cyclic {

namespace {

std::vector<i64> over_odd_b(i64 count, const std::function<i64(i64)>& term) {
    std::vector<i64> out;
    out.reserve(count);
    for (i64 n = 1; static_cast<i64>(out.size()) < count; ++n) {
        out.push_back(term(2 * n + 1));
    }
    return out;
}

std::vector<i64> over_single_cycle_b(i64 count, const std::function<i64(i64)>& term) {
    std::vector<i64> out;
    out.reserve(count);
    for (i64 b = 3; static_cast<i64>(out.size()) < count; b += 2) {
        SbbSystem system = sbb_system(b);
        if (system.count == 1) out.push_back(term(b));
    }
    return out;
}

std::vector<i64> multi_cycle_b(i64 count) {
    std::vector<i64> out;
    out.reserve(count);
    for (i64 b = 3; static_cast<i64>(out.size()) < count; b += 2) {
        if (sbb_system(b).count >= 2) out.push_back(b);
    }
    return out;
}

std::vector<i64> mds_table_flat(i64 count) {
    std::vector<i64> out;
    out.reserve(count);
    for (i64 b = 3; static_cast<i64>(out.size()) < count; b += 2) {
        for (const MdsCycle& cycle : mds_system(b).cycles) {
            for (i64 c : cycle.c) {
                out.push_back(c);
                if (static_cast<i64>(out.size()) == count) return out;
            }
        }
    }
    return out;
}

} // namespace

const std::vector<SequenceInfo>& sequence_catalog() {
    static const std::vector<SequenceInfo> catalog = {
        {"pes", "A003558", "quasi-order of 2 mod 2n+1: common period of all three systems"},
        {"coach-count", "A135303", "number of cycles B(2n+1) = c(2n+1) = c*(2n+1)"},
        {"cycle-sums", "A333848", "sum of the single cycle, over odd b with one cycle"},
        {"cycle-gcd", "A333849", "gcd(cycle sum, 2b), over odd b with one cycle"},
        {"multi-cycle-b", "A333855", "odd b with at least two cycles, ascending"},
        {"r-sign", "A332433", "(-1)^r for the coaches of 2n+1"},
        {"rrs-star-odd-count", "A332435", "odd members of RRS*(2n+1)"},
        {"rrs-star-even-count", "A332436", "even members of RRS*(2n+1)"},
        {"mds-table", "A334430", "all MDS cycles over odd b, flattened"},
    };
    return catalog;
}

std::vector<i64> sequence_terms(const std::string& id, i64 count) {
    require(count >= 0, "sequence_terms: count must be non-negative");
    std::string key = id;
    for (const SequenceInfo& info : sequence_catalog()) {
        if (id == info.alias) key = info.id;
    }
    if (key == "pes") {
        return over_odd_b(count, [](i64 b) { return quasi_order(b).k; });
    }
    if (key == "coach-count") {
        return over_odd_b(count, [](i64 b) { return sbb_system(b).count; });
    }
    if (key == "cycle-sums") {
        return over_single_cycle_b(count, [](i64 b) {
            return cycle_sum(sbb_system(b).cycles.front());
        });
    }
    if (key == "cycle-gcd") {
        return over_single_cycle_b(count, [](i64 b) {
            return std::gcd(cycle_sum(sbb_system(b).cycles.front()), 2 * b);
        });
    }
    if (key == "multi-cycle-b") return multi_cycle_b(count);
    if (key == "r-sign") {
        return over_odd_b(count, [](i64 b) { return static_cast<i64>(quasi_order(b).sign); });
    }
    if (key == "rrs-star-odd-count") {
        return over_odd_b(count, [](i64 b) {
            return static_cast<i64>(rrs_star_odd(b).elements.size());
        });
    }
    if (key == "rrs-star-even-count") {
        return over_odd_b(count, [](i64 b) {
            return static_cast<i64>(rrs_star_even(b).elements.size());
        });
    }
    if (key == "mds-table") return mds_table_flat(count);
    throw std::invalid_argument("sequence_terms: unknown sequence id '" + id + "'");
}

} // namespace cyclic
