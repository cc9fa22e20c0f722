#pragma once

#include <string>
#include <vector>

#include "cyclic/numeric.hpp"

namespace cyclic {

// Integer sequences derived from the cycle systems, indexed from 1.
// Most run over odd b = 2n+1 via n; `cycle-sums` and `cycle-gcd` run over
// the odd b with a single cycle, in ascending b order.
struct SequenceInfo {
    std::string id;
    std::string alias;        // OEIS-style tag
    std::string description;
};

const std::vector<SequenceInfo>& sequence_catalog();

// First `count` terms of the sequence; `id` may be the canonical id or
// the alias. Throws on unknown ids.
std::vector<i64> sequence_terms(const std::string& id, i64 count);

} // namespace cyclic
