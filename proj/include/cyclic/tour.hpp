#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyclic/schick.hpp"

namespace cyclic {

// Closed directed trail on the regular (2b)-gon obtained by repeating an
// unsigned cycle of diagonal steps from vertex 0. labels[t] is the vertex
// after t steps; the closing arc back to labels[0] is implied, so the
// trail has exactly labels.size() arcs.
struct EulerTour {
    i64 b = 0;
    std::size_t cycle_index = 0;   // 1-based position in the system, 0 if ad hoc
    std::vector<i64> cycle;        // the generating SBB cycle
    std::vector<i64> labels;       // length L, labels[0] = 0
    i64 blocks = 0;            // m: number of cycle repetitions, L = m * pes
    i64 length() const { return static_cast<i64>(labels.size()); }
};

struct TourStats {
    i64 distinct_nodes = 0;              // N
    std::map<i64, i64> visits;           // node -> visit count (= in = out degree)
    bool regular = false;                // all visited nodes share one visit count
    bool loop_free = false;
    bool arcs_distinct = false;
};

// L(b,i) = 2 b pes / gcd(SUM, 2b).
i64 tour_length(i64 b, const SbbCycle& cycle);

// Simulates partial sums mod 2b until the first block boundary back at 0;
// throws logic_error if the simulated length disagrees with tour_length.
EulerTour euler_tour(i64 b, const SbbCycle& cycle, std::size_t cycle_index = 0);

TourStats tour_stats(const EulerTour& tour);

enum class GraphFormat { Dot, Svg };

// DOT digraph (one edge statement per arc) or SVG drawing with vertex 0 at
// the top and vertices labeled counter-clockwise; unvisited vertices are
// kept with a muted style.
std::string export_graph(const EulerTour& tour, GraphFormat format);

} // namespace cyclic
