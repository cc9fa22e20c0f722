#include <doctest.h>

#include <string>

#include "cyclic/golden.hpp"
#include "cyclic/tour.hpp"

using namespace cyclic;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

} // namespace

TEST_CASE("tour lengths from the closed form") {
    CHECK(tour_length(7, sbb_cycle(7, 1)) == 42);
    CHECK(tour_length(17, sbb_cycle(17, 1)) == 68);
    CHECK(tour_length(21, sbb_cycle(21, 1)) == 42);
    CHECK(tour_length(3, sbb_cycle(3, 1)) == 6);
}

TEST_CASE("the 42-step tour for b = 7") {
    EulerTour tour = euler_tour(7, sbb_cycle(7, 1), 1);
    CHECK(tour.labels == golden::tour_7_1());
    CHECK(tour.length() == 42);
    CHECK(tour.blocks == 14);

    TourStats stats = tour_stats(tour);
    CHECK(stats.distinct_nodes == 14);
    CHECK(stats.regular);
    CHECK(stats.loop_free);
    CHECK(stats.arcs_distinct);
    for (const auto& [node, visits] : stats.visits) CHECK(visits == 3);
}

TEST_CASE("b = 17 tours visit all 34 nodes twice") {
    for (i64 seed : {1, 3}) {
        EulerTour tour = euler_tour(17, sbb_cycle(17, seed));
        CHECK(tour.length() == 68);
        TourStats stats = tour_stats(tour);
        CHECK(stats.distinct_nodes == 34);
        for (const auto& [node, visits] : stats.visits) CHECK(visits == 2);
    }
}

TEST_CASE("b = 21 tour is irregular on 21 nodes") {
    EulerTour tour = euler_tour(21, sbb_cycle(21, 1), 1);
    CHECK(tour.length() == 42);
    TourStats stats = tour_stats(tour);
    CHECK(stats.distinct_nodes == 21);
    CHECK_FALSE(stats.regular);
    // node order (in + out) is 2, 6, 4 for labels 0, 1, 2 (mod 6)
    for (const auto& [node, visits] : stats.visits) {
        i64 residue = node % 6;
        CHECK(residue <= 2);
        if (residue == 0) CHECK(visits == 1);
        if (residue == 1) CHECK(visits == 3);
        if (residue == 2) CHECK(visits == 2);
    }
}

TEST_CASE("b = 3 tour") {
    EulerTour tour = euler_tour(3, sbb_cycle(3, 1));
    CHECK(tour.labels == std::vector<i64>{0, 1, 2, 3, 4, 5});
    CHECK(tour_stats(tour).distinct_nodes == 6);
}

TEST_CASE("dot export") {
    EulerTour tour = euler_tour(7, sbb_cycle(7, 1), 1);
    std::string dot = export_graph(tour, GraphFormat::Dot);
    CHECK(dot.find("digraph") == 0);
    CHECK(count_occurrences(dot, " -> ") == 42);
}

TEST_CASE("svg export") {
    EulerTour tour = euler_tour(7, sbb_cycle(7, 1), 1);
    std::string svg = export_graph(tour, GraphFormat::Svg);
    CHECK(count_occurrences(svg, "<circle") == 14);
    CHECK(count_occurrences(svg, "<line") == 42);
    // vertex 0 at the top of the circle: (cx, cy - r) = (120, 20)
    CHECK(svg.find("<circle cx=\"120.00\" cy=\"20.00\"") != std::string::npos);
}

TEST_CASE("tour invariants, small sweep") {
    for (i64 b = 3; b <= 101; b += 2) {
        SbbSystem system = sbb_system(b);
        for (std::size_t i = 0; i < system.cycles.size(); ++i) {
            EulerTour tour = euler_tour(b, system.cycles[i], i + 1);
            i64 g = std::gcd(cycle_sum(system.cycles[i]), 2 * b);
            CHECK(tour.blocks == 2 * b / g);
            TourStats stats = tour_stats(tour);
            CHECK(stats.loop_free);
            CHECK(stats.arcs_distinct);
        }
    }
}
