#include "cyclic/tour.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace cyclic {

i64 tour_length(i64 b, const SbbCycle& cycle) {
    require(cycle.b == b && !cycle.q.empty(), "tour_length: cycle does not match b");
    i64 sum = cycle_sum(cycle);
    return 2 * b * cycle.pes() / std::gcd(sum, 2 * b);
}

EulerTour euler_tour(i64 b, const SbbCycle& cycle, std::size_t cycle_index) {
    i64 expected = tour_length(b, cycle);
    i64 pes = cycle.pes();
    EulerTour tour;
    tour.b = b;
    tour.cycle_index = cycle_index;
    tour.cycle = cycle.q;
    tour.labels.reserve(expected);
    tour.labels.push_back(0);
    i64 node = 0;
    for (i64 t = 0;; ++t) {
        node = (node + cycle.q[t % pes]) % (2 * b);
        if (node == 0 && (t + 1) % pes == 0) {
            tour.blocks = (t + 1) / pes;
            break;
        }
        tour.labels.push_back(node);
        if (t + 1 > expected) {
            throw std::logic_error("euler_tour: trail did not close at the predicted length");
        }
    }
    if (tour.length() != expected) {
        throw std::logic_error("euler_tour: simulated length disagrees with the closed form");
    }
    return tour;
}

TourStats tour_stats(const EulerTour& tour) {
    TourStats stats;
    for (i64 label : tour.labels) ++stats.visits[label];
    stats.distinct_nodes = static_cast<i64>(stats.visits.size());
    i64 first = stats.visits.begin()->second;
    stats.regular = true;
    for (const auto& [node, count] : stats.visits) {
        if (count != first) stats.regular = false;
    }
    stats.loop_free = true;
    stats.arcs_distinct = true;
    std::set<std::pair<i64, i64>> arcs;
    const auto& labels = tour.labels;
    for (std::size_t t = 0; t < labels.size(); ++t) {
        i64 from = labels[t];
        i64 to = labels[(t + 1) % labels.size()];
        if (from == to) stats.loop_free = false;
        if (!arcs.emplace(from, to).second) stats.arcs_distinct = false;
    }
    return stats;
}

namespace {

struct Point {
    double x = 0;
    double y = 0;
};

// Vertex k sits at angle 90 deg + k * 360 deg / (2b), counter-clockwise,
// on a circle of radius 100.
Point vertex_position(i64 k, i64 node_count, double cx, double cy, double radius) {
    double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * k / node_count;
    return {cx + radius * std::cos(angle), cy - radius * std::sin(angle)};
}

std::string export_dot(const EulerTour& tour) {
    TourStats stats = tour_stats(tour);
    std::ostringstream out;
    out << "digraph tour {\n";
    out << "  // b = " << tour.b << ", L = " << tour.length()
        << ", blocks = " << tour.blocks << "\n";
    out << "  layout=circo;\n";
    for (i64 v = 0; v < 2 * tour.b; ++v) {
        out << "  " << v;
        if (!stats.visits.count(v)) out << " [style=dashed, color=gray]";
        out << ";\n";
    }
    const auto& labels = tour.labels;
    for (std::size_t t = 0; t < labels.size(); ++t) {
        out << "  " << labels[t] << " -> " << labels[(t + 1) % labels.size()] << ";\n";
    }
    out << "}\n";
    return out.str();
}

const char* kBlockPalette[7] = {
    "#1f4fd8", "#1a9e3c", "#c231c2", "#000000", "#d8b800", "#4682b4", "#d82222",
};

std::string format_coord(double v) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << v;
    return out.str();
}

std::string export_svg(const EulerTour& tour) {
    const double radius = 100.0;
    const double margin = 20.0;
    const double size = 2 * (radius + margin);
    const double cx = radius + margin;
    const double cy = radius + margin;
    const i64 nodes = 2 * tour.b;
    TourStats stats = tour_stats(tour);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"" << size << "\" height=\"" << size << "\" "
        << "viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "  <defs>\n"
        << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
        << "markerWidth=\"5\" markerHeight=\"5\" orient=\"auto-start-reverse\">\n"
        << "      <path d=\"M 0 0 L 10 5 L 0 10 z\"/>\n"
        << "    </marker>\n"
        << "  </defs>\n";

    const auto& labels = tour.labels;
    i64 pes = static_cast<i64>(tour.cycle.size());
    for (std::size_t t = 0; t < labels.size(); ++t) {
        Point from = vertex_position(labels[t], nodes, cx, cy, radius);
        Point to = vertex_position(labels[(t + 1) % labels.size()], nodes, cx, cy, radius);
        const char* color = kBlockPalette[(t / pes) % 7];
        out << "  <line x1=\"" << format_coord(from.x) << "\" y1=\"" << format_coord(from.y)
            << "\" x2=\"" << format_coord(to.x) << "\" y2=\"" << format_coord(to.y)
            << "\" stroke=\"" << color << "\" stroke-width=\"1\" marker-end=\"url(#arrow)\"/>\n";
    }
    for (i64 v = 0; v < nodes; ++v) {
        Point p = vertex_position(v, nodes, cx, cy, radius);
        bool visited = stats.visits.count(v) > 0;
        out << "  <circle cx=\"" << format_coord(p.x) << "\" cy=\"" << format_coord(p.y)
            << "\" r=\"3\" fill=\"" << (visited ? "#000000" : "#ffffff")
            << "\" stroke=\"" << (visited ? "#000000" : "#999999") << "\"/>\n";
        Point lp = vertex_position(v, nodes, cx, cy, radius + margin / 2);
        out << "  <text x=\"" << format_coord(lp.x) << "\" y=\"" << format_coord(lp.y)
            << "\" font-size=\"8\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
            << v << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string export_graph(const EulerTour& tour, GraphFormat format) {
    switch (format) {
        case GraphFormat::Dot: return export_dot(tour);
        case GraphFormat::Svg: return export_svg(tour);
    }
    throw std::invalid_argument("export_graph: unsupported format");
}

} // namespace cyclic
