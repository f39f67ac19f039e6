#include "cyclesep/export.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cyclesep {

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

} // namespace

std::string to_dot(const Embedding& e) {
    std::vector<VertexId> ids = e.vertex_ids();
    std::sort(ids.begin(), ids.end());
    std::ostringstream out;
    out << "graph cyclesep {\n";
    for (VertexId v : ids) {
        out << "  " << v;
        if (e.has_coords()) {
            auto [x, y] = e.coord(e.index_of(v));
            out << " [pos=\"" << fmt(x) << "," << fmt(y) << "!\"]";
        }
        out << ";\n";
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [u, v] : e.edges()) {
        VertexId a = e.id_of(u), b = e.id_of(v);
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) {
        out << "  " << a << " -- " << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_svg(const Embedding& e) {
    if (!e.has_coords()) {
        throw Error(ErrorKind::UsageError, "SVG export needs coordinates");
    }
    double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
    for (int i = 0; i < e.vertex_count(); ++i) {
        auto [x, y] = e.coord(i);
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    double scale = 720.0 / span;
    auto px = [&](double x) { return 40.0 + (x - min_x) * scale; };
    // SVG y grows downward; flip so the drawing keeps its orientation.
    auto py = [&](double y) { return 40.0 + (max_y - y) * scale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\">\n";
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [u, v] : e.edges()) {
        VertexId a = e.id_of(u), b = e.id_of(v);
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) {
        auto [xa, ya] = e.coord(e.index_of(a));
        auto [xb, yb] = e.coord(e.index_of(b));
        out << "  <line x1=\"" << fmt(px(xa)) << "\" y1=\"" << fmt(py(ya)) << "\" x2=\""
            << fmt(px(xb)) << "\" y2=\"" << fmt(py(yb)) << "\" stroke=\"black\"/>\n";
    }
    std::vector<VertexId> ids = e.vertex_ids();
    std::sort(ids.begin(), ids.end());
    for (VertexId v : ids) {
        auto [x, y] = e.coord(e.index_of(v));
        out << "  <circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y))
            << "\" r=\"4\" fill=\"steelblue\"/>\n";
        out << "  <text x=\"" << fmt(px(x) + 6) << "\" y=\"" << fmt(py(y) - 6)
            << "\" font-size=\"12\">" << v << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace cyclesep
