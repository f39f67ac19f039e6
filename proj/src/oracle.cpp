#include "cyclesep/oracle.hpp"

#include <algorithm>

namespace cyclesep {

namespace {

bool point_on_segment(const std::array<double, 2>& p, const std::array<double, 2>& a,
                      const std::array<double, 2>& b) {
    long double cross = (static_cast<long double>(b[0]) - a[0]) * (static_cast<long double>(p[1]) - a[1]) -
                        (static_cast<long double>(b[1]) - a[1]) * (static_cast<long double>(p[0]) - a[0]);
    if (cross != 0) return false;
    return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

} // namespace

GeoSide point_in_polygon(const std::vector<std::array<double, 2>>& polygon,
                         const std::array<double, 2>& point) {
    size_t n = polygon.size();
    for (size_t i = 0; i < n; ++i) {
        if (point_on_segment(point, polygon[i], polygon[(i + 1) % n])) {
            throw Error(ErrorKind::DegenerateGeometry, "query point lies on the polygon boundary");
        }
    }
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const auto& a = polygon[i];
        const auto& b = polygon[(i + 1) % n];
        // Half-open rule: count edges straddling the horizontal through the point.
        if ((a[1] > point[1]) == (b[1] > point[1])) continue;
        long double t = (static_cast<long double>(point[1]) - a[1]) /
                        (static_cast<long double>(b[1]) - a[1]);
        long double x_hit = a[0] + t * (static_cast<long double>(b[0]) - a[0]);
        if (x_hit > point[0]) inside = !inside;
    }
    return inside ? GeoSide::Inside : GeoSide::Outside;
}

GeoSide geometric_oracle(const Embedding& e, const CycleTuple& cycle, VertexId v) {
    if (!e.has_coords()) {
        throw Error(ErrorKind::UsageError, "geometric oracle needs coordinates");
    }
    if (cycle.contains(v)) {
        throw Error(ErrorKind::DegenerateGeometry, "query vertex lies on the cycle");
    }
    std::vector<std::array<double, 2>> polygon;
    polygon.reserve(cycle.canonical.size());
    for (VertexId c : cycle.canonical) polygon.push_back(e.coord(e.index_of(c)));
    return point_in_polygon(polygon, e.coord(e.index_of(v)));
}

} // namespace cyclesep
