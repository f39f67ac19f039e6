#include <cmath>
#include "fixtures.hpp"

namespace cyclesep::fixtures {

using json = nlohmann::json;

json k3() {
    return json{{"vertices", {1, 2, 3}},
                {"rotation", {{"1", {2, 3}}, {"2", {1, 3}}, {"3", {1, 2}}}}};
}

json k4() {
    return json{{"vertices", {0, 1, 2, 3}},
                {"rotation",
                 {{"0", {1, 2, 3}}, {"1", {0, 3, 2}}, {"2", {0, 1, 3}}, {"3", {0, 2, 1}}}}};
}

json k4_flipped() {
    json doc = k4();
    doc["rotation"]["3"] = {0, 1, 2};
    return doc;
}

json octahedron() {
    return json{{"vertices", {0, 1, 2, 3, 4, 5}},
                {"rotation",
                 {{"0", {2, 5, 4, 3}},
                  {"1", {2, 3, 4, 5}},
                  {"2", {0, 3, 1, 5}},
                  {"3", {0, 4, 1, 2}},
                  {"4", {0, 5, 1, 3}},
                  {"5", {0, 2, 1, 4}}}}};
}

json cube() {
    std::vector<VertexId> vertices = {0, 1, 2, 3, 4, 5, 6, 7};
    std::vector<std::pair<VertexId, VertexId>> edges = {
        {0, 1}, {1, 2}, {2, 3}, {3, 0},
        {4, 5}, {5, 6}, {6, 7}, {7, 4},
        {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    std::map<VertexId, std::array<double, 2>> coords = {
        {0, {1.0, 1.0}},  {1, {-1.0, 1.0}},  {2, {-1.0, -1.0}},  {3, {1.0, -1.0}},
        {4, {2.0, 2.0}},  {5, {-2.0, 2.0}},  {6, {-2.0, -2.0}},  {7, {2.0, -2.0}}};
    return document_from_coords(vertices, edges, coords);
}

json pole_nest(int loops) {
    std::vector<VertexId> vertices = {0};
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::map<VertexId, std::array<double, 2>> coords = {{0, {0.0, 0.0}}};
    double x = 1.0, y = 1.0;
    for (int j = 1; j <= loops; ++j) {
        VertexId p = 2 * j - 1, q = 2 * j;
        vertices.push_back(p);
        vertices.push_back(q);
        coords[p] = {-x, y};
        coords[q] = {x, y};
        edges.insert(edges.end(), {{0, p}, {p, q}, {q, 0}});
        x *= 3.0;
        y *= 2.0;
    }
    return document_from_coords(vertices, edges, coords);
}

json nested_separators() {
    std::vector<VertexId> vertices = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<std::pair<VertexId, VertexId>> edges = {
        {0, 1}, {0, 2}, {0, 3},
        {1, 2}, {2, 3}, {3, 1},
        {1, 4}, {2, 5}, {3, 6},
        {4, 5}, {5, 6}, {6, 4},
        {7, 4}, {8, 5}};
    auto ring = [](double r, double deg) -> std::array<double, 2> {
        double rad = deg * 3.14159265358979323846 / 180.0;
        return {r * std::cos(rad), r * std::sin(rad)};
    };
    std::map<VertexId, std::array<double, 2>> coords = {
        {0, {0.0, 0.0}},
        {1, ring(1, 90)},  {2, ring(1, 210)},  {3, ring(1, 330)},
        {4, ring(2, 90)},  {5, ring(2, 210)},  {6, ring(2, 330)},
        {7, ring(3, 90)},  {8, ring(3, 210)}};
    return document_from_coords(vertices, edges, coords);
}

json double_hub() {
    std::vector<VertexId> vertices = {0, 1, 2, 3, 4, 5, 6, 7};
    std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}};
    std::map<VertexId, std::array<double, 2>> coords = {
        {0, {0.0, -1.0}}, {1, {0.0, 1.0}},
        {2, {2.0, 0.0}},  {3, {0.7, 0.0}},
        {4, {4.0, 0.0}},  {5, {3.0, 0.0}},
        {6, {6.0, 0.0}},  {7, {5.0, 0.0}}};
    for (int j = 0; j < 3; ++j) {
        VertexId t = 2 + 2 * j, a = 3 + 2 * j;
        edges.insert(edges.end(), {{0, t}, {1, t}, {0, a}, {1, a}, {t, a}});
    }
    return document_from_coords(vertices, edges, coords);
}

json nesting_fixture() {
    std::vector<VertexId> vertices = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<std::pair<VertexId, VertexId>> edges = {
        {0, 1}, {1, 2}, {2, 0},          // enclosing triangle (0,1,2)
        {0, 3}, {3, 4}, {4, 0},          // inner lobe boundary (0,3,4)
        {3, 1}, {4, 2},                  // ties inner lobe to the enclosure
        {5, 0}, {5, 3}, {5, 4},          // center of the inner lobe
        {0, 6}, {6, 7}, {7, 0},          // right lobe boundary (0,6,7)
        {8, 0}, {8, 6}, {8, 7},          // center of the right lobe
        {1, 6}};                         // bridge avoiding vertex 0
    std::map<VertexId, std::array<double, 2>> coords = {
        {0, {0.0, 0.0}},
        {1, {-4.0, 3.0}},  {2, {-4.0, -3.0}},
        {3, {-2.0, 1.0}},  {4, {-2.0, -1.0}},
        {5, {-4.0 / 3.0, 0.0}},
        {6, {2.0, 1.0}},   {7, {2.0, -1.0}},
        {8, {4.0 / 3.0, 0.0}}};
    return document_from_coords(vertices, edges, coords);
}

} // namespace cyclesep::fixtures
