#include "cyclesep/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cyclesep/rng.hpp"

namespace cyclesep {

namespace {

using json = nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

json document_from_rot(const std::vector<std::vector<VertexId>>& rot,
                       const std::vector<std::array<double, 2>>& coords, bool emit_coords) {
    json doc;
    std::vector<VertexId> vertices(rot.size());
    for (size_t i = 0; i < rot.size(); ++i) vertices[i] = static_cast<VertexId>(i);
    doc["vertices"] = vertices;
    json r = json::object();
    for (size_t i = 0; i < rot.size(); ++i) r[std::to_string(i)] = rot[i];
    doc["rotation"] = r;
    if (emit_coords) {
        json cs = json::object();
        for (size_t i = 0; i < coords.size(); ++i) {
            cs[std::to_string(i)] = {coords[i][0], coords[i][1]};
        }
        doc["coords"] = cs;
    }
    return doc;
}

void insert_after(std::vector<VertexId>& rotation, VertexId after, VertexId inserted) {
    auto it = std::find(rotation.begin(), rotation.end(), after);
    rotation.insert(it + 1, inserted);
}

GenResult gen_stacked(const GeneratorConfig& config) {
    if (config.n < 3) throw Error(ErrorKind::BadConfig, "stacked triangulation needs n >= 3");
    Rng rng(config.seed);

    std::vector<std::vector<VertexId>> rot = {{1, 2}, {0, 2}, {0, 1}};
    std::vector<std::array<double, 2>> coords = {{0.0, 0.0}, {1.0, 0.0}, {0.5, 1.0}};
    std::vector<std::array<VertexId, 3>> faces = {{0, 1, 2}}; // bounded faces, ccw

    GenMetadata meta;
    for (VertexId k = 3; k < config.n; ++k) {
        size_t f = static_cast<size_t>(rng.below(faces.size()));
        auto [a, b, c] = faces[f];
        coords.push_back({(coords[static_cast<size_t>(a)][0] + coords[static_cast<size_t>(b)][0] +
                           coords[static_cast<size_t>(c)][0]) /
                              3.0,
                          (coords[static_cast<size_t>(a)][1] + coords[static_cast<size_t>(b)][1] +
                           coords[static_cast<size_t>(c)][1]) /
                              3.0});
        rot.push_back({a, b, c});
        insert_after(rot[static_cast<size_t>(a)], b, k);
        insert_after(rot[static_cast<size_t>(b)], c, k);
        insert_after(rot[static_cast<size_t>(c)], a, k);
        faces[f] = {a, b, k};
        faces.push_back({b, c, k});
        faces.push_back({c, a, k});
        meta.insertion_order.push_back(k);
    }
    return {document_from_rot(rot, coords, config.emit_coords), std::move(meta)};
}

GenResult gen_onion(const GeneratorConfig& config) {
    if (config.rings < 3) throw Error(ErrorKind::BadConfig, "onion needs at least 3 rings");
    if (config.ring_size < 3) throw Error(ErrorKind::BadConfig, "onion rings need >= 3 vertices");
    int k = config.rings, r = config.ring_size;

    std::vector<VertexId> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::map<VertexId, std::array<double, 2>> coords;

    VertexId hub = 0;
    vertices.push_back(hub);
    coords[hub] = {0.0, 0.0};
    auto ring_vertex = [&](int ring, int i) { return 1 + (ring - 1) * r + i; };

    GenMetadata meta;
    meta.hub = hub;
    for (int ring = 1; ring <= k; ++ring) {
        std::vector<VertexId> cycle;
        for (int i = 0; i < r; ++i) {
            VertexId v = ring_vertex(ring, i);
            vertices.push_back(v);
            double angle = 2.0 * kPi * i / r;
            coords[v] = {ring * std::cos(angle), ring * std::sin(angle)};
            cycle.push_back(v);
        }
        for (int i = 0; i < r; ++i) {
            edges.emplace_back(ring_vertex(ring, i), ring_vertex(ring, (i + 1) % r));
            if (ring == 1) {
                edges.emplace_back(hub, ring_vertex(1, i));
            } else {
                edges.emplace_back(ring_vertex(ring - 1, i), ring_vertex(ring, i));
            }
        }
        meta.rings.push_back(cycle);
    }
    return {document_from_coords(vertices, edges, coords, config.emit_coords), std::move(meta)};
}

GenResult gen_grapes(const GeneratorConfig& config) {
    if (config.lobes < 3) throw Error(ErrorKind::BadConfig, "grapes needs at least 3 lobes");
    int k = config.lobes;

    std::vector<VertexId> vertices = {0};
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::map<VertexId, std::array<double, 2>> coords;
    coords[0] = {0.0, 0.0};

    GenMetadata meta;
    meta.hub = 0;
    double half_width = 0.5 * kPi / k;
    for (int j = 0; j < k; ++j) {
        double phi = 2.0 * kPi * j / k;
        VertexId p = 1 + 3 * j, q = 2 + 3 * j, a = 3 + 3 * j;
        vertices.push_back(p);
        vertices.push_back(q);
        vertices.push_back(a);
        coords[p] = {2.0 * std::cos(phi + half_width), 2.0 * std::sin(phi + half_width)};
        coords[q] = {2.0 * std::cos(phi - half_width), 2.0 * std::sin(phi - half_width)};
        coords[a] = {(coords[p][0] + coords[q][0]) / 3.0, (coords[p][1] + coords[q][1]) / 3.0};
        edges.emplace_back(0, p);
        edges.emplace_back(0, q);
        edges.emplace_back(p, q);
        edges.emplace_back(a, 0);
        edges.emplace_back(a, p);
        edges.emplace_back(a, q);
        meta.lobes.push_back({p, q, a});
        meta.marks.push_back(a);
    }
    return {document_from_coords(vertices, edges, coords, config.emit_coords), std::move(meta)};
}

GenResult gen_planted_cage(const GeneratorConfig& config) {
    if (config.cage_paths < 3) throw Error(ErrorKind::BadConfig, "planted cage needs >= 3 paths");
    if (config.path_len < 1) throw Error(ErrorKind::BadConfig, "paths need >= 1 interior vertex");
    if (config.spread < 1) throw Error(ErrorKind::BadConfig, "spread must be >= 1");
    int p = config.cage_paths, len = config.path_len, spread = config.spread;

    std::vector<VertexId> vertices = {0, 1};
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::map<VertexId, std::array<double, 2>> coords;
    VertexId north = 0, south = 1;
    coords[north] = {0.0, 0.0};
    coords[south] = {0.0, static_cast<double>(len + 1)};

    GenMetadata meta;
    meta.poles = {north, south};
    auto interior_vertex = [&](int j, int t) { return 2 + j * len + t; };
    for (int j = 0; j < p; ++j) {
        double x = j - (p - 1) / 2.0;
        std::vector<VertexId> path = {north};
        for (int t = 0; t < len; ++t) {
            VertexId v = interior_vertex(j, t);
            vertices.push_back(v);
            coords[v] = {x, static_cast<double>(t + 1)};
            path.push_back(v);
        }
        path.push_back(south);
        for (size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
        meta.cage_paths.push_back(path);
    }

    VertexId next_id = 2 + p * len;
    for (int j = 0; j + 1 < p; j += spread) {
        VertexId mark = next_id++;
        vertices.push_back(mark);
        // Just inside the lune, hugging the first interior vertex of path j:
        // high enough to clear the fan below, low enough to clear the fan
        // into the south pole when the paths are short.
        double x = j - (p - 1) / 2.0 + 0.5;
        coords[mark] = {x, 1.05};
        edges.emplace_back(mark, interior_vertex(j, 0));
        meta.marks.push_back(mark);
        meta.mark_lunes.emplace_back(j, j + 1);
    }
    return {document_from_coords(vertices, edges, coords, config.emit_coords), std::move(meta)};
}

} // namespace

GenKind gen_kind_from_string(const std::string& s) {
    if (s == "stacked" || s == "stacked_triangulation") return GenKind::StackedTriangulation;
    if (s == "onion") return GenKind::Onion;
    if (s == "grapes") return GenKind::Grapes;
    if (s == "planted_cage" || s == "cage") return GenKind::PlantedCage;
    throw Error(ErrorKind::BadConfig, "unknown generator kind: " + s);
}

const char* gen_kind_name(GenKind kind) {
    switch (kind) {
        case GenKind::StackedTriangulation: return "stacked_triangulation";
        case GenKind::Onion: return "onion";
        case GenKind::Grapes: return "grapes";
        case GenKind::PlantedCage: return "planted_cage";
    }
    return "unknown";
}

GenResult gen(const GeneratorConfig& config) {
    switch (config.kind) {
        case GenKind::StackedTriangulation: return gen_stacked(config);
        case GenKind::Onion: return gen_onion(config);
        case GenKind::Grapes: return gen_grapes(config);
        case GenKind::PlantedCage: return gen_planted_cage(config);
    }
    throw Error(ErrorKind::BadConfig, "unknown generator kind");
}

nlohmann::json remove_vertex_from_document(const nlohmann::json& doc, VertexId v) {
    json out = doc;
    std::string key = std::to_string(v);

    json vertices = json::array();
    for (const auto& x : doc["vertices"]) {
        if (x.get<VertexId>() != v) vertices.push_back(x);
    }
    out["vertices"] = vertices;

    json rotation = json::object();
    for (auto it = doc["rotation"].begin(); it != doc["rotation"].end(); ++it) {
        if (it.key() == key) continue;
        json list = json::array();
        for (const auto& n : it.value()) {
            if (n.get<VertexId>() != v) list.push_back(n);
        }
        rotation[it.key()] = list;
    }
    out["rotation"] = rotation;

    if (doc.contains("coords")) {
        json coords = json::object();
        for (auto it = doc["coords"].begin(); it != doc["coords"].end(); ++it) {
            if (it.key() != key) coords[it.key()] = it.value();
        }
        out["coords"] = coords;
    }
    return out;
}

} // namespace cyclesep
