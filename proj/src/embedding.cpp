#include "cyclesep/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace cyclesep {

namespace {

using json = nlohmann::json;

[[noreturn]] void malformed(const std::string& why) {
    throw Error(ErrorKind::MalformedDocument, why);
}

// Orientation of the triangle (a, b, c): >0 counterclockwise, 0 collinear.
int orient(const std::array<double, 2>& a, const std::array<double, 2>& b,
           const std::array<double, 2>& c) {
    long double det = (static_cast<long double>(b[0]) - a[0]) * (static_cast<long double>(c[1]) - a[1]) -
                      (static_cast<long double>(b[1]) - a[1]) * (static_cast<long double>(c[0]) - a[0]);
    if (det > 0) return 1;
    if (det < 0) return -1;
    return 0;
}

bool on_segment(const std::array<double, 2>& p, const std::array<double, 2>& a,
                const std::array<double, 2>& b) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

bool segments_cross(const std::array<double, 2>& a, const std::array<double, 2>& b,
                    const std::array<double, 2>& c, const std::array<double, 2>& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(c, a, b)) return true;
    if (o2 == 0 && on_segment(d, a, b)) return true;
    if (o3 == 0 && on_segment(a, c, d)) return true;
    if (o4 == 0 && on_segment(b, c, d)) return true;
    return false;
}

// Cyclic equality of two sequences over the same element set.
bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(b.begin(), b.end(), a[0]);
    if (it == b.end()) return false;
    size_t off = static_cast<size_t>(it - b.begin());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[(off + i) % b.size()]) return false;
    }
    return true;
}

} // namespace

int Embedding::index_of(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end()) {
        throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " is not in the graph");
    }
    return it->second;
}

std::vector<VertexId> Embedding::rotation_ids(VertexId v) const {
    const auto& r = rot_[static_cast<size_t>(index_of(v))];
    std::vector<VertexId> out;
    out.reserve(r.size());
    for (int n : r) out.push_back(ids_[static_cast<size_t>(n)]);
    return out;
}

int Embedding::edge_index(int u_idx, int v_idx) const {
    auto it = edge_index_.find({std::min(u_idx, v_idx), std::max(u_idx, v_idx)});
    return it == edge_index_.end() ? -1 : it->second;
}

int Embedding::face_of_dart(int tail_idx, int head_idx) const {
    int e = edge_index(tail_idx, head_idx);
    if (e < 0) throw Error(ErrorKind::UsageError, "face_of_dart: not an edge");
    int dir = tail_idx < head_idx ? 0 : 1;
    return face_of_dart_[static_cast<size_t>(2 * e + dir)];
}

Embedding Embedding::from_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) malformed("input is not valid JSON");
    return from_json(doc);
}

Embedding Embedding::from_json(const json& document) {
    Embedding e;

    if (!document.is_object()) malformed("document must be a JSON object");
    if (!document.contains("vertices") || !document["vertices"].is_array()) {
        malformed("missing \"vertices\" array");
    }
    if (!document.contains("rotation") || !document["rotation"].is_object()) {
        malformed("missing \"rotation\" object");
    }

    for (const auto& v : document["vertices"]) {
        if (!v.is_number_integer()) malformed("vertex ids must be integers");
        VertexId id = v.get<VertexId>();
        if (id < 0) malformed("vertex ids must be non-negative");
        if (e.index_.count(id)) malformed("duplicate vertex id " + std::to_string(id));
        e.index_[id] = static_cast<int>(e.ids_.size());
        e.ids_.push_back(id);
    }
    if (e.ids_.empty()) malformed("vertex set is empty");

    e.rot_.assign(e.ids_.size(), {});
    const auto& rotation = document["rotation"];
    size_t keys_seen = 0;
    for (size_t i = 0; i < e.ids_.size(); ++i) {
        std::string key = std::to_string(e.ids_[i]);
        if (!rotation.contains(key)) {
            malformed("rotation missing entry for vertex " + key);
        }
        ++keys_seen;
        const auto& list = rotation[key];
        if (!list.is_array()) malformed("rotation[" + key + "] must be an array");
        std::set<int> seen;
        for (const auto& n : list) {
            if (!n.is_number_integer()) malformed("rotation[" + key + "] has a non-integer entry");
            VertexId nid = n.get<VertexId>();
            auto it = e.index_.find(nid);
            if (it == e.index_.end()) {
                malformed("rotation[" + key + "] names unknown vertex " + std::to_string(nid));
            }
            if (it->second == static_cast<int>(i)) {
                throw Error(ErrorKind::SelfLoopOrMultiEdge, "self-loop at vertex " + key);
            }
            if (!seen.insert(it->second).second) {
                throw Error(ErrorKind::SelfLoopOrMultiEdge,
                            "vertex " + std::to_string(nid) + " repeats in rotation[" + key + "]");
            }
            e.rot_[i].push_back(it->second);
        }
    }
    if (rotation.size() != keys_seen) malformed("rotation has entries for unknown vertices");

    // adjacency symmetry
    for (size_t u = 0; u < e.rot_.size(); ++u) {
        for (int v : e.rot_[u]) {
            const auto& back = e.rot_[static_cast<size_t>(v)];
            if (std::find(back.begin(), back.end(), static_cast<int>(u)) == back.end()) {
                throw Error(ErrorKind::AsymmetricAdjacency,
                            std::to_string(e.ids_[u]) + " lists " + std::to_string(e.ids_[static_cast<size_t>(v)]) +
                                " but not vice versa");
            }
        }
    }

    if (document.contains("coords")) {
        const auto& coords = document["coords"];
        if (!coords.is_object()) malformed("coords must be an object");
        std::vector<std::array<double, 2>> pts(e.ids_.size());
        size_t found = 0;
        for (size_t i = 0; i < e.ids_.size(); ++i) {
            std::string key = std::to_string(e.ids_[i]);
            if (!coords.contains(key)) malformed("coords missing vertex " + key);
            const auto& p = coords[key];
            if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
                malformed("coords[" + key + "] must be [x, y]");
            }
            pts[i] = {p[0].get<double>(), p[1].get<double>()};
            ++found;
        }
        if (coords.size() != found) malformed("coords has entries for unknown vertices");
        e.coords_ = std::move(pts);
    }

    e.check_connected();
    if (e.coords_) e.check_coords_consistency(); // may reverse all rotations
    e.build_edges();
    e.build_faces();
    e.check_euler();
    e.build_dual();
    if (e.coords_) e.check_straight_line();
    return e;
}

void Embedding::check_connected() const {
    std::vector<char> seen(ids_.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    size_t reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : rot_[static_cast<size_t>(u)]) {
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    if (reached != ids_.size()) {
        throw Error(ErrorKind::Disconnected, "graph has more than one component");
    }
}

void Embedding::check_coords_consistency() {
    const auto& pts = *coords_;
    // Angular (counterclockwise) neighbor order around each vertex.
    std::vector<std::vector<int>> angular(ids_.size());
    for (size_t u = 0; u < rot_.size(); ++u) {
        std::vector<std::pair<long double, int>> by_angle;
        for (int v : rot_[u]) {
            long double dx = static_cast<long double>(pts[static_cast<size_t>(v)][0]) - pts[u][0];
            long double dy = static_cast<long double>(pts[static_cast<size_t>(v)][1]) - pts[u][1];
            if (dx == 0 && dy == 0) {
                throw Error(ErrorKind::DegenerateGeometry,
                            "coincident endpoints at vertex " + std::to_string(ids_[u]));
            }
            by_angle.emplace_back(std::atan2(dy, dx), v);
        }
        std::sort(by_angle.begin(), by_angle.end());
        for (size_t i = 1; i < by_angle.size(); ++i) {
            if (by_angle[i].first == by_angle[i - 1].first) {
                throw Error(ErrorKind::DegenerateGeometry,
                            "two neighbors at equal angle around vertex " + std::to_string(ids_[u]));
            }
        }
        for (auto& [ang, v] : by_angle) angular[u].push_back(v);
    }

    bool all_forward = true, all_mirror = true;
    for (size_t u = 0; u < rot_.size(); ++u) {
        if (rot_[u].size() < 3) continue; // any cyclic order of <3 is both
        if (!cyclically_equal(rot_[u], angular[u])) all_forward = false;
        std::vector<int> rev(rot_[u].rbegin(), rot_[u].rend());
        if (!cyclically_equal(rev, angular[u])) all_mirror = false;
    }
    if (all_forward) return;
    if (all_mirror) {
        for (auto& r : rot_) std::reverse(r.begin(), r.end());
        mirror_normalized_ = true;
        return;
    }
    malformed("rotation system does not match the coordinate angular order");
}

void Embedding::build_edges() {
    for (size_t u = 0; u < rot_.size(); ++u) {
        for (int v : rot_[u]) {
            if (static_cast<int>(u) < v) {
                edge_index_[{static_cast<int>(u), v}] = static_cast<int>(edges_.size());
                edges_.emplace_back(static_cast<int>(u), v);
            }
        }
    }
}

void Embedding::build_faces() {
    size_t dart_count = 2 * edges_.size();
    face_of_dart_.assign(dart_count, -1);

    auto dart_id = [&](int tail, int head) {
        int eidx = edge_index(tail, head);
        return 2 * eidx + (tail < head ? 0 : 1);
    };
    auto rot_succ = [&](int at, int from) {
        const auto& r = rot_[static_cast<size_t>(at)];
        for (size_t i = 0; i < r.size(); ++i) {
            if (r[i] == from) return r[(i + 1) % r.size()];
        }
        return -1;
    };

    for (size_t e = 0; e < edges_.size(); ++e) {
        for (int dir = 0; dir < 2; ++dir) {
            size_t d0 = 2 * e + static_cast<size_t>(dir);
            if (face_of_dart_[d0] >= 0) continue;
            int fid = static_cast<int>(faces_.size());
            Face face;
            face.id = fid;
            int tail = dir == 0 ? edges_[e].first : edges_[e].second;
            int head = dir == 0 ? edges_[e].second : edges_[e].first;
            int t = tail, h = head;
            do {
                face_of_dart_[static_cast<size_t>(dart_id(t, h))] = fid;
                face.boundary.push_back({ids_[static_cast<size_t>(t)], ids_[static_cast<size_t>(h)]});
                int next_head = rot_succ(h, t);
                t = h;
                h = next_head;
            } while (!(t == tail && h == head));
            faces_.push_back(std::move(face));
        }
    }
    if (edges_.empty()) {
        // K1: a single vertex on the sphere has one face and no darts.
        faces_.push_back(Face{0, {}});
    }

    vertex_faces_.assign(ids_.size(), {});
    for (size_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        vertex_faces_[static_cast<size_t>(u)].push_back(face_of_dart_[2 * e]);
        vertex_faces_[static_cast<size_t>(v)].push_back(face_of_dart_[2 * e + 1]);
    }
    for (auto& fs : vertex_faces_) {
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    }
}

void Embedding::check_euler() const {
    long long chi = static_cast<long long>(ids_.size()) - static_cast<long long>(edges_.size()) +
                    static_cast<long long>(faces_.size());
    if (chi != 2) {
        throw Error(ErrorKind::NotGenusZero,
                    "V - E + F = " + std::to_string(chi) + ", expected 2");
    }
}

void Embedding::build_dual() {
    dual_.node_count = static_cast<int>(faces_.size());
    dual_.edges.reserve(edges_.size());
    for (size_t e = 0; e < edges_.size(); ++e) {
        dual_.edges.push_back({face_of_dart_[2 * e], face_of_dart_[2 * e + 1], static_cast<int>(e)});
    }
}

void Embedding::check_straight_line() const {
    const auto& pts = *coords_;
    // No vertex may sit on a non-incident edge.
    for (size_t w = 0; w < ids_.size(); ++w) {
        for (const auto& [u, v] : edges_) {
            if (static_cast<int>(w) == u || static_cast<int>(w) == v) continue;
            if (on_segment(pts[w], pts[static_cast<size_t>(u)], pts[static_cast<size_t>(v)])) {
                malformed("vertex " + std::to_string(ids_[w]) + " lies on edge " +
                          std::to_string(ids_[static_cast<size_t>(u)]) + "-" +
                          std::to_string(ids_[static_cast<size_t>(v)]));
            }
        }
    }
    for (size_t i = 0; i < edges_.size(); ++i) {
        for (size_t j = i + 1; j < edges_.size(); ++j) {
            auto [a, b] = edges_[i];
            auto [c, d] = edges_[j];
            if (a == c || a == d || b == c || b == d) continue; // touching at vertices was handled above
            if (segments_cross(pts[static_cast<size_t>(a)], pts[static_cast<size_t>(b)],
                               pts[static_cast<size_t>(c)], pts[static_cast<size_t>(d)])) {
                malformed("edges " + std::to_string(ids_[static_cast<size_t>(a)]) + "-" +
                          std::to_string(ids_[static_cast<size_t>(b)]) + " and " +
                          std::to_string(ids_[static_cast<size_t>(c)]) + "-" +
                          std::to_string(ids_[static_cast<size_t>(d)]) + " cross in the drawing");
            }
        }
    }
}

nlohmann::json Embedding::to_json() const {
    json doc;
    doc["vertices"] = ids_;
    json rot = json::object();
    for (size_t i = 0; i < ids_.size(); ++i) {
        std::vector<VertexId> nbrs;
        nbrs.reserve(rot_[i].size());
        for (int v : rot_[i]) nbrs.push_back(ids_[static_cast<size_t>(v)]);
        rot[std::to_string(ids_[i])] = nbrs;
    }
    doc["rotation"] = rot;
    if (coords_) {
        json cs = json::object();
        for (size_t i = 0; i < ids_.size(); ++i) {
            cs[std::to_string(ids_[i])] = {(*coords_)[i][0], (*coords_)[i][1]};
        }
        doc["coords"] = cs;
    }
    return doc;
}

std::shared_ptr<const SideAssignment> Embedding::side_cache_find(const std::vector<VertexId>& key) const {
    std::lock_guard<std::mutex> lock(side_cache_->mutex);
    auto it = side_cache_->table.find(key);
    return it == side_cache_->table.end() ? nullptr : it->second;
}

void Embedding::side_cache_store(const std::vector<VertexId>& key,
                                 std::shared_ptr<const SideAssignment> value) const {
    std::lock_guard<std::mutex> lock(side_cache_->mutex);
    side_cache_->table.emplace(key, std::move(value)); // first writer wins; values are deterministic
}

Embedding load_embedding(const nlohmann::json& document) { return Embedding::from_json(document); }

const std::vector<Face>& compute_faces(const Embedding& e) { return e.faces(); }

const DualGraph& dual_graph(const Embedding& e) { return e.dual(); }

nlohmann::json document_from_coords(
    const std::vector<VertexId>& vertices,
    const std::vector<std::pair<VertexId, VertexId>>& edge_list,
    const std::map<VertexId, std::array<double, 2>>& coords,
    bool emit_coords) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (VertexId v : vertices) adj[v] = {};
    for (const auto& [u, v] : edge_list) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    nlohmann::json rot = nlohmann::json::object();
    for (VertexId v : vertices) {
        const auto& p = coords.at(v);
        std::vector<std::pair<long double, VertexId>> by_angle;
        for (VertexId w : adj[v]) {
            const auto& q = coords.at(w);
            by_angle.emplace_back(std::atan2(static_cast<long double>(q[1]) - p[1],
                                             static_cast<long double>(q[0]) - p[0]),
                                  w);
        }
        std::sort(by_angle.begin(), by_angle.end());
        std::vector<VertexId> order;
        order.reserve(by_angle.size());
        for (auto& [ang, w] : by_angle) order.push_back(w);
        rot[std::to_string(v)] = order;
    }
    nlohmann::json doc;
    doc["vertices"] = vertices;
    doc["rotation"] = rot;
    if (emit_coords) {
        nlohmann::json cs = nlohmann::json::object();
        for (VertexId v : vertices) cs[std::to_string(v)] = {coords.at(v)[0], coords.at(v)[1]};
        doc["coords"] = cs;
    }
    return doc;
}

} // namespace cyclesep
