#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyclesep/error.hpp"

namespace cyclesep {

using VertexId = int;

struct Dart {
    VertexId tail;
    VertexId head;

    Dart reverse() const { return {head, tail}; }
    friend bool operator==(const Dart& a, const Dart& b) {
        return a.tail == b.tail && a.head == b.head;
    }
};

// A face of the sphere embedding, traced combinatorially.
struct Face {
    int id = 0;
    std::vector<Dart> boundary; // cyclic, in traversal order
};

struct DualEdge {
    int face_a;
    int face_b;
    int primal_edge;
};

struct DualGraph {
    int node_count = 0;
    std::vector<DualEdge> edges; // one per primal edge, same order
};

struct SideAssignment;

// Connected simple planar graph with a rotation system, validated as a
// genus-0 combinatorial map at construction. Immutable afterwards; the only
// mutable member is a memo table for side assignments, guarded by a mutex.
class Embedding {
public:
    static Embedding from_json(const nlohmann::json& document);
    static Embedding from_text(const std::string& text);

    Embedding(Embedding&&) noexcept = default;
    Embedding& operator=(Embedding&&) noexcept = default;
    Embedding(const Embedding&) = delete;
    Embedding& operator=(const Embedding&) = delete;

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<VertexId>& vertex_ids() const { return ids_; }
    bool has_vertex(VertexId v) const { return index_.count(v) != 0; }
    int index_of(VertexId v) const;
    VertexId id_of(int idx) const { return ids_[static_cast<size_t>(idx)]; }

    // Cyclic neighbor order, internal indices.
    const std::vector<int>& rotation(int idx) const { return rot_[static_cast<size_t>(idx)]; }
    std::vector<VertexId> rotation_ids(VertexId v) const;
    int degree(int idx) const { return static_cast<int>(rot_[static_cast<size_t>(idx)].size()); }
    bool adjacent(int u_idx, int v_idx) const { return edge_index(u_idx, v_idx) >= 0; }

    // Edges as internal index pairs with first < second.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_index(int u_idx, int v_idx) const; // -1 if absent

    bool has_coords() const { return coords_.has_value(); }
    std::array<double, 2> coord(int idx) const { return (*coords_)[static_cast<size_t>(idx)]; }

    const std::vector<Face>& faces() const { return faces_; }
    const DualGraph& dual() const { return dual_; }

    // Face id of the dart tail->head.
    int face_of_dart(int tail_idx, int head_idx) const;
    // Sorted face ids incident to a vertex.
    const std::vector<int>& faces_at(int idx) const { return vertex_faces_[static_cast<size_t>(idx)]; }

    // True when the document carried the mirror orientation and all rotation
    // lists were reversed on load.
    bool was_mirror_normalized() const { return mirror_normalized_; }

    nlohmann::json to_json() const;

    // Memo table for side assignments, keyed by canonical cycle sequence.
    std::shared_ptr<const SideAssignment> side_cache_find(const std::vector<VertexId>& key) const;
    void side_cache_store(const std::vector<VertexId>& key,
                          std::shared_ptr<const SideAssignment> value) const;

private:
    Embedding() = default;

    void build_edges();
    void build_faces();
    void build_dual();
    void check_connected() const;
    void check_euler() const;
    void check_coords_consistency();
    void check_straight_line() const;

    std::vector<VertexId> ids_;
    std::map<VertexId, int> index_;
    std::vector<std::vector<int>> rot_;
    std::optional<std::vector<std::array<double, 2>>> coords_;

    std::vector<std::pair<int, int>> edges_;
    std::map<std::pair<int, int>, int> edge_index_;
    std::vector<Face> faces_;                  // boundaries carry external ids
    std::vector<int> face_of_dart_;            // 2*edge + dir, dir 0 = (lo,hi)
    std::vector<std::vector<int>> vertex_faces_;
    DualGraph dual_;
    bool mirror_normalized_ = false;

    struct SideCache {
        std::mutex mutex;
        std::map<std::vector<VertexId>, std::shared_ptr<const SideAssignment>> table;
    };
    mutable std::unique_ptr<SideCache> side_cache_ = std::make_unique<SideCache>();
};

// Ops named in the artifact's interface; faces and dual are computed eagerly
// at load, these return the stored results.
Embedding load_embedding(const nlohmann::json& document);
const std::vector<Face>& compute_faces(const Embedding& e);
const DualGraph& dual_graph(const Embedding& e);

// Builds an embedding document from a straight-line drawing: rotations are
// the neighbors sorted counterclockwise by angle. Every vertex needs a coord.
nlohmann::json document_from_coords(
    const std::vector<VertexId>& vertices,
    const std::vector<std::pair<VertexId, VertexId>>& edge_list,
    const std::map<VertexId, std::array<double, 2>>& coords,
    bool emit_coords = true);

} // namespace cyclesep
