#pragma once

#include <functional>
#include <vector>

#include "cyclesep/budget.hpp"
#include "cyclesep/embedding.hpp"
#include "cyclesep/separation.hpp"

namespace cyclesep {

struct PathTuple {
    std::vector<VertexId> vertices; // pairwise distinct, consecutive adjacent

    VertexId first() const { return vertices.front(); }
    VertexId last() const { return vertices.back(); }
    int edge_length() const { return static_cast<int>(vertices.size()) - 1; }
    bool contains(VertexId v) const;

    friend bool operator==(const PathTuple& a, const PathTuple& b) {
        return a.vertices == b.vertices;
    }
};

// Visits every simple cycle of length <= max_len exactly once (canonical
// form), in a deterministic order: cycles are rooted at their least vertex
// id and grown over larger ids. Return false from the visitor to stop.
// `allowed_idx`, when given, restricts cycles to the marked vertices.
void for_each_cycle(const Embedding& e, int max_len,
                    const std::function<bool(const CycleTuple&)>& visit,
                    const Budget& budget = {},
                    const std::vector<char>* allowed_idx = nullptr);

// Materialized enumeration; cycles containing all of `through` only.
std::vector<CycleTuple> enumerate_cycles(const Embedding& e, int max_len,
                                         const std::vector<VertexId>& through = {},
                                         const Budget& budget = {});

// Every simple u-v path with at most max_len edges, oriented u -> v.
std::vector<PathTuple> enumerate_paths(const Embedding& e, VertexId u, VertexId v,
                                       int max_len, const Budget& budget = {});

PathTuple make_path(const Embedding& e, const std::vector<VertexId>& vertices);

} // namespace cyclesep
