#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "cyclesep/budget.hpp"
#include "cyclesep/embedding.hpp"

namespace cyclesep {

enum class Side : std::uint8_t { Side0 = 0, Side1 = 1, OnCycle = 2 };

inline Side opposite(Side s) {
    return s == Side::Side0 ? Side::Side1 : Side::Side0;
}

// A vertex sequence read along a simple cycle. `canonical` is the
// lexicographically least sequence over all rotations and both directions,
// so equal cycles compare equal.
struct CycleTuple {
    std::vector<VertexId> raw;
    std::vector<VertexId> canonical;
    std::vector<std::pair<VertexId, VertexId>> edge_set; // (lo, hi), sorted

    int length() const { return static_cast<int>(canonical.size()); }
    bool contains(VertexId v) const;

    friend bool operator==(const CycleTuple& a, const CycleTuple& b) {
        return a.canonical == b.canonical;
    }
    friend bool operator<(const CycleTuple& a, const CycleTuple& b) {
        return a.canonical < b.canonical;
    }
};

// The two Jordan sides of a cycle. Side0 is the dual component holding the
// least face id, so labels depend only on the embedding document.
struct SideAssignment {
    CycleTuple cycle;
    std::vector<Side> vertex_side; // by internal index
    std::vector<int> face_side;    // by face id

    Side side_of_index(int idx) const { return vertex_side[static_cast<size_t>(idx)]; }
    Side side_of(const Embedding& e, VertexId v) const;
    std::vector<VertexId> vertices_on(const Embedding& e, Side s) const; // sorted
};

struct RegionPartition {
    std::vector<VertexId> support;              // sorted
    std::vector<std::vector<VertexId>> classes; // each sorted, ordered by least member
};

// Least canonical rotation/reflection of a distinct vertex sequence.
std::vector<VertexId> canonical_cycle_form(const std::vector<VertexId>& cycle);

CycleTuple canonicalize_cycle(const Embedding& e, const std::vector<VertexId>& raw);

// Cached per (embedding, canonical cycle); values are immutable.
std::shared_ptr<const SideAssignment> side_assignment(const Embedding& e, const CycleTuple& c);

// Number of dual components after deleting the cycle's dual edges. The
// combinatorial Jordan curve theorem says 2; this op does not assume it.
int dual_split_count(const Embedding& e, const CycleTuple& c);

// R_n(a, b, c_1..c_n): true iff raw reads along a simple cycle disjoint from
// {a, b} that leaves a and b on the same side. Malformed tuples make the
// predicate false, not an error.
bool r_predicate(const Embedding& e, VertexId a, VertexId b, const std::vector<VertexId>& raw);

// (D+_c(a), D-_c(a)); requires a off the cycle.
std::pair<std::vector<VertexId>, std::vector<VertexId>>
side_sets(const Embedding& e, const CycleTuple& c, VertexId a);

// True iff the curve of c1 minus its intersection with c2 touches both sides
// of c2. Fragments are tracked through edges, so a chord between two c2
// vertices counts with the side its interior runs through.
bool crosses_directed(const Embedding& e, const CycleTuple& c1, const CycleTuple& c2);

// Symmetric crossing test; asserts agreement of both directions in debug.
bool crosses(const Embedding& e, const CycleTuple& c1, const CycleTuple& c2);

// Classes of the joint same-side relation on V \ (c1 u c2).
RegionPartition joint_classes(const Embedding& e, const CycleTuple& c1, const CycleTuple& c2);

// Classes of simultaneous same-side equivalence over every simple cycle whose
// vertices lie inside `support`, found by bounded exhaustive enumeration.
RegionPartition complementary_regions(const Embedding& e, const std::vector<VertexId>& support,
                                      int max_len, const Budget& budget = {});

// True when the common vertices and common edges of the two cycles form a
// single path (possibly one vertex).
bool intersection_is_single_path(const CycleTuple& c1, const CycleTuple& c2);

struct NonTouchingWitness {
    std::vector<VertexId> region;
    std::vector<VertexId> witness_cycle; // canonical form of d
    VertexId witness_vertex;             // b with region = D+_d(b)
};

struct NonTouchingReport {
    bool all_matched = true;
    std::vector<NonTouchingWitness> matched;
    std::vector<std::vector<VertexId>> unmatched; // counterexamples (implementation bugs)
};

// Checks that every complementary region of c1 u c2 is a side set of some
// cycle inside the union. Requires |c1 n c2| >= 2.
NonTouchingReport verify_non_touching(const Embedding& e, const CycleTuple& c1,
                                      const CycleTuple& c2, const Budget& budget = {});

} // namespace cyclesep
