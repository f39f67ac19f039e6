#pragma once

#include <optional>
#include <vector>

#include "cyclesep/budget.hpp"
#include "cyclesep/embedding.hpp"
#include "cyclesep/separation.hpp"

namespace cyclesep {

// A marked vertex sequence (a_j) with the cycle-length bound used when
// searching for separators.
struct MarkedSequence {
    std::vector<VertexId> seq; // >= 3 pairwise distinct vertices
    int max_len = 12;
};

struct EnvelopeData {
    std::vector<std::vector<CycleTuple>> separators; // S(I)_j per index
    std::vector<std::vector<VertexId>> x_sets;       // X(I)_j
    std::vector<std::vector<VertexId>> externals;    // external vertices of X(I)_j
    std::vector<std::vector<VertexId>> h_sets;       // H(I)_j
    std::vector<std::vector<VertexId>> envs;         // env_I(a_j)
    std::optional<VertexId> nod;
    // Set when at least two X-sets are nonempty but no single vertex lies on
    // every path between each pair; finite inputs can land here.
    bool nod_ambiguous = false;
    // Set when env_I(a_j) differed between two auxiliary index choices.
    bool env_depends_on_aux = false;
};

void validate_marked_sequence(const Embedding& e, const MarkedSequence& m);

// All cycles of length <= max_len separating a_j from the rest of the
// sequence (which forces the cycle off every marked vertex).
std::vector<CycleTuple> separators_of(const Embedding& e, const MarkedSequence& m, int j,
                                      const Budget& budget = {});

// (X(I)_j, its external vertices) from a precomputed separator family.
std::pair<std::vector<VertexId>, std::vector<VertexId>>
x_set_from(const Embedding& e, const MarkedSequence& m, int j,
           const std::vector<CycleTuple>& separators);

std::pair<std::vector<VertexId>, std::vector<VertexId>>
x_set(const Embedding& e, const MarkedSequence& m, int j, const Budget& budget = {});

// The vertex every X-to-X path must traverse, when one exists.
std::optional<VertexId> nod_vertex(const Embedding& e,
                                   const std::vector<std::vector<VertexId>>& x_sets,
                                   bool* ambiguous = nullptr);

// Vertices reachable from X(I)_j without passing through nod.
std::vector<VertexId> h_set(const Embedding& e, const std::vector<VertexId>& x_set_j,
                            std::optional<VertexId> nod);

// Full staged pipeline: separators -> X -> nod -> H -> env.
EnvelopeData build_envelope(const Embedding& e, const MarkedSequence& m, const Budget& budget = {});

// env_I(a_j) from staged data; aux_j is the auxiliary index j' (negative =
// pick the least and cross-check with a second choice).
std::vector<VertexId> env_of(const Embedding& e, const MarkedSequence& m, int j,
                             const EnvelopeData& staged, int aux_j = -1,
                             bool* depends_on_aux = nullptr, const Budget& budget = {});

enum class NestingBranch { Containment, AlmostDisjoint };

// Checks the cycle-nesting observation: given the hypotheses on (c, c2, d,
// a, a2, v), the a-side closure of c either sits inside the b-side closure
// of d or meets it in at most {v}. Returns the branch that holds.
NestingBranch verify_cycle_nesting(const Embedding& e, const CycleTuple& c, const CycleTuple& c2,
                                   const CycleTuple& d, VertexId a, VertexId a2, VertexId b,
                                   VertexId v);

} // namespace cyclesep
