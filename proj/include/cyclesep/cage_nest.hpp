#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cyclesep/cycle_enum.hpp"
#include "cyclesep/embedding.hpp"
#include "cyclesep/separation.hpp"

namespace cyclesep {

// >= 3 internally disjoint u-v paths, ordered so that the pair cycles
// separate the remaining interiors as the cage axiom prescribes. Paths are
// stored oriented pole_u -> pole_v.
struct Cage {
    VertexId pole_u;
    VertexId pole_v;
    std::vector<PathTuple> paths;

    int size() const { return static_cast<int>(paths.size()); }
};

// >= 3 cycles, pairwise disjoint or sharing exactly the pole vertex, ordered
// by strict containment of the chosen sides.
struct Nest {
    std::optional<VertexId> pole;
    std::vector<CycleTuple> cycles;
    std::vector<Side> chosen_side; // N_j, the nested side of cycle j

    int size() const { return static_cast<int>(cycles.size()); }
};

using CageOrNest = std::variant<Cage, Nest>;

struct Region {
    enum class Kind { CageRegion, NestRegion };
    Kind kind;
    int j;
    int k;
    std::vector<VertexId> vertices; // sorted
};

struct InteriorSets {
    std::vector<VertexId> interior;        // int(D)
    std::vector<VertexId> exterior;        // V \ int(D)
    std::vector<VertexId> closed_interior; // int(D) u pol(D)
};

struct FitResult {
    bool fits = false;
    // Witness chain j_0 < ... < j_m with D_{j_(l-1), j_l} capturing exactly
    // the l-th sequence element.
    std::vector<int> witness;
};

// Orders an unordered family into a cage (path family) or nest (cycle
// family). The cage order is read off the rotation at pole u and cut after
// the path whose first dart has the least head id; the nest order comes from
// side containment, oriented so the first cycle is lexicographically at most
// the last. The result is verified against the separation axioms.
CageOrNest order_family(const Embedding& e, const std::vector<PathTuple>& paths);
CageOrNest order_family(const Embedding& e, const std::vector<CycleTuple>& cycles);

// Axiom validation used by order_family and trim; throws AxiomViolation.
void validate_cage(const Embedding& e, const Cage& cage);
void validate_nest(const Embedding& e, const Nest& nest);

// The pair cycle gamma_j * gamma_k^-1 of a cage, canonicalized.
CycleTuple cage_pair_cycle(const Embedding& e, const Cage& cage, int j, int k);

// C_{j,k}: the side of the pair cycle holding the paths strictly between j
// and k (or the complement when nothing lies between).
Region cage_region(const Embedding& e, const Cage& cage, int j, int k);

// N_{j,k} = N_k \ (nu_j u N_j) for j < k.
Region nest_region(const Embedding& e, const Nest& nest, int j, int k);

Region region_of(const Embedding& e, const CageOrNest& d, int j, int k);

InteriorSets interior(const Embedding& e, const CageOrNest& d);

std::vector<VertexId> poles_of(const CageOrNest& d);

// Fits-into test for a finite marked sequence: every element must avoid the
// family, and some increasing index chain must capture the elements one per
// region, in order.
FitResult fits_into(const Embedding& e, const std::vector<VertexId>& seq, const CageOrNest& d);

// Substructure on an index subset (>= 3 members), revalidated.
CageOrNest trim(const Embedding& e, const CageOrNest& d, const std::vector<int>& keep);

} // namespace cyclesep
