#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyclesep/embedding.hpp"

namespace cyclesep {

enum class GenKind { StackedTriangulation, Onion, Grapes, PlantedCage };

GenKind gen_kind_from_string(const std::string& s); // BadConfig on unknown
const char* gen_kind_name(GenKind kind);

struct GeneratorConfig {
    std::uint64_t seed = 0;
    GenKind kind = GenKind::StackedTriangulation;
    bool emit_coords = true;

    int n = 10; // stacked: total vertex count

    int rings = 3;     // onion
    int ring_size = 4; // onion

    int lobes = 3; // grapes

    int cage_paths = 4; // planted cage
    int path_len = 2;   // interior vertices per path
    int spread = 2;     // gap between marked lunes
};

// Ground truth recorded by the planted generators.
struct GenMetadata {
    std::vector<VertexId> insertion_order; // stacked, ids in insertion order

    std::optional<VertexId> hub;                 // onion / grapes
    std::vector<std::vector<VertexId>> rings;    // onion, inner to outer
    std::vector<std::array<VertexId, 3>> lobes;  // grapes: (p, q, a) per lobe
    std::vector<VertexId> marks;                 // grapes / planted cage

    std::optional<std::pair<VertexId, VertexId>> poles; // planted cage
    std::vector<std::vector<VertexId>> cage_paths;      // generator fan order
    std::vector<std::pair<int, int>> mark_lunes;        // fan-order path index pairs
};

struct GenResult {
    nlohmann::json document;
    GenMetadata meta;
};

// Deterministic: identical config (including seed) gives a byte-identical
// document.
GenResult gen(const GeneratorConfig& config);

// Undoes a stacked insertion in a document: drops the vertex, its rotation
// entry, its occurrences in neighbor lists, and its coordinate.
nlohmann::json remove_vertex_from_document(const nlohmann::json& doc, VertexId v);

} // namespace cyclesep
