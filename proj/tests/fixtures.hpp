#pragma once

#include <json.hpp>

#include "cyclesep/embedding.hpp"

namespace cyclesep::fixtures {

// Triangle, rotations only.
nlohmann::json k3();

// K4 with vertex 3 inside the triangle 0-1-2.
nlohmann::json k4();
// Same map with one rotation list reversed: fails the genus check.
nlohmann::json k4_flipped();

// Octahedron: poles 0 (north), 1 (south); equator 2-3-4-5.
nlohmann::json octahedron();

// Cube graph Q3: inner square 0-3, outer square 4-7, spokes i - i+4.
nlohmann::json cube();

// Nested loops tangent at vertex 0 (a nest with a pole).
// Loop j (1-based) is (0, 2j-1, 2j), nested inside loop j+1.
nlohmann::json pole_nest(int loops = 3);

// Vertex 0 wrapped by two concentric triangles (1,2,3) and (4,5,6) joined by
// spokes, with leaf marks 7 (on 4) and 8 (on 5) outside.
nlohmann::json nested_separators();

// Three stacked triangles over the shared edge 0-1, a marked center in each:
// X-sets pairwise share both hubs, so no single waypoint exists.
nlohmann::json double_hub();

// Lobe (0,3,4) with center 5 inside an enclosing triangle (0,1,2), plus a
// second lobe (0,6,7) with center 8, bridged by the edge 1-6.
nlohmann::json nesting_fixture();

} // namespace cyclesep::fixtures
