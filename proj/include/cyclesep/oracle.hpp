#pragma once

#include <array>
#include <vector>

#include "cyclesep/embedding.hpp"
#include "cyclesep/separation.hpp"

namespace cyclesep {

enum class GeoSide { Inside, Outside };

// Even-odd ray casting of a point against a polygon. Points on the boundary
// raise DegenerateGeometry.
GeoSide point_in_polygon(const std::vector<std::array<double, 2>>& polygon,
                         const std::array<double, 2>& point);

// Side of an off-cycle vertex in the straight-line drawing; the independent
// check for the combinatorial side assignment.
GeoSide geometric_oracle(const Embedding& e, const CycleTuple& cycle, VertexId v);

} // namespace cyclesep
