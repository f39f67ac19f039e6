#pragma once

#include <string>

#include "cyclesep/embedding.hpp"

namespace cyclesep {

std::string to_dot(const Embedding& e);

// Straight-line drawing; requires coordinates.
std::string to_svg(const Embedding& e);

} // namespace cyclesep
