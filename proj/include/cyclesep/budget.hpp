#pragma once

#include <cstdint>

namespace cyclesep {

// Cap on enumeration work (counted in yielded items). The CLI seeds this from
// CYCLESEP_BUDGET when set.
struct Budget {
    std::uint64_t cap = 1'000'000;
};

} // namespace cyclesep
