#pragma once

#include <cstddef>
#include <cstdint>

#include "commalg/quiver.hpp"

namespace commalg {

// Quiver with vertices v1..vn and arrows a1..ak whose endpoints are drawn
// uniformly (loops and parallel arrows included). Same arguments, same
// quiver.
Quiver random_quiver(std::size_t vertices, std::size_t arrows,
                     std::uint64_t seed);

}  // namespace commalg
