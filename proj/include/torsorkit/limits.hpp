#pragma once

#include <cstddef>

namespace torsorkit {

/// Largest admissible base dimension; TORSORKIT_MAX_DIM overrides the default 16.
std::size_t max_dim();
/// Largest number of legs (source plus target) of a stored structure map.
constexpr std::size_t max_legs() { return 6; }
/// Entry budget of a single dense table: max_dim()^max_legs().
std::size_t max_entries();

}  // namespace torsorkit
