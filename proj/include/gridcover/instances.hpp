#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gridcover/grid.hpp"
#include "gridcover/oracle.hpp"

namespace gridcover {

enum class Family { rectangle, cross, blob, u_shape, ring, holey_blob };

std::string to_string(Family f);

// Draws in [lo, hi] from the raw engine output; stable across standard
// library implementations, unlike the <random> distributions.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

// Seeded random grid of the family with area at most max_area (>= 1).
// ring and holey_blob always contain at least one hole when the area allows.
Grid random_grid(Family family, std::mt19937_64& rng, std::int64_t max_area);

// Instances cycle through all families; instance i uses seed + i.
std::vector<RatioInstance> benchmark_instances(std::uint64_t seed, std::size_t count, std::int64_t max_area);

}  // namespace gridcover
