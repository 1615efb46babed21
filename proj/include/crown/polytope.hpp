#pragma once

#include <optional>
#include <set>
#include <vector>

#include "crown/rational.hpp"
#include "crown/rootsys.hpp"

namespace crown {

// Exact solve of a square system; nullopt when singular.
std::optional<RatVector> solve_exact(std::vector<RatVector> a, RatVector b);

// Brute-force vertices of {Y : |alpha(Y)| <= 1 for alpha in the reduced positive roots},
// in coweight coordinates. Tries every n-subset of active constraints and sign pattern.
std::set<RatVector> omega_vertices(const RootSystemData& rs);

// Union of the Weyl orbits of the extremal points.
std::set<RatVector> extremal_orbit_union(const RootSystemData& rs);

}  // namespace crown
