#pragma once

#include <cstdint>
#include <vector>

#include "mapforge/rotation_map.hpp"

namespace mapforge {

/// Every rooted planar map with n edges, one canonical representative each,
/// grown edge by edge from the vertex map. TooLarge above 7 edges.
std::vector<RotationMap> enumerate_rooted_maps(int n);

/// Independent count: planar connected rotation systems on 2n labelled
/// half-edges with fixed pairing, divided by 2^(n-1)(n-1)!. n <= 5.
std::uint64_t count_rooted_maps_by_permutations(int n);

/// Rooted quadrangulations with n faces (maps with 2n edges, all faces of degree 4).
std::vector<RotationMap> enumerate_rooted_quadrangulations(int n);

/// Every rooted map obtained from m by adding one edge (pendant, loop, or
/// chord within a face), keeping m's root.
std::vector<RotationMap> one_edge_extensions(const RotationMap& m);

}  // namespace mapforge
