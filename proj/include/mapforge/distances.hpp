#pragma once

#include <vector>

#include "mapforge/simple_graph.hpp"

namespace mapforge {

class RotationMap;

/// Unweighted BFS distances; throws Disconnected if some vertex is unreachable.
std::vector<int> bfs_distances(const SimpleGraph& g, int source);
std::vector<int> bfs_distances(const RotationMap& m, int source);

int eccentricity(const SimpleGraph& g, int source);

/// Exact diameter by iFUB (eccentricity-pruned search from a central vertex).
int diameter_exact(const SimpleGraph& g);
int diameter_exact(const RotationMap& m);

struct DiameterBounds {
    int lower = 0;
    int upper = 0;
};

/// Double-sweep lower bound, 2*ecc(midpoint) upper bound.
DiameterBounds diameter_bounds(const SimpleGraph& g);

/// All-sources BFS. The serial version is the test oracle for the others.
int diameter_all_pairs_serial(const SimpleGraph& g);
int diameter_all_pairs_parallel(const SimpleGraph& g, int threads = 0);

}  // namespace mapforge
