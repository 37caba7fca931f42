#pragma once

#include <vector>

#include "mapforge/simple_graph.hpp"

namespace mapforge {

/// Blocks as lists of edge ids. Works on multigraphs; each loop is its own block.
std::vector<std::vector<int>> biconnected_edge_components(const SimpleGraph& g);

std::vector<int> articulation_points(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

/// Connected, loopless (unless a single loop), at least two vertices, no
/// articulation point. K2 and multi-edges between two vertices qualify.
bool is_two_connected(const SimpleGraph& g);

/// Subgraph made of the listed edges and their endpoints, renumbered densely.
/// vertex_map receives the original id of each new vertex.
SimpleGraph edge_induced_subgraph(const SimpleGraph& g, const std::vector<int>& edge_ids,
                                  std::vector<int>* vertex_map = nullptr);

}  // namespace mapforge
