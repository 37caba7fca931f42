#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mapforge/rotation_map.hpp"
#include "mapforge/simple_graph.hpp"

namespace mapforge {

// ---- 2-connected core of a rooted map -------------------------------------

struct CoreDecomposition {
    RotationMap core;
    /// pieces[g] is the rooted map hanging in the corner preceding core half-edge g.
    std::vector<RotationMap> pieces;
    /// core half-edge -> half-edge of the original map.
    std::vector<int> core_to_original;
};

CoreDecomposition two_connected_core(const RotationMap& m);

/// Glues every piece back into its corner.
RotationMap reassemble(const CoreDecomposition& d);

/// Loopless 2-connected map, or a single edge / single loop.
bool is_two_connected_map(const RotationMap& m);

// ---- Block / vertex tree ---------------------------------------------------

struct BvTree {
    int num_vertices = 0;                      // V-nodes are 0..num_vertices-1
    std::vector<std::vector<int>> block_edges; // edge ids per block
    std::vector<std::vector<int>> block_vertices;
    SimpleGraph tree;                          // B-node of block i is num_vertices+i

    int num_blocks() const { return static_cast<int>(block_edges.size()); }
};

BvTree block_decomposition(const SimpleGraph& g);

// ---- Split decomposition into bricks ---------------------------------------

enum class BrickKind { R, M, T };
char to_char(BrickKind k);

struct BrickEdge {
    int u = 0;
    int v = 0;
    int id = 0;  // >= 0 real edge of the input, < 0 virtual edge -(k+1)
    bool is_virtual() const { return id < 0; }
    int virtual_index() const { return -id - 1; }
};

struct Brick {
    BrickKind kind = BrickKind::T;
    std::vector<BrickEdge> edges;
};

struct RmtTree {
    int num_vertices = 0;
    int num_real_edges = 0;
    std::vector<Brick> bricks;
    std::vector<Edge> virtual_pairs;   // endpoints of virtual edge k
    std::vector<Edge> virtual_bricks;  // the two bricks matched by virtual edge k

    /// Bricks are nodes 0..B-1, real edge e is leaf B+e.
    SimpleGraph tree() const;
    int num_bricks() const { return static_cast<int>(bricks.size()); }
};

struct RmtOptions {
    std::uint64_t order_seed = 0;  // 0 keeps natural order; other values shuffle the search
};

RmtTree rmt_decomposition(const SimpleGraph& g, RmtOptions options = {});

/// Order-independent description of the bricks, for determinism checks.
std::vector<std::string> brick_signatures(const RmtTree& t);

struct RmtCheck {
    bool ok = true;
    std::string detail;
};
/// Tree shape, edge partition, virtual matching, kinds, R-R/M-M adjacency.
RmtCheck check_rmt_structure(const SimpleGraph& g, const RmtTree& t);

struct SplitCandidate {
    int u = 0;
    int v = 0;
    std::vector<int> first;   // E1, edge ids
    std::vector<int> second;  // E2
};

/// Exhaustive search over pairs and edge bipartitions; TooLarge above 12 vertices.
std::vector<SplitCandidate> brute_force_split_candidates(const SimpleGraph& g);

/// Graph of a brick with virtual edges as ordinary edges.
SimpleGraph brick_graph(const Brick& b, std::vector<int>* vertex_map = nullptr);

struct VirtualEdgeStats {
    int max_distance = 0;
    std::vector<int> distances;
};
VirtualEdgeStats virtual_edge_stats(const SimpleGraph& g, const RmtTree& t);

// ---- chi -------------------------------------------------------------------

/// Abstract variant: at a T-brick, sums over a shortest pole path. The root
/// edge is real edge root_edge of g.
long long chi_network(const RmtTree& t, int root_edge);

/// Embedded variant: the core of a rooted 2-connected map; at a T-brick sums
/// over the face to the left of the root (or of the virtual edge).
long long chi_map(const RotationMap& core);

// ---- inequality validators -------------------------------------------------

struct InequalityResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

/// Core bound, block bound, brick bound (with virtual distances) and T-brick
/// bound, evaluated on one map.
std::vector<InequalityResult> validate_decomposition_inequalities(const RotationMap& m);

}  // namespace mapforge
