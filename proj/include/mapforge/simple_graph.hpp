#pragma once

#include <span>
#include <utility>
#include <vector>

namespace mapforge {

class RotationMap;

using Edge = std::pair<int, int>;

/// Undirected graph in CSR form. In simple mode loops and parallel edges are
/// rejected; in multigraph mode they are kept (a loop appears twice in the
/// adjacency of its vertex).
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int n_vertices, std::vector<Edge> edges, bool multigraph = false);

    /// Vertex graph of a map. Simple mode drops loops and merges parallels.
    static SimpleGraph from_map(const RotationMap& m, bool multigraph = false);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool is_multigraph() const { return multi_; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
    }
    /// Edge ids parallel to neighbors(v).
    std::span<const int> incident_edges(int v) const {
        return {adj_edge_.data() + offset_[v], adj_edge_.data() + offset_[v + 1]};
    }
    int degree(int v) const { return offset_[v + 1] - offset_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_loops_or_parallels() const;

private:
    int n_ = 0;
    bool multi_ = false;
    std::vector<Edge> edges_;
    std::vector<int> offset_{0};
    std::vector<int> adj_;
    std::vector<int> adj_edge_;
};

}  // namespace mapforge
