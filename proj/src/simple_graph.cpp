#include "mapforge/simple_graph.hpp"

#include <algorithm>
#include <set>

#include "mapforge/error.hpp"
#include "mapforge/rotation_map.hpp"

namespace mapforge {

SimpleGraph::SimpleGraph(int n_vertices, std::vector<Edge> edges, bool multigraph)
    : n_(n_vertices), multi_(multigraph), edges_(std::move(edges)) {
    if (n_ < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    std::vector<int> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
        ++deg[u];
        ++deg[v];
    }
    if (!multi_ && has_loops_or_parallels())
        throw Error(ErrorCode::InvalidArgument, "loop or parallel edge in simple graph");
    offset_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + deg[v];
    adj_.resize(offset_[n_]);
    adj_edge_.resize(offset_[n_]);
    std::vector<int> fill(offset_.begin(), offset_.end() - 1);
    for (int e = 0; e < num_edges(); ++e) {
        const auto [u, v] = edges_[e];
        adj_[fill[u]] = v;
        adj_edge_[fill[u]++] = e;
        adj_[fill[v]] = u;
        adj_edge_[fill[v]++] = e;
    }
}

bool SimpleGraph::has_loops_or_parallels() const {
    std::set<Edge> seen;
    for (auto [u, v] : edges_) {
        if (u == v) return true;
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) return true;
    }
    return false;
}

SimpleGraph SimpleGraph::from_map(const RotationMap& m, bool multigraph) {
    std::vector<Edge> edges;
    edges.reserve(m.num_edges());
    for (int h = 0; h < m.num_half_edges(); h += 2) {
        int u = m.vertex_of(h), v = m.vertex_of(h + 1);
        if (!multigraph) {
            if (u == v) continue;
            if (u > v) std::swap(u, v);
        }
        edges.emplace_back(u, v);
    }
    if (!multigraph) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    return SimpleGraph(m.num_vertices(), std::move(edges), multigraph);
}

}  // namespace mapforge
