#include "mapforge/connectivity.hpp"

#include <algorithm>

namespace mapforge {

namespace {

// Iterative Tarjan lowpoint DFS over edge ids. Calls on_block with the edge
// ids of every nonloop block and marks articulation points.
template <class OnBlock>
void tarjan(const SimpleGraph& g, std::vector<char>& is_cut, OnBlock&& on_block) {
    const int n = g.num_vertices();
    std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1), iter(n, 0);
    std::vector<int> edge_stack, stack;
    std::vector<char> edge_used(g.num_edges(), 0);
    is_cut.assign(n, 0);
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        disc[root] = low[root] = timer++;
        stack.push_back(root);
        int root_children = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            const auto nb = g.neighbors(v);
            const auto ids = g.incident_edges(v);
            if (iter[v] < static_cast<int>(nb.size())) {
                const int w = nb[iter[v]];
                const int e = ids[iter[v]];
                ++iter[v];
                if (e == parent_edge[v] || w == v || edge_used[e]) continue;
                edge_used[e] = 1;
                edge_stack.push_back(e);
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    parent_edge[w] = e;
                    stack.push_back(w);
                    if (v == root) ++root_children;
                } else {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                const int p = stack.back();
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    if (p != root) is_cut[p] = 1;
                    std::vector<int> block;
                    while (true) {
                        const int e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == parent_edge[v]) break;
                    }
                    on_block(std::move(block));
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }
}

}  // namespace

std::vector<std::vector<int>> biconnected_edge_components(const SimpleGraph& g) {
    std::vector<std::vector<int>> blocks;
    std::vector<char> cut;
    tarjan(g, cut, [&](std::vector<int> b) {
        std::sort(b.begin(), b.end());
        blocks.push_back(std::move(b));
    });
    for (int e = 0; e < g.num_edges(); ++e)
        if (g.edges()[e].first == g.edges()[e].second) blocks.push_back({e});
    return blocks;
}

std::vector<int> articulation_points(const SimpleGraph& g) {
    std::vector<char> cut;
    tarjan(g, cut, [](std::vector<int>) {});
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

bool is_connected(const SimpleGraph& g) {
    const int n = g.num_vertices();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

bool is_two_connected(const SimpleGraph& g) {
    if (g.num_vertices() == 1) return g.num_edges() == 1;  // the single loop
    if (g.num_vertices() < 2 || !is_connected(g)) return false;
    for (const auto& [u, v] : g.edges())
        if (u == v) return false;
    return articulation_points(g).empty();
}

SimpleGraph edge_induced_subgraph(const SimpleGraph& g, const std::vector<int>& edge_ids,
                                  std::vector<int>* vertex_map) {
    std::vector<int> local(g.num_vertices(), -1), back;
    std::vector<Edge> edges;
    edges.reserve(edge_ids.size());
    auto id = [&](int v) {
        if (local[v] < 0) {
            local[v] = static_cast<int>(back.size());
            back.push_back(v);
        }
        return local[v];
    };
    for (int e : edge_ids) {
        const auto [u, v] = g.edges()[e];
        const int a = id(u);
        const int b = id(v);
        edges.emplace_back(a, b);
    }
    if (vertex_map) *vertex_map = back;
    return SimpleGraph(static_cast<int>(back.size()), std::move(edges), true);
}

}  // namespace mapforge
