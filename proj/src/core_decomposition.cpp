#include <algorithm>

#include "mapforge/connectivity.hpp"
#include "mapforge/decomposition.hpp"
#include "mapforge/error.hpp"

namespace mapforge {

namespace {

// Edges of the block of the map's multigraph that contains edge 0.
std::vector<char> root_block_mask(const RotationMap& m) {
    const SimpleGraph g = SimpleGraph::from_map(m, true);
    std::vector<char> keep(m.num_half_edges(), 0);
    for (const auto& block : biconnected_edge_components(g)) {
        if (std::find(block.begin(), block.end(), 0) == block.end()) continue;
        for (int e : block) keep[2 * e] = keep[2 * e + 1] = 1;
        break;
    }
    return keep;
}

}  // namespace

bool is_two_connected_map(const RotationMap& m) {
    if (m.num_edges() == 0) return false;
    if (m.num_edges() == 1) return true;
    const auto keep = root_block_mask(m);
    if (!std::all_of(keep.begin(), keep.end(), [](char c) { return c != 0; })) return false;
    for (int h = 0; h < m.num_half_edges(); h += 2)
        if (m.is_loop(h)) return false;
    return true;
}

CoreDecomposition two_connected_core(const RotationMap& m) {
    if (m.num_edges() == 0) throw Error(ErrorCode::InvalidArgument, "core of the vertex map is undefined");
    const auto keep = root_block_mask(m);
    CoreDecomposition d;
    std::vector<int> old_to_new;
    d.core = m.submap(keep, 0, &old_to_new);
    d.core_to_original.assign(d.core.num_half_edges(), -1);
    for (int h = 0; h < m.num_half_edges(); ++h)
        if (old_to_new[h] >= 0) d.core_to_original[old_to_new[h]] = h;

    std::vector<char> core_vertex(m.num_vertices(), 0);
    for (int h = 0; h < m.num_half_edges(); ++h)
        if (keep[h]) core_vertex[m.vertex_of(h)] = 1;

    d.pieces.resize(d.core.num_half_edges());
    for (int g = 0; g < d.core.num_half_edges(); ++g) {
        const int orig = d.core_to_original[g];
        // Non-core half-edges of the wedge, in rotation order, ending at orig.
        int start = m.sigma_inv(orig);
        while (!keep[start]) start = m.sigma_inv(start);
        std::vector<char> in_piece(m.num_half_edges(), 0);
        std::vector<int> stack;
        for (int h = m.sigma(start); h != orig; h = m.sigma(h)) {
            in_piece[h] = 1;
            stack.push_back(h);
        }
        if (stack.empty()) continue;  // vertex map
        const int root = stack.front();
        while (!stack.empty()) {
            const int h = stack.back();
            stack.pop_back();
            const int mate = h ^ 1;
            if (in_piece[mate]) continue;
            in_piece[mate] = 1;
            if (core_vertex[m.vertex_of(mate)]) continue;  // a loop back to the core vertex
            for (int x = m.sigma(mate); x != mate; x = m.sigma(x))
                if (!in_piece[x]) {
                    in_piece[x] = 1;
                    stack.push_back(x);
                }
        }
        d.pieces[g] = m.submap(in_piece, root);
    }
    return d;
}

RotationMap reassemble(const CoreDecomposition& d) {
    const RotationMap& c = d.core;
    std::vector<int> sigma(c.sigma_array().begin(), c.sigma_array().end());
    // Wedges are disjoint, so the predecessor of each core half-edge stays valid.
    std::vector<int> inv(sigma.size());
    for (std::size_t h = 0; h < sigma.size(); ++h) inv[sigma[h]] = static_cast<int>(h);
    for (int g = 0; g < c.num_half_edges(); ++g) {
        const RotationMap& p = d.pieces[g];
        if (p.num_edges() == 0) continue;
        const int offset = static_cast<int>(sigma.size());
        sigma.resize(offset + p.num_half_edges());
        for (int h = 0; h < p.num_half_edges(); ++h)
            if (p.vertex_of(h) != p.root_vertex()) sigma[offset + h] = offset + p.sigma(h);
        // Root-vertex rotation of the piece goes into the wedge before g.
        int prev = inv[g];
        int h = 0;
        do {
            sigma[prev] = offset + h;
            prev = offset + h;
            h = p.sigma(h);
        } while (h != 0);
        sigma[prev] = g;
    }
    return RotationMap::build(std::move(sigma), 0);
}

BvTree block_decomposition(const SimpleGraph& g) {
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "block decomposition needs a connected graph");
    BvTree t;
    t.num_vertices = g.num_vertices();
    t.block_edges = biconnected_edge_components(g);
    std::vector<Edge> tree_edges;
    for (int b = 0; b < t.num_blocks(); ++b) {
        std::vector<int> verts;
        for (int e : t.block_edges[b]) {
            verts.push_back(g.edges()[e].first);
            verts.push_back(g.edges()[e].second);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (int v : verts) tree_edges.emplace_back(v, t.num_vertices + b);
        t.block_vertices.push_back(std::move(verts));
    }
    t.tree = SimpleGraph(t.num_vertices + t.num_blocks(), std::move(tree_edges), false);
    return t;
}

}  // namespace mapforge
