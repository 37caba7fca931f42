#include <algorithm>
#include <functional>

#include "mapforge/decomposition.hpp"
#include "mapforge/error.hpp"

namespace mapforge {

namespace {

int brick_with_real_edge(const RmtTree& t, int e) {
    for (int b = 0; b < t.num_bricks(); ++b)
        for (const auto& x : t.bricks[b].edges)
            if (x.id == e) return b;
    throw Error(ErrorCode::InvalidRoot, "root edge " + std::to_string(e) + " not found");
}

int index_in_brick(const Brick& b, int id) {
    for (int j = 0; j < static_cast<int>(b.edges.size()); ++j)
        if (b.edges[j].id == id) return j;
    throw Error(ErrorCode::InvalidArgument, "edge missing from brick");
}

// Edge indices of a shortest path between the ends of edge `skip`, avoiding it.
std::vector<int> shortest_pole_path(const Brick& b, int skip) {
    std::vector<int> vmap;
    const SimpleGraph g = brick_graph(b, &vmap);
    auto local = [&](int x) { return static_cast<int>(std::find(vmap.begin(), vmap.end(), x) - vmap.begin()); };
    const int s = local(b.edges[skip].u), t = local(b.edges[skip].v);
    std::vector<int> via(g.num_vertices(), -2), queue{s};
    via[s] = -1;
    for (std::size_t i = 0; i < queue.size() && via[t] == -2; ++i) {
        const int x = queue[i];
        const auto nb = g.neighbors(x);
        const auto ids = g.incident_edges(x);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            if (ids[k] == skip || via[nb[k]] != -2) continue;
            via[nb[k]] = ids[k];
            queue.push_back(nb[k]);
        }
    }
    std::vector<int> path;
    for (int x = t; x != s;) {
        const int e = via[x];
        path.push_back(e);
        const auto [a, c] = g.edges()[e];
        x = (a == x) ? c : a;
    }
    return path;
}

using FaceRule = std::function<std::vector<int>(int brick, int entry)>;

long long chi_from(const RmtTree& t, int brick, int entry, const FaceRule& t_rule) {
    const Brick& b = t.bricks[brick];
    std::vector<int> used;
    if (b.kind == BrickKind::T) {
        used = t_rule(brick, entry);
    } else {
        for (int j = 0; j < static_cast<int>(b.edges.size()); ++j)
            if (j != entry) used.push_back(j);
    }
    long long total = 0;
    for (int j : used) {
        const auto& e = b.edges[j];
        if (!e.is_virtual()) {
            total += 1;
            continue;
        }
        const auto [x, y] = t.virtual_bricks[e.virtual_index()];
        const int other = x == brick ? y : x;
        total += chi_from(t, other, index_in_brick(t.bricks[other], e.id), t_rule);
    }
    return total;
}

}  // namespace

long long chi_network(const RmtTree& t, int root_edge) {
    const int b = brick_with_real_edge(t, root_edge);
    FaceRule rule = [&](int brick, int entry) { return shortest_pole_path(t.bricks[brick], entry); };
    return chi_from(t, b, index_in_brick(t.bricks[b], root_edge), rule);
}

long long chi_map(const RotationMap& core) {
    if (core.num_edges() < 2) throw Error(ErrorCode::InvalidRoot, "network of a single edge has no edges");
    if (core.num_edges() == 2) return 1;
    const SimpleGraph g = SimpleGraph::from_map(core, true);
    const RmtTree t = rmt_decomposition(g);
    const SimpleGraph tree = t.tree();
    const int nb = t.num_bricks();

    // Rotation of a T-brick induced by the map: every brick edge owns a
    // contiguous run of half-edges around each of its ends.
    auto face_rule = [&](int brick, int entry) {
        const Brick& b = t.bricks[brick];
        std::vector<int> owner(g.num_edges(), -1);
        for (int j = 0; j < static_cast<int>(b.edges.size()); ++j) {
            const auto& e = b.edges[j];
            if (!e.is_virtual()) {
                owner[e.id] = j;
                continue;
            }
            const auto [x, y] = t.virtual_bricks[e.virtual_index()];
            const int start = x == brick ? y : x;
            std::vector<int> stack{start};
            std::vector<char> seen(tree.num_vertices(), 0);
            seen[brick] = seen[start] = 1;
            while (!stack.empty()) {
                const int node = stack.back();
                stack.pop_back();
                if (node >= nb) {
                    owner[node - nb] = j;
                    continue;
                }
                for (int w : tree.neighbors(node))
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        std::vector<int> sigma(2 * b.edges.size(), -1);
        std::vector<int> verts;
        for (const auto& e : b.edges) {
            verts.push_back(e.u);
            verts.push_back(e.v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (int x : verts) {
            const int rep = core.vertex_representatives()[x];
            std::vector<int> seq;
            int h = rep;
            do {
                const int j = owner[h / 2];
                const int half = b.edges[j].u == x ? 2 * j : 2 * j + 1;
                if (seq.empty() || seq.back() != half) seq.push_back(half);
                h = core.sigma(h);
            } while (h != rep);
            if (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back();
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (sigma[seq[i]] != -1) throw Error(ErrorCode::InvalidArgument, "brick edge run is not contiguous");
                sigma[seq[i]] = seq[(i + 1) % seq.size()];
            }
        }
        const RotationMap bm = RotationMap::build(sigma, 0);
        const auto& e = b.edges[entry];
        int tail;
        if (e.is_virtual()) tail = std::min(e.u, e.v);
        else tail = core.vertex_of(2 * e.id);
        const int start = e.u == tail ? 2 * entry : 2 * entry + 1;
        std::vector<int> used;
        for (int h = bm.phi(start); h != start; h = bm.phi(h))
            if (h / 2 != entry) used.push_back(h / 2);
        return used;
    };
    const int b = brick_with_real_edge(t, 0);
    return chi_from(t, b, index_in_brick(t.bricks[b], 0), face_rule);
}

}  // namespace mapforge
