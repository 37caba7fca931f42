#include <algorithm>

#include "mapforge/connectivity.hpp"
#include "mapforge/decomposition.hpp"
#include "mapforge/distances.hpp"

namespace mapforge {

namespace {

std::string pair_text(const char* a, long long x, const char* b, long long y) {
    return std::string(a) + "=" + std::to_string(x) + " " + b + "=" + std::to_string(y);
}

}  // namespace

std::vector<InequalityResult> validate_decomposition_inequalities(const RotationMap& m) {
    std::vector<InequalityResult> out;
    if (m.num_edges() == 0) return out;
    const int dm = diameter_exact(m);

    // Core and pieces.
    {
        const auto d = two_connected_core(m);
        const int dc = diameter_exact(d.core);
        int piece_max = 0;
        for (const auto& p : d.pieces)
            if (p.num_edges() > 0) piece_max = std::max(piece_max, diameter_exact(p));
        InequalityResult r{"core-bound", dc <= dm && dm <= dc + 2 * piece_max, ""};
        if (!r.ok) r.detail = pair_text("D(C)", dc, "D(M)", dm) + " maxD(piece)=" + std::to_string(piece_max);
        out.push_back(r);

        if (d.core.num_edges() >= 2) {
            const long long chi = chi_map(d.core);
            // Pole distance in the core without its root edge.
            std::vector<char> keep(d.core.num_half_edges(), 1);
            keep[0] = keep[1] = 0;
            std::vector<Edge> edges;
            for (int h = 2; h < d.core.num_half_edges(); h += 2)
                edges.emplace_back(d.core.vertex_of(h), d.core.vertex_of(h + 1));
            const SimpleGraph net(d.core.num_vertices(), std::move(edges), true);
            const int pole = bfs_distances(net, d.core.vertex_of(0))[d.core.vertex_of(1)];
            InequalityResult c{"chi-dominates-pole-distance", chi >= pole, ""};
            if (!c.ok) c.detail = pair_text("chi", chi, "dist", pole);
            out.push_back(c);
        }
    }

    const SimpleGraph g = SimpleGraph::from_map(m, false);
    if (g.num_vertices() < 2) return out;
    const int dg = diameter_exact(g);
    const BvTree bv = block_decomposition(g);
    int block_max = 0;
    std::vector<SimpleGraph> blocks;
    for (const auto& edges : bv.block_edges) {
        blocks.push_back(edge_induced_subgraph(g, edges));
        block_max = std::max(block_max, diameter_exact(blocks.back()));
    }
    const int dtau = diameter_exact(bv.tree);
    InequalityResult r6{"block-bound", block_max <= dg && dg <= block_max * dtau, ""};
    if (!r6.ok) r6.detail = pair_text("maxD(B)", block_max, "D(G)", dg) + " D(tree)=" + std::to_string(dtau);
    out.push_back(r6);

    InequalityResult r7{"brick-bound", true, ""};
    InequalityResult r5{"t-brick-bound", true, ""};
    for (const auto& b : blocks) {
        if (b.num_edges() < 3) continue;
        const RmtTree t = rmt_decomposition(b);
        const int db = diameter_exact(b);
        int brick_max = 0;
        for (const auto& brick : t.bricks) {
            const int d = diameter_exact(brick_graph(brick));
            brick_max = std::max(brick_max, d);
            if (brick.kind == BrickKind::T && d > db && r5.ok) {
                r5.ok = false;
                r5.detail = pair_text("D(T)", d, "D(block)", db);
            }
        }
        const int drmt = diameter_exact(t.tree());
        const int vmax = std::max(1, virtual_edge_stats(b, t).max_distance);
        const long long upper = static_cast<long long>(brick_max) * (drmt + 1) * vmax;
        if ((brick_max > db || db > upper) && r7.ok) {
            r7.ok = false;
            r7.detail = pair_text("maxD(brick)", brick_max, "D(block)", db) + " D(tree)=" + std::to_string(drmt) +
                        " maxDist=" + std::to_string(vmax);
        }
    }
    out.push_back(r7);
    out.push_back(r5);
    return out;
}

}  // namespace mapforge
