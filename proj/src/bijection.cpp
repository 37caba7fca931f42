#include "mapforge/bijection.hpp"

#include <algorithm>
#include <sstream>

#include "mapforge/distances.hpp"
#include "mapforge/error.hpp"
#include "mapforge/io.hpp"

namespace mapforge {

namespace {

// Half-edge layout of the closure before tree edges are removed:
// tree edge to child v uses 2(v-1) (at the parent) and 2(v-1)+1 (at v);
// the arc from corner i uses A(i) = 2n+2i (at the corner) and A(i)+1.
struct ClosureBuilder {
    const LabelledTree& t;
    int n;
    std::vector<int> corner_half;   // contour half-edge c_i
    std::vector<int> corner_vertex;
    std::vector<int> succ;          // successor corner, -1 for the pointed vertex

    explicit ClosureBuilder(const LabelledTree& tree) : t(tree), n(tree.num_edges()) {}

    int arc(int i) const { return 2 * n + 2 * i; }

    std::vector<int> tree_rotation() const {
        const auto& s = t.shape;
        std::vector<int> sigma(2 * n);
        for (int v = 0; v <= n; ++v) {
            std::vector<int> around;
            if (v > 0) around.push_back(2 * (v - 1) + 1);
            for (int c : s.children(v)) around.push_back(2 * (c - 1));
            for (std::size_t k = 0; k < around.size(); ++k) sigma[around[k]] = around[(k + 1) % around.size()];
        }
        return sigma;
    }

    void contour(const std::vector<int>& sigma) {
        corner_half.resize(2 * n);
        corner_vertex.resize(2 * n);
        int h = 0;
        for (int i = 0; i < 2 * n; ++i) {
            corner_half[i] = h;
            corner_vertex[i] = (h % 2 == 0) ? t.shape.parent(h / 2 + 1) : h / 2 + 1;
            h = sigma[h ^ 1];
        }
    }

    void successors(int min_label) {
        // Scan twice around the contour with a stack per label.
        const int m = 2 * n;
        succ.assign(m, -1);
        std::vector<int> lab(m);
        for (int i = 0; i < m; ++i) lab[i] = t.labels[corner_vertex[i]];
        // next_with[l] = nearest later corner with label l, filled right to left.
        std::vector<int> next_with(n + 3, -1);
        const int offset = -min_label + 1;
        for (int pass = 0; pass < 2; ++pass) {
            for (int i = m - 1; i >= 0; --i) {
                if (lab[i] > min_label && pass == 1) succ[i] = next_with[lab[i] - 1 + offset];
                next_with[lab[i] + offset] = i;
            }
        }
    }
};

}  // namespace

Closure cvs_closure(const LabelledTree& t, int orientation) {
    const int n = t.num_edges();
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "closure needs at least one edge");
    ClosureBuilder b(t);
    const auto tree_sigma = b.tree_rotation();
    b.contour(tree_sigma);
    const int min_label = label_extremes(t).min;
    b.successors(min_label);

    const int m = 2 * n;
    const int total = 6 * n;
    // incoming[i]: corners whose arc ends at corner i.
    std::vector<std::vector<int>> incoming(m);
    std::vector<int> to_pointed;
    for (int i = 0; i < m; ++i) {
        if (b.succ[i] >= 0) incoming[b.succ[i]].push_back(i);
        else to_pointed.push_back(i);
    }
    auto span_to = [m](int from, int to) { return ((to - from) % m + m) % m; };

    std::vector<int> sigma(total, -1);
    // Around each tree vertex: the wedge preceding c_i gets incoming arcs by
    // increasing span, then the outgoing arc, then c_i itself.
    std::vector<int> prev_in_rotation(m);
    for (int h = 0; h < m; ++h) prev_in_rotation[tree_sigma[h]] = h;
    for (int i = 0; i < m; ++i) {
        auto& in = incoming[i];
        std::sort(in.begin(), in.end(), [&](int a, int c) { return span_to(a, i) < span_to(c, i); });
        std::vector<int> seq;
        for (int j : in) seq.push_back(b.arc(j) + 1);
        seq.push_back(b.arc(i));
        const int c = b.corner_half[i];
        int prev = prev_in_rotation[c];
        for (int h : seq) {
            sigma[prev] = h;
            prev = h;
        }
        sigma[prev] = c;
    }
    // Around the pointed vertex: arcs in decreasing corner order.
    for (std::size_t k = 0; k < to_pointed.size(); ++k) {
        const int a = b.arc(to_pointed[k]) + 1;
        const int next = b.arc(to_pointed[(k + to_pointed.size() - 1) % to_pointed.size()]) + 1;
        sigma[a] = next;
    }
    // Drop the tree half-edges: follow sigma until an arc half-edge appears.
    std::vector<int> q_sigma(4 * n);
    for (int h = m; h < total; ++h) {
        int g = sigma[h];
        while (g < m) g = sigma[g];
        q_sigma[h - m] = g - m;
    }
    RotationMap qm = RotationMap::build(std::move(q_sigma), orientation ? 1 : 0);
    // Arc i keeps id 2i (or its mate when the root is flipped); vertices of
    // the original tree are reached through their outgoing arcs.
    auto new_id = [orientation](int h) { return orientation && h < 2 ? (h ^ 1) : h; };
    Closure out;
    out.orientation = orientation;
    out.tree_to_quad.assign(n + 1, -1);
    for (int i = 0; i < m; ++i) out.tree_to_quad[b.corner_vertex[i]] = qm.vertex_of(new_id(2 * i));
    const int pointed = qm.vertex_of(new_id(2 * to_pointed.front() + 1));
    out.quad = Quadrangulation::from_map(std::move(qm), pointed);
    out.pointed_color = out.quad.colors[pointed];
    return out;
}

RotationMap quad_to_map(const Quadrangulation& q) {
    const RotationMap& m = q.map;
    const int nh = m.num_half_edges();
    std::vector<int> id(nh, -1);
    int next = 0;
    for (int h = 0; h < nh; ++h) {
        if (q.colors[m.vertex_of(h)] != Color::Black || id[h] >= 0) continue;
        const int opposite = m.phi(m.phi(h));
        id[h] = next++;
        id[opposite] = next++;
    }
    std::vector<int> sigma(next);
    for (int h = 0; h < nh; ++h)
        if (id[h] >= 0) sigma[id[h]] = id[m.sigma(h)];
    return RotationMap::build(std::move(sigma), 0);
}

Quadrangulation map_to_quad(const RotationMap& m) {
    const int nh = m.num_half_edges();
    if (nh == 0) throw Error(ErrorCode::InvalidArgument, "map has no edges");
    std::vector<int> sigma(2 * nh);
    for (int c = 0; c < nh; ++c) {
        sigma[2 * c] = 2 * m.sigma(c);
        sigma[2 * c + 1] = 2 * (m.sigma_inv(c) ^ 1) + 1;
    }
    return Quadrangulation::from_map(RotationMap::build(std::move(sigma), 2 * m.sigma(0)));
}

PipelineSample run_pipeline(const LabelledTree& t, int orientation) {
    Closure c = cvs_closure(t, orientation);
    RotationMap m = quad_to_map(c.quad);
    return {t, std::move(c), std::move(m)};
}

std::vector<InequalityCheck> validate_distance_inequalities(const PipelineSample& s) {
    std::vector<InequalityCheck> out;
    const auto& q = s.closure.quad;
    const int span = label_span(s.tree);
    const int lmin = label_extremes(s.tree).min;

    InequalityCheck ident{"distance-identity", true, ""};
    const auto dist = bfs_distances(q.map, q.pointed);
    for (int v = 0; v < s.tree.shape.num_vertices(); ++v) {
        const int expect = s.tree.labels[v] - lmin + 1;
        const int got = dist[s.closure.tree_to_quad[v]];
        if (got != expect) {
            ident.ok = false;
            ident.detail = "tree vertex " + std::to_string(v) + ": distance " + std::to_string(got) +
                           " expected " + std::to_string(expect);
            break;
        }
    }
    out.push_back(ident);

    const int dq = diameter_exact(q.map);
    InequalityCheck radius{"label-span-vs-quad-diameter", span + 1 <= dq && dq <= 2 * span + 2, ""};
    if (!radius.ok)
        radius.detail = "L=" + std::to_string(span) + " D(Q)=" + std::to_string(dq);
    out.push_back(radius);

    const int dm = diameter_exact(s.map);
    const int delta = max_face_degree(s.map);
    InequalityCheck eq3{"quad-vs-map-diameter", dq <= 2 * dm && dm <= dq * delta, ""};
    if (!eq3.ok)
        eq3.detail = "D(Q)=" + std::to_string(dq) + " D(M)=" + std::to_string(dm) + " maxdeg=" + std::to_string(delta);
    out.push_back(eq3);

    for (auto& c : out)
        if (!c.ok) c.detail += " tree=" + tree_to_text(s.tree) + " map=" + map_to_json(s.map);
    return out;
}

}  // namespace mapforge
