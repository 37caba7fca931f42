#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "mapforge/connectivity.hpp"
#include "mapforge/decomposition.hpp"
#include "mapforge/distances.hpp"
#include "mapforge/error.hpp"

namespace mapforge {

char to_char(BrickKind k) {
    switch (k) {
        case BrickKind::R: return 'R';
        case BrickKind::M: return 'M';
        case BrickKind::T: return 'T';
    }
    return '?';
}

namespace {

struct Piece {
    std::vector<BrickEdge> edges;
    std::vector<int> clean;  // sorted vertices known to lie in no separation pair
};

// Local view of a piece: dense vertex ids and CSR adjacency.
struct LocalGraph {
    std::vector<int> verts;  // local -> global
    std::vector<int> offset, adj, adj_edge;

    LocalGraph(const Piece& p, std::vector<int>& local_of) {
        for (const auto& e : p.edges) {
            for (int x : {e.u, e.v})
                if (local_of[x] < 0) {
                    local_of[x] = static_cast<int>(verts.size());
                    verts.push_back(x);
                }
        }
        const int n = static_cast<int>(verts.size());
        offset.assign(n + 1, 0);
        for (const auto& e : p.edges) {
            ++offset[local_of[e.u] + 1];
            ++offset[local_of[e.v] + 1];
        }
        for (int v = 0; v < n; ++v) offset[v + 1] += offset[v];
        adj.resize(offset[n]);
        adj_edge.resize(offset[n]);
        std::vector<int> fill(offset.begin(), offset.end() - 1);
        for (int i = 0; i < static_cast<int>(p.edges.size()); ++i) {
            const int a = local_of[p.edges[i].u], b = local_of[p.edges[i].v];
            adj[fill[a]] = b;
            adj_edge[fill[a]++] = i;
            adj[fill[b]] = a;
            adj_edge[fill[b]++] = i;
        }
    }
    int size() const { return static_cast<int>(verts.size()); }
};

// Articulation points of the local graph with vertex `removed` deleted.
std::vector<int> cut_vertices_without(const LocalGraph& g, int removed) {
    const int n = g.size();
    std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1), iter(n, 0), stack;
    std::vector<char> cut(n, 0);
    int timer = 0;
    const int root = removed == 0 ? 1 : 0;
    disc[root] = low[root] = timer++;
    stack.push_back(root);
    int root_children = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        if (iter[v] < g.offset[v + 1] - g.offset[v]) {
            const int k = g.offset[v] + iter[v]++;
            const int w = g.adj[k];
            const int e = g.adj_edge[k];
            if (w == removed || e == parent_edge[v]) continue;
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
            if (p != root && low[v] >= disc[p]) cut[p] = 1;
        }
    }
    if (root_children > 1) cut[root] = 1;
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

BrickKind classify(const std::vector<BrickEdge>& edges) {
    std::map<int, int> deg;
    for (const auto& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    if (deg.size() == 2) return BrickKind::M;
    const bool cycle = deg.size() == edges.size() &&
                       std::all_of(deg.begin(), deg.end(), [](const auto& kv) { return kv.second == 2; });
    return cycle ? BrickKind::R : BrickKind::T;
}

class Splitter {
public:
    Splitter(int n_vertices, RmtOptions opt) : local_of_(n_vertices, -1), rng_(opt.order_seed), shuffle_(opt.order_seed != 0) {}

    std::vector<Piece> run(Piece start) {
        std::vector<Piece> work{std::move(start)}, done;
        while (!work.empty()) {
            Piece p = std::move(work.back());
            work.pop_back();
            auto parts = split_once(p);
            if (parts.empty()) done.push_back(std::move(p));
            else
                for (auto& q : parts) work.push_back(std::move(q));
        }
        return done;
    }

    std::vector<Edge> virtual_pairs;

private:
    int new_virtual(int u, int v) {
        virtual_pairs.emplace_back(u, v);
        return -static_cast<int>(virtual_pairs.size());
    }

    std::vector<Piece> split_once(Piece& p) {
        LocalGraph g(p, local_of_);
        struct Reset {
            LocalGraph& g;
            std::vector<int>& l;
            ~Reset() {
                for (int v : g.verts) l[v] = -1;
            }
        } reset{g, local_of_};
        const int n = g.size();
        if (n <= 2) return {};

        // Parallel edges between two vertices of a piece with >= 3 vertices.
        std::vector<std::pair<Edge, int>> pairs;
        for (int i = 0; i < static_cast<int>(p.edges.size()); ++i) {
            int a = local_of_[p.edges[i].u], b = local_of_[p.edges[i].v];
            if (a > b) std::swap(a, b);
            pairs.push_back({{a, b}, i});
        }
        std::sort(pairs.begin(), pairs.end());
        std::vector<Edge> multi;
        for (std::size_t i = 1; i < pairs.size(); ++i)
            if (pairs[i].first == pairs[i - 1].first && (multi.empty() || multi.back() != pairs[i].first))
                multi.push_back(pairs[i].first);
        if (!multi.empty()) {
            const Edge e = shuffle_ ? multi[rng_() % multi.size()] : multi.front();
            return split_at(p, g, e.first, e.second);
        }

        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        if (shuffle_) std::shuffle(order.begin(), order.end(), rng_);
        for (int u : order) {
            const int gu = g.verts[u];
            if (std::binary_search(p.clean.begin(), p.clean.end(), gu)) continue;
            auto cuts = cut_vertices_without(g, u);
            if (cuts.empty()) {
                p.clean.insert(std::upper_bound(p.clean.begin(), p.clean.end(), gu), gu);
                continue;
            }
            const int v = shuffle_ ? cuts[rng_() % cuts.size()] : cuts.front();
            return split_at(p, g, u, v);
        }
        return {};
    }

    std::vector<Piece> split_at(const Piece& p, const LocalGraph& g, int u, int v) {
        const int n = g.size();
        std::vector<int> comp(n, -1);
        int k = 0;
        for (int s = 0; s < n; ++s) {
            if (s == u || s == v || comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = k;
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                for (int i = g.offset[x]; i < g.offset[x + 1]; ++i) {
                    const int y = g.adj[i];
                    if (y != u && y != v && comp[y] < 0) {
                        comp[y] = k;
                        stack.push_back(y);
                    }
                }
            }
            ++k;
        }
        std::vector<std::vector<BrickEdge>> classes(k);
        std::vector<BrickEdge> direct;
        for (const auto& e : p.edges) {
            const int a = local_of_[e.u], b = local_of_[e.v];
            const int c = (a != u && a != v) ? comp[a] : (b != u && b != v) ? comp[b] : -1;
            if (c < 0) direct.push_back(e);
            else classes[c].push_back(e);
        }
        const int gu = g.verts[u], gv = g.verts[v];
        std::vector<Piece> out;
        auto sub_clean = [&](const std::vector<BrickEdge>& edges) {
            std::vector<int> vs;
            for (const auto& e : edges) {
                vs.push_back(e.u);
                vs.push_back(e.v);
            }
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            std::vector<int> c;
            std::set_intersection(vs.begin(), vs.end(), p.clean.begin(), p.clean.end(), std::back_inserter(c));
            return c;
        };
        if (k == 2 && direct.empty()) {
            const int id = new_virtual(gu, gv);
            for (auto& cls : classes) {
                cls.push_back({gu, gv, id});
                Piece q{std::move(cls), {}};
                q.clean = sub_clean(q.edges);
                out.push_back(std::move(q));
            }
            return out;
        }
        Piece bond{std::move(direct), {}};
        for (auto& cls : classes) {
            const int id = new_virtual(gu, gv);
            cls.push_back({gu, gv, id});
            bond.edges.push_back({gu, gv, id});
            Piece q{std::move(cls), {}};
            q.clean = sub_clean(q.edges);
            out.push_back(std::move(q));
        }
        out.push_back(std::move(bond));
        return out;
    }

    std::vector<int> local_of_;
    std::mt19937_64 rng_;
    bool shuffle_;
};

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

RmtTree rmt_decomposition(const SimpleGraph& g, RmtOptions options) {
    if (g.num_edges() < 3) throw Error(ErrorCode::TooFewEdges, "split decomposition needs at least 3 edges");
    if (!is_two_connected(g)) throw Error(ErrorCode::NotTwoConnected, "split decomposition needs a 2-connected graph");
    Piece start;
    for (int e = 0; e < g.num_edges(); ++e) start.edges.push_back({g.edges()[e].first, g.edges()[e].second, e});
    Splitter splitter(g.num_vertices(), options);
    std::vector<Piece> pieces = splitter.run(std::move(start));
    const int nv = static_cast<int>(splitter.virtual_pairs.size());

    // Merge bonds with bonds and polygons with polygons across virtual edges.
    const int np = static_cast<int>(pieces.size());
    std::vector<BrickKind> kind(np);
    for (int i = 0; i < np; ++i) kind[i] = classify(pieces[i].edges);
    std::vector<Edge> holders(nv, {-1, -1});
    for (int i = 0; i < np; ++i)
        for (const auto& e : pieces[i].edges)
            if (e.is_virtual()) {
                auto& h = holders[e.virtual_index()];
                (h.first < 0 ? h.first : h.second) = i;
            }
    std::vector<int> parent(np);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> removed(nv, 0);
    for (int k = 0; k < nv; ++k) {
        const auto [a, b] = holders[k];
        if (kind[a] == kind[b] && kind[a] != BrickKind::T) {
            removed[k] = 1;
            parent[find_root(parent, a)] = find_root(parent, b);
        }
    }
    std::vector<int> brick_of(np, -1), new_virtual(nv, -1);
    RmtTree t;
    t.num_vertices = g.num_vertices();
    t.num_real_edges = g.num_edges();
    for (int k = 0; k < nv; ++k)
        if (!removed[k]) {
            new_virtual[k] = static_cast<int>(t.virtual_pairs.size());
            t.virtual_pairs.push_back(splitter.virtual_pairs[k]);
        }
    for (int i = 0; i < np; ++i) {
        const int r = find_root(parent, i);
        if (brick_of[r] < 0) {
            brick_of[r] = static_cast<int>(t.bricks.size());
            t.bricks.push_back({kind[r], {}});
        }
        brick_of[i] = brick_of[r];
        auto& dst = t.bricks[brick_of[i]].edges;
        for (auto e : pieces[i].edges) {
            if (e.is_virtual()) {
                if (removed[e.virtual_index()]) continue;
                e.id = -(new_virtual[e.virtual_index()] + 1);
            }
            dst.push_back(e);
        }
    }
    t.virtual_bricks.assign(t.virtual_pairs.size(), {-1, -1});
    for (int b = 0; b < t.num_bricks(); ++b) {
        auto& edges = t.bricks[b].edges;
        std::sort(edges.begin(), edges.end(), [](const BrickEdge& x, const BrickEdge& y) { return x.id < y.id; });
        for (const auto& e : edges)
            if (e.is_virtual()) {
                auto& h = t.virtual_bricks[e.virtual_index()];
                (h.first < 0 ? h.first : h.second) = b;
            }
    }
    return t;
}

SimpleGraph RmtTree::tree() const {
    std::vector<Edge> edges;
    const int b = num_bricks();
    for (const auto& vb : virtual_bricks) edges.push_back(vb);
    for (int i = 0; i < b; ++i)
        for (const auto& e : bricks[i].edges)
            if (!e.is_virtual()) edges.emplace_back(i, b + e.id);
    return SimpleGraph(b + num_real_edges, std::move(edges), true);
}

SimpleGraph brick_graph(const Brick& b, std::vector<int>* vertex_map) {
    std::map<int, int> local;
    std::vector<int> back;
    std::vector<Edge> edges;
    auto id = [&](int x) {
        auto [it, inserted] = local.emplace(x, static_cast<int>(back.size()));
        if (inserted) back.push_back(x);
        return it->second;
    };
    for (const auto& e : b.edges) {
        const int a = id(e.u);
        const int c = id(e.v);
        edges.emplace_back(a, c);
    }
    if (vertex_map) *vertex_map = back;
    return SimpleGraph(static_cast<int>(back.size()), std::move(edges), true);
}

std::vector<std::string> brick_signatures(const RmtTree& t) {
    std::vector<std::string> out;
    for (const auto& b : t.bricks) {
        std::vector<std::string> parts;
        for (const auto& e : b.edges) {
            const int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
            parts.push_back(e.is_virtual() ? "v" + std::to_string(lo) + "-" + std::to_string(hi)
                                           : "e" + std::to_string(e.id));
        }
        std::sort(parts.begin(), parts.end());
        std::string s(1, to_char(b.kind));
        for (const auto& x : parts) s += " " + x;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

RmtCheck check_rmt_structure(const SimpleGraph& g, const RmtTree& t) {
    auto fail = [](std::string why) { return RmtCheck{false, std::move(why)}; };
    std::vector<int> real_count(g.num_edges(), 0);
    std::vector<int> virt_count(t.virtual_pairs.size(), 0);
    for (int i = 0; i < t.num_bricks(); ++i) {
        const auto& b = t.bricks[i];
        if (b.edges.size() < 3) return fail("brick " + std::to_string(i) + " has fewer than 3 edges");
        if (classify(b.edges) != b.kind) return fail("brick " + std::to_string(i) + " has the wrong kind");
        if (b.kind == BrickKind::T && !articulation_points(brick_graph(b)).empty())
            return fail("T-brick " + std::to_string(i) + " is not 2-connected");
        for (const auto& e : b.edges) {
            if (e.is_virtual()) {
                const auto p = t.virtual_pairs[e.virtual_index()];
                if (std::minmax(p.first, p.second) != std::minmax(e.u, e.v))
                    return fail("virtual edge endpoints disagree");
                ++virt_count[e.virtual_index()];
            } else {
                const auto r = g.edges()[e.id];
                if (std::minmax(r.first, r.second) != std::minmax(e.u, e.v))
                    return fail("real edge endpoints disagree");
                ++real_count[e.id];
            }
        }
    }
    for (int c : real_count)
        if (c != 1) return fail("a real edge is not in exactly one brick");
    for (int c : virt_count)
        if (c != 2) return fail("a virtual edge is not matched by exactly two bricks");
    const SimpleGraph tree = t.tree();
    if (tree.num_edges() != tree.num_vertices() - 1 || !is_connected(tree)) return fail("RMT-tree is not a tree");
    for (const auto& [a, b] : t.virtual_bricks)
        if (t.bricks[a].kind == t.bricks[b].kind && t.bricks[a].kind != BrickKind::T)
            return fail(std::string("adjacent ") + to_char(t.bricks[a].kind) + "-bricks");
    return {};
}

std::vector<SplitCandidate> brute_force_split_candidates(const SimpleGraph& g) {
    const int n = g.num_vertices();
    if (n > 12) throw Error(ErrorCode::TooLarge, "brute-force split search is capped at 12 vertices");
    std::vector<SplitCandidate> out;
    const auto& edges = g.edges();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::vector<int> others;
            for (int w = 0; w < n; ++w)
                if (w != u && w != v) others.push_back(w);
            const int k = static_cast<int>(others.size());
            for (int mask = 1; mask < (1 << k); ++mask) {
                std::vector<char> inside(n, 0);
                for (int i = 0; i < k; ++i)
                    if (mask >> i & 1) inside[others[i]] = 1;
                std::vector<int> first, second;
                bool separated = true, touches_u = false, touches_v = false;
                for (int e = 0; e < g.num_edges(); ++e) {
                    const auto [a, b] = edges[e];
                    const bool ia = inside[a], ib = inside[b];
                    if (ia || ib) {
                        const int other = ia ? b : a;
                        if (!(ia && ib) && other != u && other != v) {
                            separated = false;
                            break;
                        }
                        touches_u |= (a == u || b == u);
                        touches_v |= (a == v || b == v);
                        first.push_back(e);
                    } else {
                        second.push_back(e);
                    }
                }
                if (!separated || !touches_u || !touches_v) continue;
                if (first.size() < 2 || second.size() < 2) continue;
                // E1 minus {u,v} must be connected: the inside vertices.
                std::vector<Edge> inner;
                std::vector<int> idx(n, -1);
                int m = 0;
                for (int w = 0; w < n; ++w)
                    if (inside[w]) idx[w] = m++;
                for (int e : first) {
                    const auto [a, b] = edges[e];
                    if (inside[a] && inside[b]) inner.emplace_back(idx[a], idx[b]);
                }
                if (!is_connected(SimpleGraph(m, std::move(inner), true))) continue;
                if (!is_two_connected(edge_induced_subgraph(g, second))) continue;
                out.push_back({u, v, std::move(first), std::move(second)});
            }
        }
    return out;
}

VirtualEdgeStats virtual_edge_stats(const SimpleGraph& g, const RmtTree& t) {
    VirtualEdgeStats s;
    std::map<int, std::vector<int>> cache;
    for (const auto& [a, b] : t.virtual_pairs) {
        auto it = cache.find(a);
        if (it == cache.end()) it = cache.emplace(a, bfs_distances(g, a)).first;
        s.distances.push_back(it->second[b]);
        s.max_distance = std::max(s.max_distance, s.distances.back());
    }
    return s;
}

}  // namespace mapforge
