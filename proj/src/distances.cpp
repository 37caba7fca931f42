#include "mapforge/distances.hpp"

#include <algorithm>

#include <omp.h>

#include "mapforge/error.hpp"
#include "mapforge/rotation_map.hpp"

namespace mapforge {

namespace {

// BFS into caller-owned buffers; returns the farthest vertex reached last.
int bfs_into(const SimpleGraph& g, int source, std::vector<int>& dist, std::vector<int>& queue) {
    const int n = g.num_vertices();
    dist.assign(n, -1);
    queue.resize(n);
    int head = 0, tail = 0;
    queue[tail++] = source;
    dist[source] = 0;
    while (head < tail) {
        const int v = queue[head++];
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue[tail++] = w;
            }
        }
    }
    if (tail != n) throw Error(ErrorCode::Disconnected, "graph is not connected");
    return queue[n - 1];
}

void check_source(const SimpleGraph& g, int source) {
    if (source < 0 || source >= g.num_vertices())
        throw Error(ErrorCode::InvalidArgument, "source vertex out of range");
}

}  // namespace

std::vector<int> bfs_distances(const SimpleGraph& g, int source) {
    check_source(g, source);
    std::vector<int> dist, queue;
    bfs_into(g, source, dist, queue);
    return dist;
}

std::vector<int> bfs_distances(const RotationMap& m, int source) {
    return bfs_distances(SimpleGraph::from_map(m, true), source);
}

int eccentricity(const SimpleGraph& g, int source) {
    check_source(g, source);
    std::vector<int> dist, queue;
    const int far = bfs_into(g, source, dist, queue);
    return dist[far];
}

DiameterBounds diameter_bounds(const SimpleGraph& g) {
    if (g.num_vertices() <= 1) return {};
    std::vector<int> dist, queue, back;
    // Start from a max-degree vertex.
    int start = 0;
    for (int v = 1; v < g.num_vertices(); ++v)
        if (g.degree(v) > g.degree(start)) start = v;
    const int a = bfs_into(g, start, dist, queue);
    const int b = bfs_into(g, a, dist, queue);
    const int lower = dist[b];
    // Midpoint of the a-b path.
    std::vector<int> from_b;
    bfs_into(g, b, from_b, queue);
    int mid = a;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (dist[v] + from_b[v] == lower && dist[v] == lower / 2) {
            mid = v;
            break;
        }
    }
    const int far = bfs_into(g, mid, back, queue);
    return {lower, 2 * back[far]};
}

int diameter_exact(const SimpleGraph& g) {
    const int n = g.num_vertices();
    if (n <= 1) return 0;
    std::vector<int> dist, queue, scratch;
    int start = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(start)) start = v;
    // 2-sweep to pick a central root u.
    const int a = bfs_into(g, start, dist, queue);
    const int b = bfs_into(g, a, dist, queue);
    std::vector<int> from_b;
    bfs_into(g, b, from_b, queue);
    const int ab = dist[b];
    int u = a;
    for (int v = 0; v < n; ++v) {
        if (dist[v] + from_b[v] == ab && dist[v] == ab / 2) {
            u = v;
            break;
        }
    }
    std::vector<int> level;
    const int far = bfs_into(g, u, level, queue);
    int i = level[far];
    int lower = std::max(ab, i);
    int upper = 2 * i;
    // Bucket vertices by level.
    std::vector<std::vector<int>> fringe(i + 1);
    for (int v = 0; v < n; ++v) fringe[level[v]].push_back(v);
    while (upper > lower && i > 0) {
        int best = 0;
        for (int v : fringe[i]) {
            const int f = bfs_into(g, v, scratch, queue);
            best = std::max(best, scratch[f]);
        }
        lower = std::max(lower, best);
        if (lower > 2 * (i - 1)) return lower;
        upper = 2 * (i - 1);
        --i;
    }
    return lower;
}

int diameter_exact(const RotationMap& m) {
    return diameter_exact(SimpleGraph::from_map(m, true));
}

int diameter_all_pairs_serial(const SimpleGraph& g) {
    std::vector<int> dist, queue;
    int best = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const int f = bfs_into(g, v, dist, queue);
        best = std::max(best, dist[f]);
    }
    return best;
}

int diameter_all_pairs_parallel(const SimpleGraph& g, int threads) {
    const int n = g.num_vertices();
    if (n == 0) return 0;
    // Connectivity check up front so no exception escapes the parallel region.
    bfs_distances(g, 0);
    int best = 0;
    if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel num_threads(threads) reduction(max : best)
    {
        std::vector<int> dist, queue;
#pragma omp for schedule(dynamic, 16)
        for (int v = 0; v < n; ++v) {
            const int f = bfs_into(g, v, dist, queue);
            best = std::max(best, dist[f]);
        }
    }
    return best;
}

}  // namespace mapforge
