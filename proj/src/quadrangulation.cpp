#include "mapforge/quadrangulation.hpp"

#include <algorithm>

#include "mapforge/error.hpp"

namespace mapforge {

Quadrangulation Quadrangulation::from_map(RotationMap m, int pointed) {
    if (m.num_edges() == 0) throw Error(ErrorCode::NotQuadrangulation, "empty map");
    for (int d : m.face_degrees())
        if (d != 4) throw Error(ErrorCode::NotQuadrangulation, "face of degree " + std::to_string(d));
    std::vector<int> side(m.num_vertices(), -1);
    std::vector<int> stack{0};
    side[0] = 0;
    // Walk half-edges from each vertex representative.
    std::vector<std::vector<int>> out(m.num_vertices());
    for (int h = 0; h < m.num_half_edges(); ++h) out[m.vertex_of(h)].push_back(h);
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int h : out[v]) {
            const int w = m.head_of(h);
            if (side[w] < 0) {
                side[w] = 1 - side[v];
                stack.push_back(w);
            } else if (side[w] == side[v]) {
                throw Error(ErrorCode::NotQuadrangulation, "map is not bipartite");
            }
        }
    }
    if (pointed >= m.num_vertices()) throw Error(ErrorCode::InvalidArgument, "pointed vertex out of range");
    Quadrangulation q{std::move(m), {}, pointed};
    q.colors.resize(side.size());
    for (std::size_t v = 0; v < side.size(); ++v) q.colors[v] = side[v] == 0 ? Color::Black : Color::White;
    return q;
}

int Quadrangulation::num_black() const {
    return static_cast<int>(std::count(colors.begin(), colors.end(), Color::Black));
}

int Quadrangulation::num_white() const { return static_cast<int>(colors.size()) - num_black(); }

}  // namespace mapforge
