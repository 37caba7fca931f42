#include "mapforge/map_enum.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mapforge/error.hpp"

namespace mapforge {

namespace {

bool is_planar_connected(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int h = stack.back();
        stack.pop_back();
        for (int g : {sigma[h], h ^ 1})
            if (!seen[g]) {
                seen[g] = 1;
                ++count;
                stack.push_back(g);
            }
    }
    if (count != n) return false;
    auto orbits = [&](bool faces) {
        std::vector<char> mark(n, 0);
        int c = 0;
        for (int h = 0; h < n; ++h) {
            if (mark[h]) continue;
            ++c;
            for (int g = h; !mark[g]; g = faces ? sigma[g ^ 1] : sigma[g]) mark[g] = 1;
        }
        return c;
    };
    return orbits(false) - n / 2 + orbits(true) == 2;
}

// Insert half-edge `h` just before `before` in the rotation.
void insert_before(std::vector<int>& sigma, std::vector<int>& inv, int h, int before) {
    const int p = inv[before];
    sigma[p] = h;
    inv[h] = p;
    sigma[h] = before;
    inv[before] = h;
}

}  // namespace

std::vector<RotationMap> one_edge_extensions(const RotationMap& m) {
    std::vector<RotationMap> out;
    const int n = m.num_half_edges();
    if (n == 0) {
        out.push_back(RotationMap::build({1, 0}));
        out.push_back(RotationMap::build({0, 1}));
        return out;
    }
    const std::vector<int> base(m.sigma_array().begin(), m.sigma_array().end());
    std::vector<int> base_inv(n);
    for (int h = 0; h < n; ++h) base_inv[base[h]] = h;
    const int a = n, b = n + 1;
    auto emit = [&](std::vector<int> s) {
        if (is_planar_connected(s)) out.push_back(RotationMap::build(std::move(s), 0));
    };
    for (int w1 = 0; w1 < n; ++w1) {
        // Pendant edge to a new vertex.
        {
            std::vector<int> s = base, inv = base_inv;
            s.resize(n + 2);
            inv.resize(n + 2);
            insert_before(s, inv, a, w1);
            s[b] = b;
            inv[b] = b;
            emit(std::move(s));
        }
        for (int w2 = 0; w2 < n; ++w2) {
            std::vector<int> s = base, inv = base_inv;
            s.resize(n + 2);
            inv.resize(n + 2);
            insert_before(s, inv, a, w1);
            insert_before(s, inv, b, w2);
            emit(s);
            if (w1 == w2) {
                // Same wedge: the other nesting order.
                std::vector<int> t = base, tinv = base_inv;
                t.resize(n + 2);
                tinv.resize(n + 2);
                insert_before(t, tinv, b, w1);
                insert_before(t, tinv, a, w1);
                emit(std::move(t));
            }
        }
    }
    return out;
}

std::vector<RotationMap> enumerate_rooted_maps(int n) {
    if (n > 7) throw Error(ErrorCode::TooLarge, "map enumeration is capped at 7 edges");
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative edge count");
    std::vector<RotationMap> level{RotationMap{}};
    for (int k = 1; k <= n; ++k) {
        std::set<std::vector<int>> seen_unrooted;
        std::set<std::vector<int>> codes;
        for (const auto& m : level) {
            for (const auto& e : one_edge_extensions(m)) {
                // Unrooted class key: lexicographically least code over rootings.
                std::vector<int> key = e.canonical_code(0);
                std::vector<std::vector<int>> all;
                for (int r = 0; r < e.num_half_edges(); ++r) {
                    all.push_back(e.canonical_code(r));
                    key = std::min(key, all.back());
                }
                if (!seen_unrooted.insert(key).second) continue;
                for (auto& c : all) codes.insert(std::move(c));
            }
        }
        // Grow only from one rooting per unrooted class.
        std::vector<RotationMap> next;
        for (const auto& key : seen_unrooted) next.push_back(RotationMap::build(key, 0));
        if (k == n) {
            std::vector<RotationMap> rooted;
            rooted.reserve(codes.size());
            for (const auto& c : codes) rooted.push_back(RotationMap::build(c, 0));
            return rooted;
        }
        level = std::move(next);
    }
    return level;
}

std::uint64_t count_rooted_maps_by_permutations(int n) {
    if (n > 5) throw Error(ErrorCode::TooLarge, "permutation count is capped at 5 edges");
    if (n <= 0) return 1;
    std::vector<int> sigma(2 * n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::uint64_t count = 0;
    do {
        if (is_planar_connected(sigma)) ++count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::uint64_t labellings = 1;
    for (int k = 1; k < n; ++k) labellings *= 2 * k;
    return count / labellings;
}

std::vector<RotationMap> enumerate_rooted_quadrangulations(int n) {
    std::vector<RotationMap> out;
    for (auto& m : enumerate_rooted_maps(2 * n)) {
        const auto d = m.face_degrees();
        if (std::all_of(d.begin(), d.end(), [](int x) { return x == 4; })) out.push_back(std::move(m));
    }
    return out;
}

}  // namespace mapforge
