#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "mapforge/bijection.hpp"
#include "mapforge/distances.hpp"
#include "mapforge/error.hpp"
#include "mapforge/io.hpp"
#include "mapforge/map_enum.hpp"
#include "mapforge/rotation_map.hpp"
#include "mapforge/simple_graph.hpp"
#include "mapforge/tree.hpp"

using namespace mapforge;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

// Labelled maps on 2n half-edges with fixed pairing h <-> h^1, counted by
// brute force over all vertex permutations.
long long planar_labelled_maps(int n) {
    const int h = 2 * n;
    std::vector<int> sigma(h);
    std::iota(sigma.begin(), sigma.end(), 0);
    long long count = 0;
    do {
        std::vector<int> comp(h);
        std::iota(comp.begin(), comp.end(), 0);
        auto find = [&](int x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (int i = 0; i < h; ++i) {
            comp[find(i)] = find(sigma[i]);
            comp[find(i)] = find(i ^ 1);
        }
        bool connected = true;
        for (int i = 0; i < h; ++i) connected &= find(i) == find(0);
        if (!connected) continue;
        auto cycles = [&](auto next) {
            std::vector<char> seen(h, 0);
            int c = 0;
            for (int i = 0; i < h; ++i) {
                if (seen[i]) continue;
                ++c;
                for (int j = i; !seen[j]; j = next(j)) seen[j] = 1;
            }
            return c;
        };
        const int v = cycles([&](int j) { return sigma[j]; });
        const int f = cycles([&](int j) { return sigma[j ^ 1]; });
        if (v - n + f == 2) ++count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return count;
}

long long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}  // namespace

TEST_CASE("build rejects malformed rotation systems") {
    CHECK(code_of([] { RotationMap::build({0, 1, 2}); }) == ErrorCode::OddHalfEdgeCount);
    CHECK(code_of([] { RotationMap::build({0, 0}); }) == ErrorCode::NotAPermutation);
    CHECK(code_of([] { RotationMap::build({0, 1, 2, 3}); }) == ErrorCode::Disconnected);
    CHECK(code_of([] { RotationMap::build({1, 0}, 5); }) == ErrorCode::InvalidRoot);
}

TEST_CASE("single edge maps") {
    const auto link = RotationMap::build({0, 1});
    CHECK(link.num_vertices() == 2);
    CHECK(link.num_faces() == 1);
    CHECK(max_face_degree(link) == 2);
    const auto loop = RotationMap::build({1, 0});
    CHECK(loop.num_vertices() == 1);
    CHECK(loop.num_faces() == 2);
    CHECK(loop.is_loop(0));
    const RotationMap empty;
    CHECK(empty.num_vertices() == 1);
    CHECK(empty.num_faces() == 1);
}

TEST_CASE("rerooting keeps the map and moves the root to half-edge 0") {
    const auto m = RotationMap::build({2, 3, 0, 1});
    const auto r = RotationMap::build({2, 3, 0, 1}, 3);
    CHECK(r.num_vertices() == m.num_vertices());
    CHECK(r.num_faces() == m.num_faces());
    CHECK(r.canonical_code() == m.canonical_code(3));
}

TEST_CASE("dual swaps vertex and face counts") {
    Rng rng = make_rng(7, 0);
    for (int i = 0; i < 20; ++i) {
        const auto m = run_pipeline(sample_labelled_tree(12, rng)).map;
        const auto d = m.dual();
        CHECK(d.num_vertices() == m.num_faces());
        CHECK(d.num_faces() == m.num_vertices());
    }
}

TEST_CASE("rooted map counts match the permutation oracle") {
    // frozen from planar_labelled_maps / (2^(n-1) (n-1)!)
    const long long expected[] = {0, 2, 9, 54, 378};
    for (int n = 1; n <= 4; ++n) {
        const long long oracle = planar_labelled_maps(n) / ((1LL << (n - 1)) * factorial(n - 1));
        CHECK(oracle == expected[n]);
        CHECK(static_cast<long long>(enumerate_rooted_maps(n).size()) == expected[n]);
    }
    CHECK(enumerate_rooted_maps(5).size() == 2916);
    CHECK(enumerate_rooted_maps(6).size() == 24057);
    CHECK(code_of([] { enumerate_rooted_maps(8); }) == ErrorCode::TooLarge);
}

TEST_CASE("enumerated maps are pairwise distinct") {
    std::set<std::vector<int>> codes;
    for (const auto& m : enumerate_rooted_maps(4)) codes.insert(m.canonical_code());
    CHECK(codes.size() == 378);
}

TEST_CASE("quadrangulation enumeration") {
    CHECK(enumerate_rooted_quadrangulations(1).size() == 2);
    CHECK(enumerate_rooted_quadrangulations(2).size() == 9);
    CHECK(enumerate_rooted_quadrangulations(3).size() == 54);
    for (const auto& q : enumerate_rooted_quadrangulations(3))
        for (int d : q.face_degrees()) CHECK(d == 4);
}

TEST_CASE("json round trip and malformed input") {
    Rng rng = make_rng(3, 0);
    const auto m = run_pipeline(sample_labelled_tree(9, rng)).map;
    CHECK(map_from_json(map_to_json(m)) == m);
    CHECK_THROWS_AS(map_from_json("{\"sigma\":[0,1"), MalformedInput);
    CHECK_THROWS_AS(map_from_json("{\"sigma\":[0,\"a\"],\"root\":0}"), MalformedInput);
    try {
        map_from_json("[1,2]");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MalformedInput);
    }
}

TEST_CASE("edge list round trip") {
    const SimpleGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    const auto back = graph_from_edge_list(graph_to_edge_list(g));
    CHECK(back.num_vertices() == 4);
    CHECK(back.num_edges() == 5);
    CHECK_THROWS_AS(graph_from_edge_list("3 1\n0 9\n"), MalformedInput);
}

TEST_CASE("simple graphs reject loops and parallel edges") {
    CHECK_THROWS(SimpleGraph(2, {{0, 0}}));
    CHECK_THROWS(SimpleGraph(2, {{0, 1}, {1, 0}}));
    CHECK_NOTHROW(SimpleGraph(2, {{0, 1}, {1, 0}}, true));
}

TEST_CASE("diameter on small graphs") {
    const SimpleGraph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(diameter_exact(path) == 4);
    CHECK(eccentricity(path, 2) == 2);
    const SimpleGraph cycle(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    CHECK(diameter_exact(cycle) == 3);
    CHECK(code_of([] { bfs_distances(SimpleGraph(3, {{0, 1}}), 0); }) == ErrorCode::Disconnected);
}

TEST_CASE("iFUB and parallel all-pairs agree with the serial reference") {
    Rng rng = make_rng(11, 0);
    for (int i = 0; i < 30; ++i) {
        const auto m = run_pipeline(sample_labelled_tree(40 + i, rng), i % 2).map;
        const auto g = SimpleGraph::from_map(m, true);
        const int ref = diameter_all_pairs_serial(g);
        CHECK(diameter_exact(g) == ref);
        CHECK(diameter_all_pairs_parallel(g, 2) == ref);
        const auto b = diameter_bounds(g);
        CHECK(b.lower <= ref);
        CHECK(ref <= b.upper);
    }
}
