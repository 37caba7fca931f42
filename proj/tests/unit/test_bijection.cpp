#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "mapforge/bijection.hpp"
#include "mapforge/distances.hpp"
#include "mapforge/map_enum.hpp"
#include "mapforge/tree.hpp"

using namespace mapforge;

namespace {

bool passes(const std::vector<InequalityCheck>& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c.name == name) return c.ok;
    FAIL("missing check " << name);
    return false;
}

std::vector<int> sorted_degrees(std::span<const int> d) {
    std::vector<int> v(d.begin(), d.end());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("closure yields quadrangulations with the expected size") {
    Rng rng = make_rng(4, 0);
    for (int i = 0; i < 40; ++i) {
        const int n = 1 + i;
        const auto t = sample_labelled_tree(n, rng);
        const auto c = cvs_closure(t, i % 2);
        CHECK(c.quad.num_faces() == n);
        CHECK(c.quad.map.num_vertices() == n + 2);
        for (int d : c.quad.map.face_degrees()) CHECK(d == 4);
        CHECK(c.quad.pointed >= 0);
    }
}

TEST_CASE("closure is a bijection onto pointed rooted quadrangulations") {
    // Each rooted quadrangulation with n faces has n+2 vertices, so the
    // pointed ones number (n+2) times the rooted ones. Every rooted one must
    // be hit once per vertex.
    for (int n = 1; n <= 4; ++n) {
        std::map<std::vector<int>, std::set<int>> pointed_by_quad;
        std::size_t closures = 0;
        for (const auto& t : enumerate_labelled_trees(n))
            for (int o = 0; o < 2; ++o) {
                const auto c = cvs_closure(t, o);
                const auto& qm = c.quad.map;
                const auto labels = qm.canonical_labels();
                // name the pointed vertex by its smallest canonical half-edge
                int name = qm.num_half_edges();
                for (int h = 0; h < qm.num_half_edges(); ++h)
                    if (qm.vertex_of(h) == c.quad.pointed) name = std::min(name, labels[h]);
                pointed_by_quad[qm.canonical_code()].insert(name);
                ++closures;
            }
        CHECK(closures == 2 * catalan(n) * static_cast<std::size_t>(std::pow(3, n)));
        CHECK(pointed_by_quad.size() == enumerate_rooted_maps(n).size());
        std::size_t total = 0;
        for (const auto& [code, hit] : pointed_by_quad) total += hit.size();
        CHECK(total == closures);
    }
}

TEST_CASE("distance identity holds exhaustively for small trees") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& t : enumerate_labelled_trees(n))
            for (int o = 0; o < 2; ++o) {
                const auto checks = validate_distance_inequalities(run_pipeline(t, o));
                CHECK(passes(checks, "distance-identity"));
                CHECK(passes(checks, "label-span-vs-quad-diameter"));
            }
}

TEST_CASE("distance identity on random larger trees") {
    Rng rng = make_rng(8, 0);
    for (int i = 0; i < 30; ++i) {
        const auto s = run_pipeline(sample_labelled_tree(300, rng), i % 2);
        CHECK(passes(validate_distance_inequalities(s), "distance-identity"));
    }
}

TEST_CASE("quadrangulation of a map and back") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& m : enumerate_rooted_maps(n)) {
            const auto q = map_to_quad(m);
            CHECK(q.num_faces() == n);
            CHECK(q.map.num_vertices() == m.num_vertices() + m.num_faces());
            const auto back = quad_to_map(q);
            CHECK(back.num_edges() == m.num_edges());
            CHECK(sorted_degrees(back.vertex_degrees()) == sorted_degrees(m.vertex_degrees()));
            CHECK(sorted_degrees(back.face_degrees()) == sorted_degrees(m.face_degrees()));
        }
}

TEST_CASE("map_to_quad is injective on rooted maps") {
    std::set<std::vector<int>> codes;
    const auto maps = enumerate_rooted_maps(4);
    for (const auto& m : maps) codes.insert(map_to_quad(m).map.canonical_code());
    CHECK(codes.size() == maps.size());
}

TEST_CASE("pipeline map has n edges") {
    Rng rng = make_rng(6, 0);
    const auto s = run_pipeline(sample_labelled_tree(50, rng), 1);
    CHECK(s.map.num_edges() == 50);
    CHECK(s.map.num_vertices() + s.map.num_faces() == 52);
}
