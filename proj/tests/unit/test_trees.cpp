#include <doctest.h>

#include <map>
#include <set>

#include "mapforge/error.hpp"
#include "mapforge/rng.hpp"
#include "mapforge/tree.hpp"

using namespace mapforge;

namespace {

// Dyck words of semilength n counted by a direct recursion on the first return.
std::uint64_t dyck_count(int n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 0; k < m; ++k) c[m] += c[k] * c[m - 1 - k];
    return c[n];
}

std::uint64_t pow3(int n) {
    std::uint64_t r = 1;
    while (n-- > 0) r *= 3;
    return r;
}

}  // namespace

TEST_CASE("catalan numbers") {
    for (int n = 0; n <= 15; ++n) CHECK(catalan(n) == dyck_count(n));
    CHECK(catalan(10) == 16796);
}

TEST_CASE("enumeration sizes") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(enumerate_plane_trees(n).size() == dyck_count(n));
        CHECK(enumerate_labelled_trees(n).size() == dyck_count(n) * pow3(n));
    }
    const auto trees = enumerate_labelled_trees(4);
    const std::set<std::string> distinct = [&] {
        std::set<std::string> s;
        for (const auto& t : trees) s.insert(tree_to_text(t));
        return s;
    }();
    CHECK(distinct.size() == trees.size());
}

TEST_CASE("labelled trees satisfy the label constraint") {
    Rng rng = make_rng(5, 0);
    for (int i = 0; i < 50; ++i) {
        const auto t = sample_labelled_tree(30, rng);
        CHECK(t.labels[0] == 0);
        for (int v = 1; v < t.shape.num_vertices(); ++v)
            CHECK(std::abs(t.labels[v] - t.labels[t.shape.parent(v)]) <= 1);
    }
    CHECK_THROWS(LabelledTree(PlaneTree::from_word({1, 0}), {0, 2}));
}

TEST_CASE("sampler is reproducible per stream") {
    Rng a = make_rng(42, 3), b = make_rng(42, 3), c = make_rng(42, 4);
    const auto ta = sample_labelled_tree(200, a);
    CHECK(ta == sample_labelled_tree(200, b));
    CHECK_FALSE(ta == sample_labelled_tree(200, c));
}

TEST_CASE("sampler is close to uniform on small sizes") {
    const int n = 3;
    const int draws = 60000;
    std::map<std::string, int> hits;
    Rng rng = make_rng(9, 0);
    for (int i = 0; i < draws; ++i) ++hits[sample_plane_tree(n, rng).word_string()];
    CHECK(hits.size() == 5);
    for (const auto& [w, k] : hits) CHECK(std::abs(k - draws / 5) < 600);
}

TEST_CASE("height and diameter") {
    // word 1 = step down, 0 = step up
    const auto path = PlaneTree::from_word({1, 1, 1, 0, 0, 0});
    CHECK(height(path) == 3);
    CHECK(tree_diameter(path) == 3);
    const auto star = PlaneTree::from_word({1, 0, 1, 0, 1, 0});
    CHECK(height(star) == 1);
    CHECK(tree_diameter(star) == 2);
    const auto fork = PlaneTree::from_word({1, 1, 0, 0, 1, 1, 0, 0});
    CHECK(height(fork) == 2);
    CHECK(tree_diameter(fork) == 4);
    CHECK(height(PlaneTree()) == 0);
    CHECK_THROWS_AS(PlaneTree::from_word({0, 1}), Error);
}

TEST_CASE("label span and extremes") {
    const LabelledTree t(PlaneTree::from_word({1, 1, 0, 0, 1, 0}), {0, 1, 2, -1});
    const auto e = label_extremes(t);
    CHECK(e.min == -1);
    CHECK(e.max == 2);
    CHECK(label_span(t) == 3);
}

TEST_CASE("text round trip") {
    Rng rng = make_rng(1, 1);
    for (int i = 0; i < 20; ++i) {
        const auto t = sample_labelled_tree(25, rng);
        CHECK(tree_from_text(tree_to_text(t)) == t);
    }
    CHECK_THROWS(tree_from_text("garbage"));
}

TEST_CASE("bicoloring follows label parity") {
    Rng rng = make_rng(2, 0);
    const auto t = sample_labelled_tree(40, rng);
    const auto b = bicolor(t, Color::Black);
    CHECK(b.colors[0] == Color::Black);
    for (int v = 1; v < t.shape.num_vertices(); ++v)
        CHECK((b.colors[v] == Color::Black) == (t.labels[v] % 2 == 0));
    CHECK(white_black_height(b) >= 0);
}
