// Acceptance checks. Each criterion prints one PASS/FAIL line; the exit code
// is nonzero if any selected criterion fails.
#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "mapforge/asymptotics.hpp"
#include "mapforge/bijection.hpp"
#include "mapforge/connectivity.hpp"
#include "mapforge/decomposition.hpp"
#include "mapforge/experiments.hpp"
#include "mapforge/gf_families.hpp"
#include "mapforge/map_enum.hpp"
#include "mapforge/rotation_map.hpp"
#include "mapforge/simple_graph.hpp"
#include "mapforge/system.hpp"
#include "mapforge/tree.hpp"

using namespace mapforge;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int threads() { return omp_get_max_threads(); }

std::string fmt(double v) { return format_double(v); }

std::uint64_t pow3(int n) {
    std::uint64_t r = 1;
    while (n-- > 0) r *= 3;
    return r;
}

Outcome counting() {
    std::ostringstream d;
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t trees = enumerate_labelled_trees(n).size();
        const std::uint64_t maps = count_rooted_maps_by_permutations(n);
        const std::uint64_t listed = enumerate_rooted_maps(n).size();
        const bool row = trees == catalan(n) * pow3(n) && 2 * trees == (n + 2) * maps && listed == maps;
        ok &= row;
        d << " n=" << n << ":trees=" << trees << ",maps=" << maps;
    }
    return {ok, d.str()};
}

Outcome distance_identity() {
    const int n = 500, reps = 1000;
    const ReplicateFn<int> fn = [&](int i, Rng& rng) {
        const auto s = run_pipeline(sample_labelled_tree(n, rng), i % 2);
        for (const auto& c : validate_distance_inequalities(s))
            if (c.name == "distance-identity") return c.ok ? 0 : 1;
        return 1;
    };
    int bad = 0;
    for (const auto& r : run_replicates(reps, 2024, threads(), fn)) bad += r.value_or(1);
    return {bad == 0, "violations=" + std::to_string(bad) + " of " + std::to_string(reps)};
}

Outcome inequality_suite() {
    std::map<std::string, int> failures;
    auto tally = [&](const std::vector<InequalityCheck>& checks) {
        for (const auto& c : checks)
            if (!c.ok) ++failures[c.name];
    };
    int exhaustive = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_labelled_trees(n))
            for (int o = 0; o < 2; ++o) {
                tally(validate_sample(run_pipeline(t, o), "all"));
                ++exhaustive;
            }
    const ReplicateFn<std::vector<InequalityCheck>> fn = [](int i, Rng& rng) {
        return validate_sample(run_pipeline(sample_labelled_tree(1000, rng), i % 2), "all");
    };
    for (const auto& r : run_replicates(1000, 2025, threads(), fn)) tally(*r);
    std::string d = "exhaustive=" + std::to_string(exhaustive) + " sampled=1000";
    for (const auto& [name, k] : failures) d += " " + name + ":" + std::to_string(k);
    return {failures.empty(), d};
}

Outcome scaling(const std::string& family, double lo, double hi, std::uint64_t seed) {
    std::vector<int> grid;
    for (int e = 10; e <= 17; ++e) grid.push_back(1 << e);
    std::vector<std::vector<double>> values;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        const int n = grid[gi];
        const ReplicateFn<double> fn = [&](int, Rng& rng) { return measure_scaling(family, n, rng, true); };
        std::vector<double> v;
        for (const auto& r : run_replicates(200, derive_seed(seed, gi), threads(), fn)) v.push_back(*r);
        values.push_back(std::move(v));
    }
    const auto s = log_log_slope(grid, values, seed);
    return {lo <= s.slope && s.slope <= hi,
            family + " slope=" + fmt(s.slope) + " ci=[" + fmt(s.ci_low) + "," + fmt(s.ci_high) + "] band=[" +
                fmt(lo) + "," + fmt(hi) + "]"};
}

Outcome core_law() {
    const double alpha = alpha_estimate(1).alpha;
    std::ostringstream d;
    d << "alpha=" << fmt(alpha);
    bool mode_ok = true;
    std::vector<double> scaled;
    for (int n : {100, 200, 400}) {
        const auto s = summarize_core(core_size_distribution(n, 1), alpha);
        const double ratio = static_cast<double>(s.bulk_mode) / n;
        mode_ok &= std::fabs(ratio - alpha) <= 0.02 && s.sums_to_one;
        scaled.push_back(s.scaled_point);
        d << " n=" << n << ":mode=" << s.mode << ",bulk_mode/n=" << fmt(ratio)
          << ",n^(2/3)P=" << fmt(s.scaled_point);
    }
    bool stable = true;
    for (std::size_t i = 1; i < scaled.size(); ++i)
        stable &= std::fabs(scaled[i] / scaled[i - 1] - 1) < 0.25;

    const auto exact = core_size_distribution(50, 1);
    std::vector<double> p;
    for (const auto& q : exact) p.push_back(to_double(q));
    const double tv = total_variation(p, monte_carlo_core_sizes(50, 100000, 1, 2026, threads()));
    d << " tv(n=50)=" << fmt(tv);
    return {mode_ok && stable && tv < 0.05, d.str()};
}

Outcome series_identities() {
    const int order = 20;
    bool ok = true;
    std::string d;
    const auto trees = solve_scalar(labelled_tree_system(), order);
    const auto bicolored = solve_scalar(bicolored_tree_system(1, order), order);
    const bool trees_ok = trees == bicolored;
    d += std::string("bicolored=labelled:") + (trees_ok ? "yes" : "no");
    ok &= trees_ok;

    const auto mc = maps_and_core_series(30, 1);
    const auto composed = compose(mc.cores, mc.substitution);
    bool comp_ok = true;
    for (int n = 1; n <= 30; ++n) comp_ok &= composed[n] == mc.maps[n];
    d += std::string(" M=CoH:") + (comp_ok ? "yes" : "no");
    ok &= comp_ok;

    const ThreeConnectedSource src{ThreeConnectedSource::Kind::BuiltIn, std::nullopt, 6};
    const auto net = planar_network_system(order, 1, src);
    const bool net_ok = net.networks == net.networks_closed;
    d += std::string(" networks vector=closed:") + (net_ok ? "yes" : "no");
    ok &= net_ok;
    return {ok, d};
}

Outcome growth_benchmarks() {
    const auto c = estimate_growth(plane_tree_series(200));
    const auto m = estimate_growth(rooted_maps_closed_form(200));
    const bool ok = std::fabs(c.rho - 0.25) < 1e-3 && std::fabs(c.exponent + 1.5) < 0.15 &&
                    std::fabs(m.rho - 1.0 / 12) < 1e-3 && std::fabs(m.exponent + 2.5) < 0.15;
    return {ok, "catalan=(" + fmt(c.rho) + "," + fmt(c.exponent) + ") maps=(" + fmt(m.rho) + "," +
                    fmt(m.exponent) + ")"};
}

SimpleGraph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> e;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) e.emplace_back(u, v);
    return SimpleGraph(n, e);
}

Outcome rmt_oracle() {
    std::vector<SimpleGraph> corpus;
    for (int n = 3; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
            auto g = graph_from_mask(n, mask);
            if (g.num_edges() >= 3 && is_two_connected(g)) corpus.push_back(std::move(g));
        }
    }
    const std::size_t small = corpus.size();
    Rng rng = make_rng(2027, 0);
    for (int n : {7, 8})
        for (int found = 0; found < 300;) {
            const int pairs = n * (n - 1) / 2;
            const double density = std::uniform_real_distribution<double>(0.3, 0.8)(rng);
            std::bernoulli_distribution keep(density);
            std::uint64_t mask = 0;
            for (int b = 0; b < pairs; ++b)
                if (keep(rng)) mask |= 1ULL << b;
            auto g = graph_from_mask(n, mask);
            if (!is_two_connected(g)) continue;
            corpus.push_back(std::move(g));
            ++found;
        }
    for (int k = 3; k <= 5; ++k)
        for (const auto& m : enumerate_rooted_maps(k)) {
            const auto core = two_connected_core(m).core;
            if (core.num_edges() >= 3) corpus.push_back(SimpleGraph::from_map(core, true));
        }
    for (int i = 0; i < 300; ++i) {
        const auto core = two_connected_core(run_pipeline(sample_labelled_tree(40, rng), i % 2).map).core;
        if (core.num_edges() >= 3 && core.num_vertices() <= 8) corpus.push_back(SimpleGraph::from_map(core, true));
    }
    corpus.push_back(SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    corpus.push_back(SimpleGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    corpus.push_back(SimpleGraph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}));

    int bad = 0;
    std::string first;
    for (const auto& g : corpus) {
        std::string why;
        try {
            const auto t = rmt_decomposition(g);
            const auto c = check_rmt_structure(g, t);
            if (!c.ok) why = c.detail;
            for (const auto& b : t.bricks)
                if (why.empty() && !brute_force_split_candidates(brick_graph(b)).empty())
                    why = std::string("split candidate in ") + to_char(b.kind) + "-brick";
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (!why.empty() && bad++ == 0) first = why + " (" + std::to_string(g.num_vertices()) + " vertices, " +
                                         std::to_string(g.num_edges()) + " edges)";
    }
    std::string d = "graphs=" + std::to_string(corpus.size()) + " (all<=6 vertices: " + std::to_string(small) +
                    ") violations=" + std::to_string(bad);
    if (bad) d += " first: " + first;
    return {bad == 0, d};
}

Outcome tails() {
    const int n = 10000, reps = 1000;
    struct Faces {
        int root = 0;
        int max = 0;
    };
    const ReplicateFn<Faces> fn = [&](int i, Rng& rng) {
        const auto m = run_pipeline(sample_labelled_tree(n, rng), i % 2).map;
        return Faces{root_face_degree(m), max_face_degree(m)};
    };
    std::vector<int> root, max;
    for (const auto& r : run_replicates(reps, 2028, threads(), fn)) {
        root.push_back(r->root);
        max.push_back(r->max);
    }
    const auto rt = summarize_tail(root, n);
    const auto mt = summarize_tail(max, n);
    const bool ok = rt.fitted_points >= 3 && rt.log_slope < 0 && mt.fraction_above_n02 < 0.01;
    return {ok, "root-face slope=" + fmt(rt.log_slope) + " points=" + std::to_string(rt.fitted_points) +
                    " P(max face > n^0.2)=" + fmt(mt.fraction_above_n02)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mapforge acceptance checks"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion (1-11)")->check(CLI::Range(0, 11));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::function<Outcome()>> criteria{
        counting,
        distance_identity,
        inequality_suite,
        [] { return scaling("quad-radius", 0.23, 0.27, 4); },
        [] { return scaling("tree-height", 0.47, 0.53, 5); },
        [] { return scaling("tree-diameter", 0.47, 0.53, 6); },
        core_law,
        series_identities,
        growth_benchmarks,
        rmt_oracle,
        tails,
    };
    int failed = 0;
    for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) {
        if (only && k != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k - 1]();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s %s (%.1fs)\n", k, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
