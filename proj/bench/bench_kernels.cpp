// Serial reference vs OpenMP kernel timings.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "mapforge/bijection.hpp"
#include "mapforge/distances.hpp"
#include "mapforge/experiments.hpp"
#include "mapforge/simple_graph.hpp"
#include "mapforge/tree.hpp"

using namespace mapforge;

namespace {

double seconds(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 3000;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 200;
    const int threads = omp_get_max_threads();
    std::printf("threads=%d\n", threads);

    Rng rng = make_rng(1, 0);
    const auto g = SimpleGraph::from_map(run_pipeline(sample_labelled_tree(n, rng)).map, true);
    int d_serial = 0, d_parallel = 0;
    const double t_serial = seconds([&] { d_serial = diameter_all_pairs_serial(g); });
    const double t_parallel = seconds([&] { d_parallel = diameter_all_pairs_parallel(g, threads); });
    std::printf("all-pairs diameter n=%d: serial %.3fs parallel %.3fs (%d vs %d)\n", n, t_serial, t_parallel,
                d_serial, d_parallel);

    const ReplicateFn<double> fn = [](int, Rng& r) { return measure_scaling("quad-radius", 1 << 14, r, true); };
    std::vector<std::optional<double>> a, b;
    const double r_serial = seconds([&] { a = run_replicates_serial(reps, 7, fn); });
    const double r_parallel = seconds([&] { b = run_replicates_parallel(reps, 7, threads, fn); });
    std::printf("replicate loop reps=%d: serial %.3fs parallel %.3fs (identical: %s)\n", reps, r_serial,
                r_parallel, a == b ? "yes" : "no");
    return d_serial == d_parallel && a == b ? 0 : 1;
}
