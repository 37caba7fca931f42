#include "mapforge/experiments.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "mapforge/bijection.hpp"
#include "mapforge/decomposition.hpp"
#include "mapforge/distances.hpp"
#include "mapforge/simple_graph.hpp"
#include "mapforge/tree.hpp"

namespace mapforge {

std::string canonical_parameters(const ExperimentConfig& c) {
    std::ostringstream s;
    s << "experiment=" << c.experiment << ";variant=" << c.variant << ";grid=";
    for (std::size_t i = 0; i < c.grid.size(); ++i) s << (i ? "," : "") << c.grid[i];
    s << ";reps=" << c.reps << ";seed=" << c.seed << ";x=" << c.x << ";format=" << c.format
      << ";exact=" << c.exact << ";exhaustive=" << c.exhaustive << ";order=" << c.order
      << ";table=" << c.table_path << ";version=" << kVersion;
    return s.str();
}

std::uint64_t config_hash(const ExperimentConfig& c) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical_parameters(c)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

Budget::Budget() : start_(std::chrono::steady_clock::now()) {
    if (const char* env = std::getenv("MAPFORGE_BUDGET_SECS")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) limit_ = v;
    }
}

Budget::Budget(double seconds) : start_(std::chrono::steady_clock::now()), limit_(seconds) {}

double Budget::elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

bool Budget::expired() const { return limit_ > 0 && elapsed() > limit_; }

double mean(const std::vector<double>& v) {
    if (v.empty()) return 0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double quantile(std::vector<double> v, double p) {
    if (v.empty()) return 0;
    std::sort(v.begin(), v.end());
    const double pos = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const double mx = mean(x), my = mean(y);
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    LineFit f;
    f.slope = sxx > 0 ? sxy / sxx : 0;
    f.intercept = my - f.slope * mx;
    return f;
}

SlopeEstimate log_log_slope(const std::vector<int>& ns, const std::vector<std::vector<double>>& values,
                            std::uint64_t seed, int resamples) {
    std::vector<double> lx;
    for (int n : ns) lx.push_back(std::log(static_cast<double>(n)));
    auto slope_of = [&](const std::vector<double>& means) {
        std::vector<double> ly;
        for (double m : means) ly.push_back(std::log(m));
        return fit_line(lx, ly).slope;
    };
    std::vector<double> means;
    for (const auto& v : values) means.push_back(mean(v));
    SlopeEstimate out;
    out.slope = slope_of(means);

    Rng rng = make_rng(seed, 0xb007ULL);
    std::vector<double> slopes;
    for (int b = 0; b < resamples; ++b) {
        std::vector<double> m;
        for (const auto& v : values) {
            std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
            double s = 0;
            for (std::size_t i = 0; i < v.size(); ++i) s += v[pick(rng)];
            m.push_back(s / static_cast<double>(v.size()));
        }
        slopes.push_back(slope_of(m));
    }
    out.ci_low = quantile(slopes, 0.025);
    out.ci_high = quantile(slopes, 0.975);
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string Table::to_csv() const {
    std::string s;
    for (std::size_t i = 0; i < columns.size(); ++i) s += (i ? "," : "") + columns[i];
    s += '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i];
        s += '\n';
    }
    return s;
}

std::string Table::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < columns.size() && i < r.size(); ++i) obj[columns[i]] = r[i];
        rows_json.push_back(std::move(obj));
    }
    return rows_json.dump(1) + "\n";
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ValidationFailed: return 2;
        case ErrorCode::BudgetExceeded: return 3;
        default: return 1;
    }
}

double measure_scaling(const std::string& family, int n, Rng& rng, bool exact) {
    if (family == "tree-height") return height(sample_plane_tree(n, rng));
    if (family == "tree-diameter") return tree_diameter(sample_plane_tree(n, rng));
    if (family == "tree-span") return label_span(sample_labelled_tree(n, rng));
    if (family == "quad-radius") return label_span(sample_labelled_tree(n, rng)) + 1;
    if (family == "map-diameter") {
        const auto t = sample_labelled_tree(n, rng);
        const int orientation = static_cast<int>(rng() & 1);
        const auto m = run_pipeline(t, orientation).map;
        const auto g = SimpleGraph::from_map(m, true);
        if (exact) return diameter_exact(g);
        const auto b = diameter_bounds(g);
        return 0.5 * (b.lower + b.upper);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown scaling family '" + family + "'");
}

std::vector<double> monte_carlo_core_sizes(int n, int reps, const Rational& x, std::uint64_t seed,
                                           int threads, const Budget& budget) {
    struct Draw {
        int core = 0;
        int vertices = 0;
    };
    const ReplicateFn<Draw> fn = [n](int, Rng& rng) {
        const auto t = sample_labelled_tree(n, rng);
        const auto m = run_pipeline(t, static_cast<int>(rng() & 1)).map;
        return Draw{two_connected_core(m).core.num_edges(), m.num_vertices()};
    };
    const auto draws = run_replicates(reps, seed, threads, fn, budget);
    const double xd = to_double(x);
    std::vector<double> hist(n + 1, 0.0);
    double total = 0;
    for (const auto& d : draws) {
        if (!d) continue;
        const double w = xd == 1 ? 1.0 : std::pow(xd, d->vertices - 1);
        hist[d->core] += w;
        total += w;
    }
    if (total > 0)
        for (double& h : hist) h /= total;
    return hist;
}

std::vector<InequalityCheck> validate_sample(const PipelineSample& s, const std::string& pipeline) {
    if (pipeline != "bijection" && pipeline != "decomposition" && pipeline != "all")
        throw Error(ErrorCode::InvalidArgument, "unknown pipeline '" + pipeline + "'");
    std::vector<InequalityCheck> out;
    if (pipeline != "decomposition") out = validate_distance_inequalities(s);
    if (pipeline != "bijection")
        for (auto& r : validate_decomposition_inequalities(s.map)) out.push_back({r.name, r.ok, r.detail});
    return out;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
    double s = 0;
    const std::size_t m = std::max(p.size(), q.size());
    for (std::size_t i = 0; i < m; ++i) {
        const double a = i < p.size() ? p[i] : 0.0;
        const double b = i < q.size() ? q[i] : 0.0;
        s += std::fabs(a - b);
    }
    return 0.5 * s;
}

}  // namespace mapforge
