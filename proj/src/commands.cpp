#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <map>

#include "mapforge/asymptotics.hpp"
#include "mapforge/decomposition.hpp"
#include "mapforge/experiments.hpp"
#include "mapforge/gf_families.hpp"
#include "mapforge/io.hpp"
#include "mapforge/tree.hpp"

namespace mapforge {

namespace {

using nlohmann::json;

struct Run {
    const ExperimentConfig& config;
    Budget budget;
    CommandResult result;
    std::string hash = hex64(config_hash(config));

    std::string path(const std::string& name) const {
        return (std::filesystem::path(config.out_dir) / name).string();
    }

    void write(const std::string& name, const std::string& contents) {
        std::filesystem::create_directories(config.out_dir);
        write_file(path(name), contents);
        result.files.push_back(path(name));
    }

    /// Appends config hash and seed columns, then writes csv or json.
    void write_table(const std::string& stem, Table t) {
        t.columns.push_back("config_hash");
        t.columns.push_back("seed");
        for (auto& r : t.rows) {
            r.push_back(hash);
            r.push_back(std::to_string(config.seed));
        }
        if (config.format == "json")
            write(stem + ".json", t.to_json());
        else
            write(stem + ".csv", t.to_csv());
    }

    CommandResult finish(json report = json::object()) {
        json m;
        m["experiment"] = config.experiment;
        m["variant"] = config.variant;
        m["version"] = kVersion;
        m["seed"] = config.seed;
        m["config_hash"] = hash;
        m["parameters"] = canonical_parameters(config);
        m["threads"] = config.threads;
        m["outputs"] = result.files;
        m["wall_time_seconds"] = budget.elapsed();
        m["report"] = report;
        result.report_json = report.dump();
        const std::string name = config.experiment + ".manifest.json";
        std::filesystem::create_directories(config.out_dir);
        write_file(path(name), m.dump(2) + "\n");
        result.files.push_back(path(name));
        return result;
    }

    void check_budget(bool complete) {
        if (!complete) {
            finish(json{{"partial", true}});
            throw Error(ErrorCode::BudgetExceeded, "wall-time budget exhausted; partial results in " +
                                                       config.out_dir);
        }
    }
};

int first_n(const ExperimentConfig& c) {
    if (c.grid.empty()) throw Error(ErrorCode::InvalidArgument, "no size given (--n or --grid)");
    if (c.grid.front() < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
    return c.grid.front();
}

template <class T>
bool all_done(const std::vector<std::optional<T>>& v) {
    for (const auto& x : v)
        if (!x) return false;
    return true;
}

}  // namespace

CommandResult cmd_sample(const ExperimentConfig& c) {
    Run run{c, {}, {}};
    const int n = first_n(c);
    Rng rng = make_rng(c.seed, 0);
    const auto tree = sample_labelled_tree(n, rng);
    const int orientation = static_cast<int>(rng() & 1);
    const std::string stem = "sample_" + c.variant + "_n" + std::to_string(n);
    if (c.variant == "tree") {
        run.write(stem + ".txt", tree_to_text(tree) + "\n");
    } else if (c.variant == "quad") {
        const auto cl = cvs_closure(tree, orientation);
        json j = json::parse(map_to_json(cl.quad.map));
        j["pointed"] = cl.quad.pointed;
        run.write(stem + ".json", j.dump() + "\n");
    } else if (c.variant == "map") {
        run.write(stem + ".json", map_to_json(run_pipeline(tree, orientation).map) + "\n");
    } else {
        throw Error(ErrorCode::InvalidArgument, "sample kind must be tree, quad or map");
    }
    run.result.summary = "wrote " + run.result.files.back();
    return run.finish();
}

CommandResult cmd_scaling(const ExperimentConfig& c) {
    Run run{c, {}, {}};
    const auto& grid = c.grid;
    if (grid.size() < 4) throw Error(ErrorCode::InvalidArgument, "scaling needs at least 4 grid points");
    const double ratio = static_cast<double>(grid[1]) / grid[0];
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1] || std::fabs(static_cast<double>(grid[i]) / grid[i - 1] / ratio - 1) > 0.05)
            throw Error(ErrorCode::InvalidArgument, "scaling grid must be increasing and geometric");
    if (c.reps < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 replicates");

    Table records{{"family", "n", "replicate", "value", "method"}, {}};
    Table summary{{"family", "n", "count", "mean", "q10", "median", "q90"}, {}};
    std::vector<std::vector<double>> values;
    bool complete = true;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        const int n = grid[gi];
        const bool exact = c.exact && n <= 100000;
        const std::uint64_t seed = derive_seed(c.seed, 1000 + gi);
        const ReplicateFn<double> fn = [&](int, Rng& rng) { return measure_scaling(c.variant, n, rng, exact); };
        const auto out = run_replicates(c.reps, seed, c.threads, fn, run.budget);
        std::vector<double> v;
        for (int i = 0; i < c.reps; ++i) {
            if (!out[i]) continue;
            v.push_back(*out[i]);
            records.add({c.variant, std::to_string(n), std::to_string(i), format_double(*out[i]),
                         exact ? "exact" : "bounds"});
        }
        if (!v.empty())
            summary.add({c.variant, std::to_string(n), std::to_string(v.size()), format_double(mean(v)),
                         format_double(quantile(v, 0.1)), format_double(quantile(v, 0.5)),
                         format_double(quantile(v, 0.9))});
        if (v.size() != static_cast<std::size_t>(c.reps)) complete = false;
        values.push_back(std::move(v));
        if (!complete) break;
    }
    run.write_table("scaling_" + c.variant, records);
    run.write_table("scaling_" + c.variant + "_summary", summary);
    run.check_budget(complete);

    const auto fit = log_log_slope(grid, values, c.seed);
    Table fit_table{{"family", "slope", "ci_low", "ci_high"}, {}};
    fit_table.add({c.variant, format_double(fit.slope), format_double(fit.ci_low), format_double(fit.ci_high)});
    run.write_table("scaling_" + c.variant + "_fit", fit_table);
    run.result.summary = c.variant + " slope " + format_double(fit.slope) + " [" + format_double(fit.ci_low) +
                         ", " + format_double(fit.ci_high) + "]";
    return run.finish({{"slope", fit.slope}, {"ci_low", fit.ci_low}, {"ci_high", fit.ci_high}});
}

namespace {

int tail_statistic(const std::string& stat, int n, Rng& rng) {
    const auto t = sample_labelled_tree(n, rng);
    const int orientation = static_cast<int>(rng() & 1);
    if (stat == "label-span-excess")
        return label_span(t) - static_cast<int>(std::floor(std::pow(n, 0.25)));
    const auto m = run_pipeline(t, orientation).map;
    if (stat == "root-face-degree") return root_face_degree(m);
    if (stat == "max-face-degree") return max_face_degree(m);
    throw Error(ErrorCode::InvalidArgument, "unknown tail statistic '" + stat + "'");
}

}  // namespace

TailSummary summarize_tail(const std::vector<int>& values, int n) {
    TailSummary s;
    if (values.empty()) return s;
    int lo = values.front(), hi = values.front();
    for (int v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double total = static_cast<double>(values.size());
    std::vector<double> ks, logs;
    for (int k = std::max(lo, 0); k <= hi; ++k) {
        int count = 0;
        for (int v : values) count += v >= k;
        s.k.push_back(k);
        s.count_ge.push_back(count);
        s.p_ge.push_back(count / total);
        if (count >= 5) {
            ks.push_back(k);
            logs.push_back(std::log(count / total));
        }
    }
    s.fitted_points = static_cast<int>(ks.size());
    if (ks.size() >= 3) s.log_slope = fit_line(ks, logs).slope;
    const double threshold = std::pow(static_cast<double>(n), 0.2);
    int over = 0;
    for (int v : values) over += v > threshold;
    s.fraction_above_n02 = over / total;
    return s;
}

CommandResult cmd_tail(const ExperimentConfig& c) {
    Run run{c, {}, {}};
    const int n = first_n(c);
    const ReplicateFn<int> fn = [&](int, Rng& rng) { return tail_statistic(c.variant, n, rng); };
    const auto out = run_replicates(c.reps, c.seed, c.threads, fn, run.budget);
    std::vector<int> values;
    for (const auto& v : out)
        if (v) values.push_back(*v);
    const auto s = summarize_tail(values, n);
    Table t{{"statistic", "n", "k", "count_ge", "p_ge"}, {}};
    for (std::size_t i = 0; i < s.k.size(); ++i)
        t.add({c.variant, std::to_string(n), std::to_string(s.k[i]), std::to_string(s.count_ge[i]),
               format_double(s.p_ge[i])});
    run.write_table("tail_" + c.variant, t);
    run.check_budget(all_done(out));
    run.result.summary = c.variant + " log-tail slope " + format_double(s.log_slope) + ", P(stat > n^0.2) = " +
                         format_double(s.fraction_above_n02);
    return run.finish({{"log_slope", s.log_slope},
                       {"fitted_points", s.fitted_points},
                       {"fraction_above_n_0.2", s.fraction_above_n02}});
}

CoreSummary summarize_core(const std::vector<Rational>& dist, double alpha) {
    CoreSummary s;
    const int n = static_cast<int>(dist.size()) - 1;
    s.mode = 1;
    for (int k = 1; k <= n; ++k)
        if (dist[k] > dist[s.mode]) s.mode = k;
    const int from = std::max(1, n / 10);
    s.bulk_mode = from;
    for (int k = from; k <= n; ++k)
        if (dist[k] > dist[s.bulk_mode]) s.bulk_mode = k;
    const int at = static_cast<int>(std::floor(alpha * n));
    s.scaled_point = std::pow(static_cast<double>(n), 2.0 / 3.0) * to_double(dist[std::clamp(at, 0, n)]);
    Rational total = 0;
    for (const auto& p : dist) total += p;
    s.sums_to_one = total == 1;
    return s;
}

CommandResult cmd_core(const ExperimentConfig& c) {
    Run run{c, {}, {}};
    if (c.grid.empty()) throw Error(ErrorCode::InvalidArgument, "no sizes given");
    const Rational x = parse_rational(c.x);
    int max_exact = 0;
    for (int n : c.grid) {
        if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
        if (n <= 400) max_exact = std::max(max_exact, n);
    }
    std::optional<MapCoreSeries> series;
    std::optional<AlphaEstimate> alpha;
    if (max_exact > 0) series = maps_and_core_series(max_exact, x);
    alpha = alpha_estimate(x);

    Table dist_table{{"n", "k", "exact", "monte_carlo"}, {}};
    Table summary{{"n", "alpha_hat", "mode", "bulk_mode", "bulk_mode_over_n", "scaled_p_at_alpha_n", "tv_distance"},
                  {}};
    json report = json::object();
    report["alpha_hat"] = alpha->alpha;
    report["rho_hat"] = alpha->rho;
    bool complete = true;
    for (std::size_t gi = 0; gi < c.grid.size(); ++gi) {
        const int n = c.grid[gi];
        std::vector<double> exact;
        CoreSummary cs;
        if (n <= 400) {
            const auto d = core_size_distribution(*series, n);
            cs = summarize_core(d, alpha->alpha);
            for (const auto& p : d) exact.push_back(to_double(p));
        }
        std::vector<double> mc;
        if (c.reps > 0) {
            mc = monte_carlo_core_sizes(n, c.reps, x, derive_seed(c.seed, 2000 + gi), c.threads, run.budget);
            if (run.budget.expired()) complete = false;
        }
        for (int k = 1; k <= n; ++k)
            dist_table.add({std::to_string(n), std::to_string(k), exact.empty() ? "" : format_double(exact[k]),
                            mc.empty() ? "" : format_double(mc[k])});
        const double tv = !exact.empty() && !mc.empty() ? total_variation(exact, mc) : NAN;
        summary.add({std::to_string(n), format_double(alpha->alpha), exact.empty() ? "" : std::to_string(cs.mode),
                     exact.empty() ? "" : std::to_string(cs.bulk_mode),
                     exact.empty() ? "" : format_double(static_cast<double>(cs.bulk_mode) / n),
                     exact.empty() ? "" : format_double(cs.scaled_point), std::isnan(tv) ? "" : format_double(tv)});
        if (!complete) break;
    }
    run.write_table("core_distribution", dist_table);
    run.write_table("core_summary", summary);
    run.check_budget(complete);
    run.result.summary = "alpha_hat " + format_double(alpha->alpha);
    return run.finish(report);
}

CommandResult cmd_validate(const ExperimentConfig& c) {
    Run run{c, {}, {}};
    const int n = first_n(c);
    const std::string pipeline = c.variant.empty() ? "all" : c.variant;
    std::vector<std::pair<LabelledTree, int>> inputs;
    if (c.exhaustive) {
        for (auto& t : enumerate_labelled_trees(n))
            for (int o = 0; o < 2; ++o) inputs.emplace_back(t, o);
    }
    struct Outcome {
        std::vector<InequalityCheck> checks;
        std::string tree;
        std::string map;
    };
    const int count = c.exhaustive ? static_cast<int>(inputs.size()) : c.reps;
    const ReplicateFn<Outcome> fn = [&](int i, Rng& rng) {
        LabelledTree t;
        int orientation = 0;
        if (c.exhaustive) {
            t = inputs[i].first;
            orientation = inputs[i].second;
        } else {
            t = sample_labelled_tree(n, rng);
            orientation = static_cast<int>(rng() & 1);
        }
        const auto s = run_pipeline(t, orientation);
        Outcome o{validate_sample(s, pipeline), "", ""};
        for (const auto& ch : o.checks)
            if (!ch.ok) {
                o.tree = tree_to_text(t);
                o.map = map_to_json(s.map);
                break;
            }
        return o;
    };
    const auto out = run_replicates(count, c.seed, c.threads, fn, run.budget);

    std::map<std::string, std::pair<int, int>> tally;  // name -> (checked, failed)
    std::vector<std::string> artifacts;
    Table failures{{"replicate", "check", "detail"}, {}};
    for (int i = 0; i < count; ++i) {
        if (!out[i]) continue;
        bool failed = false;
        for (const auto& ch : out[i]->checks) {
            auto& t = tally[ch.name];
            ++t.first;
            if (!ch.ok) {
                ++t.second;
                failed = true;
                failures.add({std::to_string(i), ch.name, "\"" + ch.detail + "\""});
            }
        }
        if (failed && artifacts.size() < 20) {
            json j;
            j["replicate"] = i;
            j["tree"] = out[i]->tree;
            j["map"] = json::parse(out[i]->map);
            json bad = json::array();
            for (const auto& ch : out[i]->checks)
                if (!ch.ok) bad.push_back({{"check", ch.name}, {"detail", ch.detail}});
            j["failed"] = bad;
            const std::string name = "counterexample_" + std::to_string(i) + ".json";
            run.write(name, j.dump(2) + "\n");
            artifacts.push_back(run.path(name));
        }
    }
    Table summary{{"pipeline", "n", "check", "checked", "failed"}, {}};
    int total_failed = 0;
    json report = json::object();
    for (const auto& [name, t] : tally) {
        summary.add({pipeline, std::to_string(n), name, std::to_string(t.first), std::to_string(t.second)});
        report[name] = {{"checked", t.first}, {"failed", t.second}};
        total_failed += t.second;
    }
    run.write_table("validate_summary", summary);
    run.write_table("validate_failures", failures);
    run.check_budget(all_done(out));
    run.result.summary = std::to_string(total_failed) + " violations over " + std::to_string(count) + " samples";
    run.finish(report);
    if (total_failed > 0) {
        std::string paths;
        for (const auto& a : artifacts) paths += " " + a;
        throw Error(ErrorCode::ValidationFailed, run.result.summary + ";" + paths);
    }
    return run.result;
}

CommandResult cmd_series(const ExperimentConfig& c) {
    Run run{c, {}, {}};
    const Rational x = parse_rational(c.x);
    const int order = c.order;
    std::vector<std::string> names;
    std::vector<PowerSeries> series;
    auto source = [&]() {
        ThreeConnectedSource src;
        if (c.table_path == "zero") {
            src.kind = ThreeConnectedSource::Kind::Zero;
        } else if (!c.table_path.empty()) {
            src.kind = ThreeConnectedSource::Kind::Table;
            src.table = load_coefficient_table(c.table_path);
        }
        return src;
    };
    if (c.variant == "labelled-trees") {
        names = {"T"};
        series = {solve_scalar(labelled_tree_system(), order)};
    } else if (c.variant == "bicolored-trees") {
        names = {"f"};
        series = {solve_scalar(bicolored_tree_system(x, order), order)};
    } else if (c.variant == "maps") {
        auto s = maps_and_core_series(order, x);
        names = {"M", "H", "C"};
        series = {s.maps, s.substitution, s.cores};
    } else if (c.variant == "plane-networks") {
        auto p = plane_network_system(order, x, source());
        names = {"N", "S", "P", "N3"};
        series = {p.networks, p.series, p.parallel, p.polyhedral};
    } else if (c.variant == "planar-networks") {
        auto p = planar_network_system(order, x, source());
        names = {"D", "S", "P", "H", "D_closed"};
        series = {p.networks, p.series, p.parallel, p.polyhedral, p.networks_closed};
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown system '" + c.variant + "'");
    }
    Table t{{"n"}, {}};
    for (const auto& nm : names) t.columns.push_back(nm);
    for (int i = 0; i <= order; ++i) {
        std::vector<std::string> row{std::to_string(i)};
        for (const auto& s : series) row.push_back(to_string(s[i]));
        t.add(std::move(row));
    }
    run.write_table("series_" + c.variant, t);
    json report = json::object();
    for (std::size_t i = 0; i < names.size(); ++i) {
        try {
            const auto est = estimate_growth(series[i]);
            report[names[i]] = {{"rho", est.rho}, {"exponent", est.exponent}, {"depth", est.depth}};
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InsufficientData) throw;
            report[names[i]] = {{"estimate", "insufficient data"}};
        }
    }
    run.result.summary = c.variant + " to order " + std::to_string(order);
    return run.finish(report);
}

}  // namespace mapforge
