#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mapforge/bijection.hpp"
#include "mapforge/error.hpp"
#include "mapforge/power_series.hpp"
#include "mapforge/rng.hpp"

namespace mapforge {

inline constexpr const char* kVersion = "0.3.0";

struct ExperimentConfig {
    std::string experiment;
    /// Family, statistic, sample kind, pipeline or system name.
    std::string variant;
    std::vector<int> grid;
    int reps = 100;
    std::uint64_t seed = 1;
    std::string x = "1";
    int threads = 1;
    std::string out_dir = ".";
    std::string format = "csv";
    bool exact = true;
    bool exhaustive = false;
    int order = 30;
    std::string table_path;
};

/// FNV-1a over the canonical parameter string (thread count excluded).
std::uint64_t config_hash(const ExperimentConfig& c);
std::string canonical_parameters(const ExperimentConfig& c);
std::string hex64(std::uint64_t v);

/// Wall-clock cap from MAPFORGE_BUDGET_SECS (no cap when unset or invalid).
class Budget {
public:
    Budget();
    explicit Budget(double seconds);
    bool expired() const;
    double elapsed() const;

private:
    std::chrono::steady_clock::time_point start_;
    double limit_ = -1;
};

/// Replicate loop: replicate i always draws from stream i of the seed, so
/// results do not depend on the thread count. Replicates skipped because the
/// budget ran out are left empty.
template <class T>
using ReplicateFn = std::function<T(int replicate, Rng& rng)>;

template <class T>
std::vector<std::optional<T>> run_replicates_serial(int reps, std::uint64_t seed, const ReplicateFn<T>& fn,
                                                    const Budget& budget = Budget(-1)) {
    std::vector<std::optional<T>> out(reps);
    for (int i = 0; i < reps; ++i) {
        if (budget.expired()) break;
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
        out[i] = fn(i, rng);
    }
    return out;
}

template <class T>
std::vector<std::optional<T>> run_replicates_parallel(int reps, std::uint64_t seed, int threads,
                                                      const ReplicateFn<T>& fn,
                                                      const Budget& budget = Budget(-1)) {
    std::vector<std::optional<T>> out(reps);
    std::vector<std::exception_ptr> errors(reps);
    if (threads < 1) threads = 1;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < reps; ++i) {
        if (budget.expired()) continue;
        try {
            Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
            out[i] = fn(i, rng);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

template <class T>
std::vector<std::optional<T>> run_replicates(int reps, std::uint64_t seed, int threads, const ReplicateFn<T>& fn,
                                             const Budget& budget = Budget(-1)) {
    return threads <= 1 ? run_replicates_serial(reps, seed, fn, budget)
                        : run_replicates_parallel(reps, seed, threads, fn, budget);
}

// ---- statistics ------------------------------------------------------------

double mean(const std::vector<double>& v);
/// Linear-interpolated quantile, p in [0,1].
double quantile(std::vector<double> v, double p);

struct LineFit {
    double slope = 0;
    double intercept = 0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct SlopeEstimate {
    double slope = 0;
    double ci_low = 0;
    double ci_high = 0;
};

/// Slope of log mean(values[i]) against log n[i]; percentile bootstrap over
/// replicates within each n.
SlopeEstimate log_log_slope(const std::vector<int>& ns, const std::vector<std::vector<double>>& values,
                            std::uint64_t seed, int resamples = 400);

// ---- tabular output --------------------------------------------------------

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
    std::string to_csv() const;
    std::string to_json() const;
};

std::string format_double(double v);

// ---- commands --------------------------------------------------------------

struct CommandResult {
    std::vector<std::string> files;
    std::string summary;
    /// Extra manifest fields as a JSON object text.
    std::string report_json = "{}";
};

/// Each command writes its outputs and a manifest under config.out_dir.
/// Validation failures throw Error(ValidationFailed); an exhausted budget
/// flushes partial results, then throws Error(BudgetExceeded).
CommandResult cmd_sample(const ExperimentConfig& c);
CommandResult cmd_scaling(const ExperimentConfig& c);
CommandResult cmd_tail(const ExperimentConfig& c);
CommandResult cmd_core(const ExperimentConfig& c);
CommandResult cmd_validate(const ExperimentConfig& c);
CommandResult cmd_series(const ExperimentConfig& c);

/// Exit status for an error code: 2 validation failure, 3 budget, 1 otherwise.
int exit_code_for(ErrorCode code);

// ---- measurement kernels (shared with the acceptance binary) ---------------

/// One replicate of a scaling family at size n.
double measure_scaling(const std::string& family, int n, Rng& rng, bool exact);

/// Monte Carlo core-size histogram for uniform maps with n edges, reweighted
/// by x^(vertices-1). Entry k is the weighted frequency of core size k.
std::vector<double> monte_carlo_core_sizes(int n, int reps, const Rational& x, std::uint64_t seed,
                                           int threads, const Budget& budget = Budget(-1));

/// Checks for one pipeline sample; pipeline is "bijection", "decomposition" or "all".
std::vector<InequalityCheck> validate_sample(const PipelineSample& s, const std::string& pipeline);

double total_variation(const std::vector<double>& p, const std::vector<double>& q);

struct TailSummary {
    std::vector<int> k;
    std::vector<int> count_ge;
    std::vector<double> p_ge;
    /// Slope of log P(stat >= k) in k over points with at least 5 hits.
    double log_slope = 0;
    int fitted_points = 0;
    double fraction_above_n02 = 0;
};
TailSummary summarize_tail(const std::vector<int>& values, int n);

struct CoreSummary {
    int mode = 0;
    /// Mode restricted to k >= n/10, away from the degenerate small cores.
    int bulk_mode = 0;
    /// n^(2/3) P(X_n = floor(alpha n)).
    double scaled_point = 0;
    bool sums_to_one = false;
};
CoreSummary summarize_core(const std::vector<Rational>& dist, double alpha);

}  // namespace mapforge
