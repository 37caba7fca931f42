#pragma once

#include <vector>

#include "mapforge/power_series.hpp"
#include "mapforge/system.hpp"

namespace mapforge {

/// Growth estimate for f_n ~ c rho^-n n^exponent.
struct AsymptoticEstimate {
    double rho = 0;
    double exponent = 0;
    int depth = 0;
    /// richardson[k] holds the depth-k extrapolants of f_n / f_{n-1}, one per n.
    std::vector<std::vector<double>> richardson;
    int first_index = 0;
};

/// Needs at least 20 trailing nonzero coefficients (InsufficientData).
AsymptoticEstimate estimate_growth(const std::vector<Rational>& coeffs);
inline AsymptoticEstimate estimate_growth(const PowerSeries& f) {
    return estimate_growth(f.coefficients());
}

/// log|q| without overflow.
double log_abs(const Rational& q);

/// lo is the partial sum, estimate adds the fitted tail, hi adds a
/// pessimistic tail (exponent loosened by 0.1, or the last-ratio geometric
/// tail, whichever is larger).
struct Interval {
    double lo = 0;
    double estimate = 0;
    double hi = 0;
};

/// f(x) for nonnegative coefficients.
Interval evaluate_singular(const PowerSeries& f, double x);
/// f at its own singularity rho (estimated from another series), so the
/// fitted tail is summed without the geometric factor.
Interval evaluate_at_singularity(const PowerSeries& f, double rho);
Interval evaluate_series(const PowerSeries& f, double x, bool on_singularity);

/// f(x) x^-n using the upper end of evaluate_singular. DomainError if
/// x >= rho_hat; rho_hat <= 0 means estimate it from f (or its last ratio).
double saddle_bound(const PowerSeries& f, double x, int n, double rho_hat = 0);

/// Bivariate data a[n][k] (weights of size n with parameter value k).
using BivariateTable = std::vector<std::vector<double>>;

/// A(rho,u0) rho^-n u0^-k, the bound on [z^n u^k]A.
double bivariate_saddle_bound(const BivariateTable& a, double rho, double u0, int n, int k);
/// Probability bound: bivariate_saddle_bound / [z^n]A(z,1).
double tail_bound(const BivariateTable& a, double rho, double u0, int n, int k);

enum class Verdict { Admissible, Critical, Supercritical };
const char* to_string(Verdict v);

struct CriticalityReport {
    double rho = 0;
    std::vector<double> values;
    double spectral_radius = 0;
    bool derivative_finite = false;
    Verdict verdict = Verdict::Admissible;
};

/// Solves the system to `order`, estimates rho from the first unknown and
/// examines the Jacobian at (rho, y(rho)).
CriticalityReport criticality_check(const SystemSpec& spec, int order = 200,
                                    double tolerance = 0.02);

/// Largest eigenvalue of a nonnegative matrix by power iteration.
double spectral_radius(const std::vector<std::vector<double>>& a);

}  // namespace mapforge
