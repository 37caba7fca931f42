#include "mapforge/asymptotics.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "mapforge/error.hpp"

namespace mapforge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kDepth = 3;
constexpr int kMinCoefficients = 20;

double log_abs_z(const mpz_class& v) {
    long e = 0;
    const double d = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0);
}

// Least squares for y ~ c0 + c1 log n + c2 / n.
std::array<double, 3> fit(const std::vector<double>& ns, const std::vector<double>& ys) {
    double a[3][4] = {};
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double row[3] = {1.0, std::log(ns[i]), 1.0 / ns[i]};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) a[r][c] += row[r] * row[c];
            a[r][3] += row[r] * ys[i];
        }
    }
    for (int p = 0; p < 3; ++p) {
        int best = p;
        for (int r = p + 1; r < 3; ++r)
            if (std::fabs(a[r][p]) > std::fabs(a[best][p])) best = r;
        for (int c = 0; c < 4; ++c) std::swap(a[p][c], a[best][c]);
        for (int r = 0; r < 3; ++r) {
            if (r == p) continue;
            const double f = a[r][p] / a[p][p];
            for (int c = p; c < 4; ++c) a[r][c] -= f * a[p][c];
        }
    }
    return {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
}

// sum_{m>n} (m/n)^e r^(m-n), or infinity when it diverges.
double power_tail(int n, double e, double r) {
    if (r > 1 || (r == 1 && e >= -1)) return kInf;
    double sum = 0;
    const int limit = n + 200000;
    double geom = 1;
    for (int m = n + 1; m <= limit; ++m) {
        geom *= r;
        const double t = std::pow(static_cast<double>(m) / n, e) * geom;
        sum += t;
        if (t < 1e-18 * sum) return sum;
    }
    if (r == 1) sum += n * std::pow(static_cast<double>(limit) / n, e + 1) / (-e - 1);
    return sum;
}

}  // namespace

double log_abs(const Rational& q) {
    return log_abs_z(q.get_num()) - log_abs_z(q.get_den());
}

AsymptoticEstimate estimate_growth(const std::vector<Rational>& coeffs) {
    int last = static_cast<int>(coeffs.size()) - 1;
    while (last >= 0 && coeffs[last] == 0) --last;
    int first = last;
    while (first > 0 && coeffs[first - 1] != 0) --first;
    if (last < 0 || last - first + 1 < kMinCoefficients)
        throw Error(ErrorCode::InsufficientData,
                    "need " + std::to_string(kMinCoefficients) + " consecutive nonzero coefficients");

    AsymptoticEstimate est;
    est.depth = kDepth;
    est.first_index = first + 1;
    std::vector<double> ratio;
    for (int n = first + 1; n <= last; ++n) ratio.push_back(to_double(Rational(coeffs[n] / coeffs[n - 1])));
    est.richardson.push_back(ratio);
    for (int k = 1; k <= kDepth; ++k) {
        std::vector<double> row;
        for (std::size_t i = 0; i + k < ratio.size(); ++i) {
            double v = 0, fact_j = 1;
            for (int j = 0; j <= k; ++j) {
                if (j > 0) fact_j *= j;
                double fact_kj = 1;
                for (int t = 2; t <= k - j; ++t) fact_kj *= t;
                const double n = est.first_index + static_cast<double>(i) + j;
                const double sign = (k + j) % 2 == 0 ? 1 : -1;
                v += sign * ratio[i + j] * std::pow(n, k) / (fact_j * fact_kj);
            }
            row.push_back(v);
        }
        est.richardson.push_back(std::move(row));
    }
    est.rho = 1.0 / est.richardson.back().back();

    std::vector<double> ns, ys;
    const double log_rho = std::log(est.rho);
    for (int n = std::max(first, last / 2); n <= last; ++n) {
        if (n == 0) continue;
        ns.push_back(n);
        ys.push_back(log_abs(coeffs[n]) + n * log_rho);
    }
    est.exponent = fit(ns, ys)[1];
    return est;
}

Interval evaluate_singular(const PowerSeries& f, double x) { return evaluate_series(f, x, false); }

Interval evaluate_at_singularity(const PowerSeries& f, double rho) { return evaluate_series(f, rho, true); }

Interval evaluate_series(const PowerSeries& f, double x, bool on_singularity) {
    if (x < 0) throw Error(ErrorCode::DomainError, "evaluation point must be nonnegative");
    Interval out;
    const int order = f.order();
    int last = -1;
    for (int n = 0; n <= order; ++n) {
        if (f[n] == 0) continue;
        last = n;
        if (x == 0) {
            if (n == 0) out.lo += to_double(f[0]);
            continue;
        }
        const double t = std::exp(log_abs(f[n]) + n * std::log(x));
        out.lo += sgn(f[n]) * t;
    }
    out.estimate = out.hi = out.lo;
    if (x == 0 || last <= 0 || f[last - 1] == 0) return out;

    const double last_term = std::exp(log_abs(f[last]) + last * std::log(x));
    const double q = to_double(Rational(f[last] / f[last - 1])) * x;
    const double geometric = q < 1 ? last_term * q / (1 - q) : kInf;
    try {
        const auto est = estimate_growth(f);
        // Points within estimation noise of the singularity count as on it.
        double r = on_singularity ? 1.0 : x / est.rho;
        if (std::fabs(r - 1) < 1e-6) r = 1;
        out.estimate += last_term * power_tail(last, est.exponent, r);
        out.hi += std::max(geometric, last_term * power_tail(last, est.exponent + 0.1, r));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InsufficientData) throw;
        out.estimate += geometric;
        out.hi += geometric;
    }
    return out;
}

double saddle_bound(const PowerSeries& f, double x, int n, double rho_hat) {
    if (x <= 0) throw Error(ErrorCode::DomainError, "saddle point must be positive");
    if (rho_hat <= 0) {
        try {
            rho_hat = estimate_growth(f).rho;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InsufficientData) throw;
            int last = f.order();
            while (last >= 0 && f[last] == 0) --last;
            rho_hat = (last > 0 && f[last - 1] != 0) ? to_double(Rational(f[last - 1] / f[last])) : kInf;
        }
    }
    if (x >= rho_hat)
        throw Error(ErrorCode::DomainError, "x=" + std::to_string(x) + " not below rho=" + std::to_string(rho_hat));
    const double v = evaluate_singular(f, x).hi;
    return std::exp(std::log(v) - n * std::log(x));
}

double bivariate_saddle_bound(const BivariateTable& a, double rho, double u0, int n, int k) {
    if (rho <= 0 || u0 <= 1) throw Error(ErrorCode::DomainError, "need rho > 0 and u0 > 1");
    double total = 0;
    for (std::size_t m = 0; m < a.size(); ++m)
        for (std::size_t j = 0; j < a[m].size(); ++j)
            if (a[m][j] != 0) total += a[m][j] * std::pow(rho, m) * std::pow(u0, j);
    if (!std::isfinite(total)) throw Error(ErrorCode::DomainError, "A(rho,u0) is not finite");
    return total * std::pow(rho, -n) * std::pow(u0, -k);
}

double tail_bound(const BivariateTable& a, double rho, double u0, int n, int k) {
    if (n < 0 || n >= static_cast<int>(a.size())) throw Error(ErrorCode::DomainError, "size outside table");
    double row = 0;
    for (double v : a[n]) row += v;
    if (row <= 0) throw Error(ErrorCode::DomainError, "empty row");
    return bivariate_saddle_bound(a, rho, u0, n, k) / row;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Admissible: return "admissible";
        case Verdict::Critical: return "critical";
        case Verdict::Supercritical: return "supercritical";
    }
    return "unknown";
}

double spectral_radius(const std::vector<std::vector<double>>& a) {
    const std::size_t m = a.size();
    if (m == 0) return 0;
    if (m == 1) return std::fabs(a[0][0]);
    std::vector<double> v(m, 1.0), w(m);
    double lambda = 0;
    for (int it = 0; it < 2000; ++it) {
        double norm = 0;
        for (std::size_t i = 0; i < m; ++i) {
            w[i] = 0;
            for (std::size_t j = 0; j < m; ++j) w[i] += a[i][j] * v[j];
            norm = std::max(norm, std::fabs(w[i]));
        }
        if (norm == 0) return 0;
        for (std::size_t i = 0; i < m; ++i) w[i] /= norm;
        const bool done = std::fabs(norm - lambda) < 1e-13 * norm;
        lambda = norm;
        v.swap(w);
        if (done) break;
    }
    return lambda;
}

CriticalityReport criticality_check(const SystemSpec& spec, int order, double tolerance) {
    const auto y = solve_vector(spec, order);
    const auto est = estimate_growth(y.front());
    CriticalityReport rep;
    rep.rho = est.rho;
    for (const auto& s : y) rep.values.push_back(evaluate_at_singularity(s, est.rho).estimate);
    rep.spectral_radius = spectral_radius(jacobian(spec, rep.rho, rep.values));
    rep.derivative_finite = est.exponent < -2;
    if (std::fabs(rep.spectral_radius - 1) <= tolerance)
        rep.verdict = Verdict::Admissible;
    else if (rep.spectral_radius < 1)
        rep.verdict = Verdict::Critical;
    else
        rep.verdict = Verdict::Supercritical;
    return rep;
}

}  // namespace mapforge
