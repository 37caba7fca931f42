#include "mapforge/gf_families.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "mapforge/error.hpp"
#include "mapforge/io.hpp"

namespace mapforge {

namespace {

const Rational kOne = 1;

}  // namespace

SystemSpec labelled_tree_system() {
    const Expr y = Expr::var(0);
    return {"labelled-trees", {"T"}, {Expr::z() / (kOne - Rational(3) * y)}, 1};
}

PowerSeries plane_tree_series(int order) {
    // T = 1/(1 - zT) has T_n = Catalan(n).
    PowerSeries t(order);
    mpz_class c = 1;
    for (int n = 0; n <= order; ++n) {
        t[n] = c;
        c = c * 2 * (2 * n + 1) / (n + 2);
    }
    return t;
}

SystemSpec bicolored_tree_system(const Rational& x, int order) {
    const PowerSeries trees = plane_tree_series(order);
    const Expr z = Expr::z();
    const Expr f = Expr::var(0);
    const Expr white_seq = kOne - Rational(2) * f;
    const Expr g = z / white_seq * Expr::apply(trees, z / (white_seq * white_seq));
    const Expr black_seq = kOne - Rational(2) * g;
    const Expr rhs = x * z / black_seq * Expr::apply(trees, x * z / (black_seq * black_seq));
    return {"bicolored-trees", {"f"}, {rhs}, x};
}

PowerSeries rooted_maps_closed_form(int order) {
    PowerSeries a(order);
    mpz_class v = 1;  // 2 3^m (2m)! / (m! (m+2)!) built incrementally
    for (int m = 0; m <= order; ++m) {
        a[m] = v;
        v = v * 3 * 2 * (2 * m + 1) / (m + 3);
    }
    return a;
}

PowerSeries rooted_maps_weighted(int order, const Rational& x) {
    if (x <= 0) throw Error(ErrorCode::DomainError, "vertex weight must be positive");
    // Scaled by q^(n+1) with x = p/q so that all coefficients are integers.
    const mpz_class p = x.get_num(), q = x.get_den();
    std::vector<std::vector<mpz_class>> w(order + 1);
    w[0] = {p};
    PowerSeries out(order);
    mpz_class scale = q;
    out[0] = Rational(p, q);
    for (int n = 1; n <= order; ++n) {
        auto& cur = w[n];
        cur.assign(2 * n + 1, 0);
        // Root edge is an isthmus: u^2 times a product of two maps.
        for (int i = 0; i <= n - 1; ++i) {
            const int j = n - 1 - i;
            if (i > j) break;
            const auto& a = w[i];
            const auto& b = w[j];
            const int twice = i < j ? 2 : 1;
            for (std::size_t s = 0; s < a.size(); ++s) {
                if (a[s] == 0) continue;
                const mpz_class as = twice * a[s];
                for (std::size_t t = 0; t < b.size(); ++t)
                    mpz_addmul(cur[s + t + 2].get_mpz_t(), as.get_mpz_t(), b[t].get_mpz_t());
            }
        }
        // Root edge is not an isthmus: split the root face of a smaller map.
        const auto& prev = w[n - 1];
        mpz_class suffix = 0;
        for (int k = static_cast<int>(prev.size()) - 1; k >= 0; --k) {
            suffix += prev[k];
            cur[k + 1] += q * suffix;
        }
        scale *= q;
        mpz_class total = 0;
        for (const auto& c : cur) total += c;
        out[n] = Rational(total, scale);
        out[n].canonicalize();
    }
    return out;
}

namespace {

MapCoreSeries maps_and_substitution(int order, const Rational& x) {
    const PowerSeries all = x == 1 ? rooted_maps_closed_form(order) : rooted_maps_weighted(order, x);
    MapCoreSeries s;
    s.maps = PowerSeries(order);
    for (int n = 1; n <= order; ++n) s.maps[n] = all[n] / x;
    const PowerSeries base = PowerSeries::constant(1, order) + s.maps;
    s.substitution = (base * base).shifted(1);
    return s;
}

}  // namespace

MapCoreSeries maps_and_core_series(int order, const Rational& x) {
    auto s = maps_and_substitution(order, x);
    s.cores = compose_with_inverse(s.maps, s.substitution);
    return s;
}

std::vector<Rational> core_size_distribution(const MapCoreSeries& s, int n) {
    if (n < 1 || n > s.maps.order()) throw Error(ErrorCode::InvalidArgument, "n outside series order");
    const auto powers = power_coefficients(s.substitution, n);
    std::vector<Rational> dist(n + 1);
    for (int k = 1; k <= n; ++k) dist[k] = s.cores[k] * powers[k] / s.maps[n];
    return dist;
}

std::vector<Rational> core_size_distribution(int n, const Rational& x, int max_n) {
    if (n > max_n)
        throw Error(ErrorCode::BudgetExceeded,
                    "exact core distribution capped at n=" + std::to_string(max_n));
    return core_size_distribution(maps_and_core_series(n, x), n);
}

AlphaEstimate alpha_estimate(const MapCoreSeries& s) {
    AlphaEstimate a;
    a.rho = estimate_growth(s.maps).rho;
    a.h_at_rho = evaluate_at_singularity(s.substitution, a.rho);
    a.h_prime_at_rho = evaluate_at_singularity(s.substitution.derivative(), a.rho);
    a.alpha = a.h_at_rho.estimate / (a.rho * a.h_prime_at_rho.estimate);
    if (!(a.alpha > 0) || !std::isfinite(a.alpha))
        throw Error(ErrorCode::DomainError, "alpha estimate is not a positive number");
    return a;
}

AlphaEstimate alpha_estimate(const Rational& x, int order) {
    if (order <= 0) order = x == 1 ? 400 : 120;
    return alpha_estimate(maps_and_substitution(order, x));
}

CoefficientTable parse_coefficient_table(const std::string& text) {
    CoefficientTable t;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw MalformedInput(line_no, "expected n,coefficient");
        const std::string key = line.substr(0, comma);
        if (key == "n") continue;
        int n = 0;
        Rational c;
        try {
            std::size_t used = 0;
            n = std::stoi(key, &used);
            if (used != key.size() || n < 0) throw std::invalid_argument(key);
            c = parse_rational(line.substr(comma + 1));
        } catch (const MalformedInput&) {
            throw;
        } catch (const std::exception&) {
            throw MalformedInput(line_no, "bad table entry '" + line + "'");
        }
        if (n >= static_cast<int>(t.coeffs.size())) t.coeffs.resize(n + 1, 0);
        t.coeffs[n] = c;
        t.valid_order = std::max(t.valid_order, n);
    }
    return t;
}

CoefficientTable load_coefficient_table(const std::string& path) {
    return parse_coefficient_table(read_file(path));
}

PowerSeries three_connected_series(const ThreeConnectedSource& src, bool planar, int order,
                                   const Rational& x) {
    PowerSeries t(order);
    if (src.kind == ThreeConnectedSource::Kind::Zero) return t;

    // Highest number of non-root edges we need exactly.
    const int need = src.max_edges > 0 ? std::min(order, src.max_edges - 1) : order;
    std::vector<Rational> known;
    int valid = -1;
    Rational weight = 1;
    if (src.kind == ThreeConnectedSource::Kind::BuiltIn) {
        // Only K4 has at most 6 edges; its two vertices off the root edge carry x.
        known.assign(6, 0);
        known[5] = 1;
        valid = 5;
        weight = x * x;
    } else {
        if (!src.table) throw Error(ErrorCode::MissingTable, "no 3-connected table given");
        if (x != 1)
            throw Error(ErrorCode::MissingTable, "coefficient table carries no vertex counts; only x=1");
        known = src.table->coeffs;
        valid = src.table->valid_order;
    }
    if (need > valid)
        throw Error(ErrorCode::MissingTable, "3-connected coefficients known up to " +
                                                 std::to_string(valid) + " non-root edges, need " +
                                                 std::to_string(need));
    for (int n = 0; n <= need && n < static_cast<int>(known.size()); ++n) {
        t[n] = known[n] * weight;
        if (planar) t[n] /= 2;
    }
    return t;
}

SystemSpec plane_network_spec(const PowerSeries& t, const Rational& x) {
    const Expr z = Expr::z();
    const Expr n = Expr::var(0);
    const Expr s = Expr::var(1), p = Expr::var(2), h = Expr::var(3);
    return {"plane-networks",
            {"N", "S", "P", "N3"},
            {z + s + p + h, x * n * n / (kOne + x * n), n * n / (kOne + n), Expr::apply(t, n)},
            x};
}

SystemSpec planar_network_spec(const PowerSeries& t, const Rational& x) {
    const Expr z = Expr::z();
    const Expr d = Expr::var(0);
    const Expr s = Expr::var(1), p = Expr::var(2), h = Expr::var(3);
    return {"planar-networks",
            {"D", "S", "P", "H"},
            {z + s + p + h, (z + p + h) * Expr::constant(x) * d,
             (kOne + z) * exp(s + h) - kOne - z - s - h, Expr::apply(t, d)},
            x};
}

SystemSpec planar_network_closed_spec(const PowerSeries& t, const Rational& x) {
    const Expr z = Expr::z();
    const Expr d = Expr::var(0);
    return {"planar-networks-closed",
            {"D"},
            {(kOne + z) * exp(x * d * d / (kOne + x * d) + Expr::apply(t, d)) - kOne},
            x};
}

PlaneNetworks plane_network_system(int order, const Rational& x, const ThreeConnectedSource& src) {
    const auto t = three_connected_series(src, false, order, x);
    auto y = solve_vector(plane_network_spec(t, x), order);
    return {y[0], y[1], y[2], y[3]};
}

PlanarNetworks planar_network_system(int order, const Rational& x, const ThreeConnectedSource& src) {
    const auto t = three_connected_series(src, true, order, x);
    auto y = solve_vector(planar_network_spec(t, x), order);
    PlanarNetworks out{y[0], y[1], y[2], y[3], {}};
    out.networks_closed = solve_scalar(planar_network_closed_spec(t, x), order);
    return out;
}

namespace {

double poly_value(const PowerSeries& g, double u) {
    double v = 0;
    for (int i = g.order(); i >= 0; --i) v = v * u + to_double(g[i]);
    return v;
}

double poly_derivative(const PowerSeries& g, double u) {
    double v = 0;
    for (int i = g.order(); i >= 1; --i) v = v * u + i * to_double(g[i]);
    return v;
}

}  // namespace

BlockTruncation block_system_truncation(const std::vector<Rational>& g, int k, int order) {
    if (k < 0 || static_cast<int>(g.size()) < k + 1)
        throw Error(ErrorCode::MissingTable, "need g coefficients up to degree " + std::to_string(k));
    constexpr double kInf = std::numeric_limits<double>::infinity();
    if (g[0] != 0) throw Error(ErrorCode::DomainError, "g must vanish at 0");
    PowerSeries gk(k);
    for (int i = 0; i <= k; ++i) gk[i] = g[i];
    PowerSeries gk_wide(order);
    for (int i = 0; i <= std::min(k, order); ++i) gk_wide[i] = g[i];

    BlockTruncation out;
    const Expr y = Expr::var(0);
    const SystemSpec spec{"block-truncation", {"E"}, {Expr::z() * exp(Expr::apply(gk, y))}, 1};
    out.e_k = solve_scalar(spec, order);
    out.phi_k = PowerSeries::z(order) * exp(-gk_wide);

    try {
        out.r_hat = estimate_growth(g).rho;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InsufficientData) throw;
        out.r_hat = kInf;
    }
    auto phi = [&](double v) { return v * std::exp(-poly_value(gk, v)); };
    auto phi_prime = [&](double v) { return std::exp(-poly_value(gk, v)) * (1 - v * poly_derivative(gk, v)); };

    const double lk = k >= 2 ? k * std::log(static_cast<double>(k)) : 1.0;
    out.u_k = out.r_hat * (1 + 1 / lk);
    if (std::isfinite(out.u_k)) {
        out.phi_k_at_u = phi(out.u_k);
        out.phi_k_prime_at_u = phi_prime(out.u_k);
    }
    out.fallback = !std::isfinite(out.u_k) || !(out.phi_k_prime_at_u > 0);

    // Right end of the region where phi_k is increasing.
    double hi = 1e6;
    if (phi_prime(hi) <= 0) {
        double lo = 0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (phi_prime(mid) > 0)
                lo = mid;
            else
                hi = mid;
        }
        hi = lo;
    }
    for (int n = 0; n <= order; ++n) {
        if (!out.fallback) {
            out.bound.push_back(out.u_k * std::pow(out.phi_k_at_u, -n));
            continue;
        }
        // Minimise log u - n log phi_k(u) over (0, hi] by golden section in log u.
        auto cost = [&](double lu) { const double v = std::exp(lu); return lu - n * std::log(phi(v)); };
        double a = std::log(1e-9), b = std::log(hi);
        const double r = 0.5 * (std::sqrt(5.0) - 1);
        for (int it = 0; it < 200; ++it) {
            const double c = b - r * (b - a), d = a + r * (b - a);
            if (cost(c) < cost(d))
                b = d;
            else
                a = c;
        }
        out.bound.push_back(std::exp(cost(0.5 * (a + b))));
    }
    return out;
}

}  // namespace mapforge
