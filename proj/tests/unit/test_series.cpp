#include <doctest.h>

#include <cmath>
#include <fstream>

#include "mapforge/asymptotics.hpp"
#include "mapforge/decomposition.hpp"
#include "mapforge/error.hpp"
#include "mapforge/gf_families.hpp"
#include "mapforge/map_enum.hpp"
#include "mapforge/power_series.hpp"
#include "mapforge/system.hpp"
#include "mapforge/tree.hpp"

using namespace mapforge;

namespace {

Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Rational power(const Rational& x, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

// Sum of x^V over rooted maps with n edges, by enumeration.
Rational weighted_map_count(int n, const Rational& x) {
    Rational s = 0;
    for (const auto& m : enumerate_rooted_maps(n)) s += power(x, m.num_vertices());
    return s;
}

// Core-size law by enumeration, maps weighted by x^V.
std::vector<Rational> enumerated_core_law(int n, const Rational& x) {
    std::vector<Rational> law(n + 1, Rational(0));
    Rational total = 0;
    for (const auto& m : enumerate_rooted_maps(n)) {
        const Rational w = power(x, m.num_vertices());
        law[two_connected_core(m).core.num_edges()] += w;
        total += w;
    }
    for (auto& p : law) p /= total;
    return law;
}

// Series-parallel networks with no polyhedral part, iterated directly:
// D = (1+z) exp(x D^2 / (1 + x D)) - 1.
PowerSeries series_parallel_oracle(int order, const Rational& x) {
    PowerSeries d(order);
    const auto one = PowerSeries::constant(1, order);
    const auto onez = one + PowerSeries::z(order);
    for (int it = 0; it <= order + 2; ++it) {
        const PowerSeries xd = d * x;
        d = onez * exp(xd * d / (one + xd)) - one;
    }
    return d;
}

}  // namespace

TEST_CASE("ring operations") {
    const int order = 12;
    const auto z = PowerSeries::z(order);
    const auto one = PowerSeries::constant(1, order);
    // y = z/(1-y) has y_n = Catalan(n-1)
    const auto y = invert_functional(z - z * z);
    for (int n = 1; n <= order; ++n) CHECK(y[n] == Rational(catalan(n - 1)));
    const auto f = z + z * z * Rational(3);
    CHECK(log(exp(f)) == f);
    CHECK(exp(log(one + f)) == one + f);
    CHECK((one / (one - z))[7] == 1);
    CHECK(compose(one / (one - z), z * z)[6] == 1);
    CHECK(compose(one / (one - z), z * z)[5] == 0);
    CHECK_THROWS_AS(reciprocal(z), Error);
}

TEST_CASE("scalar solver reproduces Catalan numbers") {
    const Expr y = Expr::var(0);
    const SystemSpec spec{"catalan", {"y"}, {Expr::z() / (Rational(1) - y)}, 1};
    const auto s = solve_scalar(spec, 15);
    for (int n = 1; n <= 15; ++n) CHECK(s[n] == Rational(catalan(n - 1)));
    const SystemSpec bad{"bad", {"y"}, {Rational(1) + y}, 1};
    CHECK_THROWS_AS(solve_scalar(bad, 5), Error);
}

TEST_CASE("labelled tree series") {
    const auto t = solve_scalar(labelled_tree_system(), 12);
    for (int n = 1; n <= 12; ++n) {
        const Rational expect = Rational(catalan(n - 1)) * power(3, n - 1);
        CHECK(t[n] == expect);
    }
    CHECK(t[4] == 135);
}

TEST_CASE("height truncations increase to the solution") {
    const int order = 10;
    const auto spec = labelled_tree_system();
    const auto full = solve_scalar(spec, order);
    const auto h = height_truncations(spec, order, order + 2);
    CHECK(h[1] == PowerSeries::z(order));
    for (std::size_t k = 1; k < h.size(); ++k)
        for (int n = 0; n <= order; ++n) CHECK(h[k][n] >= h[k - 1][n]);
    CHECK(h.back() == full);
    // coefficient n is exact from height n on
    for (int n = 1; n <= order; ++n) CHECK(h[n][n] == full[n]);

    const auto tau = height_values(spec, 1.0 / 12, 400);
    for (std::size_t k = 1; k < tau.size(); ++k) CHECK(tau[k] >= tau[k - 1]);
    CHECK(tau.back() == doctest::Approx(1.0 / 6).epsilon(0.01));
}

TEST_CASE("saddle and tail bounds") {
    const auto geometric = PowerSeries::from_integers(std::vector<long long>(40, 1), 39);
    const double b = saddle_bound(geometric, 0.5, 3);
    CHECK(b >= 16);
    CHECK(b == doctest::Approx(16).epsilon(1e-3));
    CHECK_THROWS_AS(saddle_bound(geometric, 1.5, 3), Error);

    // a_{n,k} = binom(n,k): row sum 2^n, bound at rho=1/2, u0=2 is weak but valid
    BivariateTable a(8);
    for (int n = 0; n < 8; ++n) {
        a[n].assign(n + 1, 1.0);
        for (int k = 1; k < n; ++k) a[n][k] = a[n - 1][k - 1] + a[n - 1][k];
    }
    for (int k = 0; k <= 7; ++k) {
        double tail = 0;
        for (int j = k; j <= 7; ++j) tail += a[7][j];
        CHECK(tail_bound(a, 0.3, 1.5, 7, k) >= tail / 128);
    }
    CHECK_THROWS_AS(bivariate_saddle_bound(a, 0.3, 0.9, 7, 1), Error);
}

TEST_CASE("growth estimates on known sequences") {
    const auto catalan_est = estimate_growth(plane_tree_series(120));
    CHECK(catalan_est.rho == doctest::Approx(0.25).epsilon(1e-4));
    CHECK(catalan_est.exponent == doctest::Approx(-1.5).epsilon(1e-3));
    const auto maps_est = estimate_growth(rooted_maps_closed_form(200));
    CHECK(maps_est.rho == doctest::Approx(1.0 / 12).epsilon(1e-4));
    CHECK(maps_est.exponent == doctest::Approx(-2.5).epsilon(2e-3));
    CHECK_THROWS_AS(estimate_growth(plane_tree_series(10)), Error);
}

TEST_CASE("criticality of the labelled tree system") {
    const auto rep = criticality_check(labelled_tree_system(), 300);
    CHECK(rep.rho == doctest::Approx(1.0 / 12).epsilon(1e-3));
    CHECK(rep.values.front() == doctest::Approx(1.0 / 6).epsilon(1e-3));
    CHECK(rep.verdict == Verdict::Admissible);
    CHECK(spectral_radius({{0, 2}, {2, 0}}) == doctest::Approx(2));
}

TEST_CASE("vertex-weighted map series matches enumeration") {
    for (const Rational x : {Rational(1), Rational(2), Rational(1, 2)}) {
        const auto a = rooted_maps_weighted(5, x);
        for (int n = 1; n <= 5; ++n) CHECK(a[n] == weighted_map_count(n, x));
    }
    const auto closed = rooted_maps_closed_form(30);
    const auto iterated = rooted_maps_weighted(30, 1);
    for (int n = 1; n <= 30; ++n) CHECK(iterated[n] == closed[n]);
    CHECK(closed[3] == 54);
}

TEST_CASE("maps are cores composed with the substitution") {
    for (const Rational x : {Rational(1), Rational(3, 2)}) {
        const auto s = maps_and_core_series(12, x);
        const auto composed = compose(s.cores, s.substitution);
        for (int n = 1; n <= 12; ++n) CHECK(composed[n] == s.maps[n]);
    }
}

TEST_CASE("core size law matches enumeration") {
    for (const Rational x : {Rational(1), Rational(2)})
        for (int n = 1; n <= 5; ++n) CHECK(core_size_distribution(n, x) == enumerated_core_law(n, x));
    const auto one = core_size_distribution(1, 1);
    CHECK(one[1] == 1);
    Rational total = 0;
    for (const auto& p : core_size_distribution(60, 1)) total += p;
    CHECK(total == 1);
    CHECK_THROWS_AS(core_size_distribution(700, 1), Error);
}

TEST_CASE("core fraction alpha") {
    const auto a = alpha_estimate(1);
    CHECK(a.alpha == doctest::Approx(1.0 / 3).epsilon(2e-3));
    CHECK(a.h_at_rho.lo <= a.h_at_rho.estimate);
    CHECK(a.h_at_rho.estimate <= a.h_at_rho.hi);
    // continuity in the vertex weight
    const double lo = alpha_estimate(Rational(95, 100), 80).alpha;
    const double hi = alpha_estimate(Rational(105, 100), 80).alpha;
    CHECK(std::fabs(lo - hi) < 0.01);
}

TEST_CASE("series-parallel networks match the direct iteration") {
    const ThreeConnectedSource zero{ThreeConnectedSource::Kind::Zero, std::nullopt, 0};
    for (const Rational x : {Rational(1), Rational(2)}) {
        const auto planar = planar_network_system(12, x, zero);
        const auto oracle = series_parallel_oracle(12, x);
        CHECK(planar.networks == oracle);
        CHECK(planar.networks_closed == oracle);
    }
    const auto d = planar_network_system(5, 1, zero).networks;
    CHECK(d[1] == 1);
    CHECK(d[3] == 2);
    CHECK(d[4] == Rational(9, 2));
}

TEST_CASE("network systems agree with the built-in polyhedral part") {
    const ThreeConnectedSource built{ThreeConnectedSource::Kind::BuiltIn, std::nullopt, 6};
    const auto planar = planar_network_system(20, 1, built);
    CHECK(planar.networks == planar.networks_closed);
    const auto plane = plane_network_system(20, 1, built);
    CHECK(plane.networks == PowerSeries::z(20) + plane.series + plane.parallel + plane.polyhedral);
    CHECK(three_connected_series(built, false, 8, 1)[5] == 1);
    CHECK(three_connected_series(built, true, 8, 1)[5] == Rational(1, 2));
}

TEST_CASE("coefficient tables") {
    const auto t = parse_coefficient_table("n,coefficient\n# comment\n5,1\n6,0\n7,4\n");
    CHECK(t.valid_order == 7);
    CHECK(t.coeffs[7] == 4);
    CHECK(t.coeffs[2] == 0);
    try {
        parse_coefficient_table("n,coefficient\n5,x\n");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MalformedInput);
    }
    const auto file = load_coefficient_table(std::string(MAPFORGE_DATA_DIR) + "/rooted_3connected_maps.csv");
    CHECK(file.valid_order == 16);
    CHECK(file.coeffs[16] == 82926);
    const ThreeConnectedSource src{ThreeConnectedSource::Kind::Table, file, 16};
    CHECK_THROWS_AS(three_connected_series(src, false, 10, 2), Error);
}

TEST_CASE("block system truncation") {
    const auto tr = block_system_truncation({0, 1}, 1, 15);
    for (int n = 1; n <= 15; ++n) {
        const Rational cayley = power(n, n - 1) / factorial(n);
        CHECK(tr.e_k[n] == cayley);
        CHECK(tr.bound[n] >= to_double(cayley) * (1 - 1e-9));
    }
    CHECK_THROWS_AS(block_system_truncation({0}, 1, 5), Error);
    CHECK_THROWS_AS(block_system_truncation({1, 1}, 1, 5), Error);
}
