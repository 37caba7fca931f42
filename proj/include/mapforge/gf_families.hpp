#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mapforge/asymptotics.hpp"
#include "mapforge/power_series.hpp"
#include "mapforge/system.hpp"

namespace mapforge {

/// T = z / (1 - 3T): labelled trees by vertices.
SystemSpec labelled_tree_system();

/// Rooted plane trees by edges, T = 1/(1 - zT).
PowerSeries plane_tree_series(int order);

/// Black-rooted bicoloured labelled trees by vertices, weight x per black
/// vertex, as a scalar system in f (the white-rooted series is inlined).
SystemSpec bicolored_tree_system(const Rational& x, int order);

/// Rooted maps by edges from the closed form 2 3^m (2m)! / (m! (m+2)!).
PowerSeries rooted_maps_closed_form(int order);

/// Rooted maps by edges with weight x per vertex (the empty map included),
/// from the root-face catalytic equation. Cost grows like order^4.
PowerSeries rooted_maps_weighted(int order, const Rational& x);

/// M: maps with at least one edge, weight x per non-root vertex.
/// H = z (1 + M)^2, C = M o H^<-1> (2-connected maps, weight x per non-root vertex).
struct MapCoreSeries {
    PowerSeries maps;
    PowerSeries substitution;
    PowerSeries cores;
};

MapCoreSeries maps_and_core_series(int order, const Rational& x);

/// P(core size = k), k = 0..n (entry 0 is always zero for n >= 1).
std::vector<Rational> core_size_distribution(int n, const Rational& x, int max_n = 600);
std::vector<Rational> core_size_distribution(const MapCoreSeries& s, int n);

/// alpha = H(rho) / (rho H'(rho)) with rho estimated from the map series.
struct AlphaEstimate {
    double alpha = 0;
    double rho = 0;
    Interval h_at_rho;
    Interval h_prime_at_rho;
};

AlphaEstimate alpha_estimate(const Rational& x, int order = 0);
AlphaEstimate alpha_estimate(const MapCoreSeries& s);

/// Rooted 3-connected maps by number of non-root edges. Entries past
/// valid_order are unknown rather than zero.
struct CoefficientTable {
    std::vector<Rational> coeffs;
    int valid_order = -1;
};

/// CSV lines "n,coefficient"; '#' comments and a header line are skipped.
CoefficientTable parse_coefficient_table(const std::string& text);
CoefficientTable load_coefficient_table(const std::string& path);

/// Where the 3-connected series comes from.
struct ThreeConnectedSource {
    enum class Kind { Zero, BuiltIn, Table };
    Kind kind = Kind::BuiltIn;
    std::optional<CoefficientTable> table;
    /// Keep only components with at most this many edges (root included);
    /// the truncated series is exact at every order. 0 means no truncation.
    int max_edges = 0;
};

/// 3-connected series for plane networks (rooted maps) or planar networks
/// (edge-rooted labelled graphs, EGF), both by non-root edges with weight x
/// per vertex away from the root edge. Throws MissingTable when `order`
/// exceeds what the source determines.
PowerSeries three_connected_series(const ThreeConnectedSource& src, bool planar, int order,
                                   const Rational& x);

struct PlaneNetworks {
    PowerSeries networks, series, parallel, polyhedral;
};

struct PlanarNetworks {
    PowerSeries networks, series, parallel, polyhedral;
    /// Solution of the single closed equation for D.
    PowerSeries networks_closed;
};

PlaneNetworks plane_network_system(int order, const Rational& x, const ThreeConnectedSource& src);
PlanarNetworks planar_network_system(int order, const Rational& x, const ThreeConnectedSource& src);

SystemSpec plane_network_spec(const PowerSeries& t, const Rational& x);
SystemSpec planar_network_spec(const PowerSeries& t, const Rational& x);
SystemSpec planar_network_closed_spec(const PowerSeries& t, const Rational& x);

/// E_k = z exp(g_k(E_k)) with g_k the truncation of g at degree k.
struct BlockTruncation {
    PowerSeries e_k;
    /// u exp(-g_k(u)), the functional inverse of E_k.
    PowerSeries phi_k;
    double r_hat = 0;
    double u_k = 0;
    double phi_k_at_u = 0;
    double phi_k_prime_at_u = 0;
    /// True when u_k was unusable (infinite radius or phi_k' <= 0 there) and
    /// the bound point was chosen by minimising the bound instead.
    bool fallback = false;
    /// bound[n] >= [z^n] E_k.
    std::vector<double> bound;
};

BlockTruncation block_system_truncation(const std::vector<Rational>& g, int k, int order);

}  // namespace mapforge
