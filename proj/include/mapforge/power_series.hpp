#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mapforge {

using Rational = mpq_class;

/// Parses "p", "p/q" or a decimal like "1.25" exactly.
Rational parse_rational(const std::string& text);
double to_double(const Rational& q);
std::string to_string(const Rational& q);

/// Truncated power series with exact rational coefficients of z^0..z^order.
/// Binary operations truncate to the smaller order of their operands.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(int order);
    PowerSeries(std::vector<Rational> coeffs, int order);

    static PowerSeries constant(const Rational& c, int order);
    static PowerSeries z(int order);
    static PowerSeries from_integers(const std::vector<long long>& coeffs, int order);

    int order() const { return order_; }
    const Rational& operator[](int n) const { return coeffs_[n]; }
    Rational& operator[](int n) { return coeffs_[n]; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Smallest n with a nonzero coefficient, or order+1 for the zero series.
    int valuation() const;
    bool is_integral() const;
    PowerSeries truncated(int order) const;

    PowerSeries operator-() const;
    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    PowerSeries& operator*=(const Rational& c);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

    /// f(c z)
    PowerSeries scaled(const Rational& c) const;
    /// z^k f(z), order unchanged.
    PowerSeries shifted(int k) const;
    PowerSeries derivative() const;
    /// Antiderivative with zero constant term.
    PowerSeries integral() const;

    /// Partial sum at a real point.
    double evaluate(double x) const;
    double evaluate_derivative(double x) const;

private:
    std::vector<Rational> coeffs_;
    int order_ = -1;
};

PowerSeries reciprocal(const PowerSeries& f);
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);
PowerSeries exp(const PowerSeries& f);
PowerSeries log(const PowerSeries& f);
PowerSeries pow(const PowerSeries& f, int k);
/// Compositional inverse g with f(g(z)) = z; needs f0 = 0 and f1 != 0.
PowerSeries invert_functional(const PowerSeries& f);
/// F o H^<-1> by Lagrange inversion, without forming the inverse.
PowerSeries compose_with_inverse(const PowerSeries& f, const PowerSeries& h);

/// [z^n] h^k for k = 0..n (h with zero constant term).
std::vector<Rational> power_coefficients(const PowerSeries& h, int n);

}  // namespace mapforge
