#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mapforge/power_series.hpp"

namespace mapforge {

/// Symbolic right-hand side over z and unknowns y_0..y_{m-1}.
/// Nodes are immutable and shared, so sub-expressions can be reused freely.
class Expr {
public:
    enum class Op { Const, Z, Var, Add, Sub, Mul, Div, Neg, Exp, Log, Apply };

    static Expr constant(const Rational& c);
    static Expr z();
    static Expr var(int index);
    /// f(inner); inner must have zero constant term. Coefficients of f past
    /// its order are taken as zero.
    static Expr apply(PowerSeries f, const Expr& inner);

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    friend Expr exp(const Expr& a);
    friend Expr log(const Expr& a);

    Op op() const;
    const void* id() const { return node_.get(); }

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;

    friend struct Evaluator;
    friend struct NumericEvaluator;
    friend PowerSeries eval_series(const Expr&, const std::vector<PowerSeries>&, int);
    friend struct Dual eval_numeric(const Expr&, double, const std::vector<double>&);
};

inline Expr operator+(const Expr& a, const Rational& c) { return a + Expr::constant(c); }
inline Expr operator+(const Rational& c, const Expr& a) { return Expr::constant(c) + a; }
inline Expr operator-(const Rational& c, const Expr& a) { return Expr::constant(c) - a; }
inline Expr operator-(const Expr& a, const Rational& c) { return a - Expr::constant(c); }
inline Expr operator*(const Expr& a, const Rational& c) { return a * Expr::constant(c); }
inline Expr operator*(const Rational& c, const Expr& a) { return Expr::constant(c) * a; }
inline Expr operator/(const Rational& c, const Expr& a) { return Expr::constant(c) / a; }

PowerSeries eval_series(const Expr& e, const std::vector<PowerSeries>& y, int order);

/// Value and gradient with respect to the unknowns at a real point.
struct Dual {
    double value = 0;
    std::vector<double> grad;
};

Dual eval_numeric(const Expr& e, double z, const std::vector<double>& y);

struct SystemSpec {
    std::string name;
    std::vector<std::string> names;
    std::vector<Expr> rhs;
    Rational x = 1;

    int size() const { return static_cast<int>(rhs.size()); }
};

/// Formal solution of y = F(z, y) by iteration from y = 0.
/// Throws NonConvergent if some F_i(z, 0) has a nonzero constant term or the
/// iteration fails to settle.
std::vector<PowerSeries> solve_vector(const SystemSpec& spec, int order);
PowerSeries solve_scalar(const SystemSpec& spec, int order);

/// y_0 = 0, y_{h+1} = F(z, y_h) for h < h_max (first unknown of the system).
std::vector<PowerSeries> height_truncations(const SystemSpec& spec, int order, int h_max);

/// Numeric counterpart at a real point: tau_0 = 0, tau_{h+1} = F(z, tau_h).
std::vector<double> height_values(const SystemSpec& spec, double z, int h_max);

/// Jacobian dF_i/dy_j at a real point.
std::vector<std::vector<double>> jacobian(const SystemSpec& spec, double z,
                                          const std::vector<double>& y);

}  // namespace mapforge
