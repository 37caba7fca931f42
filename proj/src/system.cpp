#include "mapforge/system.hpp"

#include <cmath>
#include <unordered_map>

#include "mapforge/error.hpp"

namespace mapforge {

struct Expr::Node {
    Op op;
    Rational value;
    int index = 0;
    PowerSeries series;
    std::shared_ptr<const Node> a, b;
};

namespace {

std::shared_ptr<const Expr::Node> make(Expr::Op op, std::shared_ptr<const Expr::Node> a = nullptr,
                                       std::shared_ptr<const Expr::Node> b = nullptr) {
    auto n = std::make_shared<Expr::Node>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

PowerSeries padded(const PowerSeries& f, int order) {
    if (f.order() >= order) return f.truncated(order);
    PowerSeries g(order);
    for (int i = 0; i <= f.order(); ++i) g[i] = f[i];
    return g;
}

}  // namespace

Expr Expr::constant(const Rational& c) {
    auto n = std::make_shared<Node>();
    n->op = Op::Const;
    n->value = c;
    return Expr(n);
}

Expr Expr::z() { return Expr(make(Op::Z)); }

Expr Expr::var(int index) {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->index = index;
    return Expr(n);
}

Expr Expr::apply(PowerSeries f, const Expr& inner) {
    auto n = std::make_shared<Node>();
    n->op = Op::Apply;
    n->series = std::move(f);
    n->a = inner.node_;
    return Expr(n);
}

Expr operator+(const Expr& a, const Expr& b) { return Expr(make(Expr::Op::Add, a.node_, b.node_)); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make(Expr::Op::Sub, a.node_, b.node_)); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make(Expr::Op::Mul, a.node_, b.node_)); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make(Expr::Op::Div, a.node_, b.node_)); }
Expr operator-(const Expr& a) { return Expr(make(Expr::Op::Neg, a.node_)); }
Expr exp(const Expr& a) { return Expr(make(Expr::Op::Exp, a.node_)); }
Expr log(const Expr& a) { return Expr(make(Expr::Op::Log, a.node_)); }

Expr::Op Expr::op() const { return node_->op; }

struct Evaluator {
    const std::vector<PowerSeries>& y;
    int order;
    std::unordered_map<const Expr::Node*, PowerSeries> memo;

    PowerSeries run(const std::shared_ptr<const Expr::Node>& n) {
        if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
        PowerSeries r;
        switch (n->op) {
            case Expr::Op::Const: r = PowerSeries::constant(n->value, order); break;
            case Expr::Op::Z: r = PowerSeries::z(order); break;
            case Expr::Op::Var:
                if (n->index < 0 || n->index >= static_cast<int>(y.size()))
                    throw Error(ErrorCode::InvalidArgument, "unknown y" + std::to_string(n->index));
                r = padded(y[n->index], order);
                break;
            case Expr::Op::Add: r = run(n->a) + run(n->b); break;
            case Expr::Op::Sub: r = run(n->a) - run(n->b); break;
            case Expr::Op::Mul: r = run(n->a) * run(n->b); break;
            case Expr::Op::Div: r = run(n->a) / run(n->b); break;
            case Expr::Op::Neg: r = -run(n->a); break;
            case Expr::Op::Exp: r = exp(run(n->a)); break;
            case Expr::Op::Log: r = log(run(n->a)); break;
            case Expr::Op::Apply: r = compose(padded(n->series, order), run(n->a)); break;
        }
        memo.emplace(n.get(), r);
        return r;
    }
};

PowerSeries eval_series(const Expr& e, const std::vector<PowerSeries>& y, int order) {
    Evaluator ev{y, order, {}};
    return ev.run(e.node_);
}

struct NumericEvaluator {
    double z;
    const std::vector<double>& y;
    std::unordered_map<const Expr::Node*, Dual> memo;

    Dual run(const std::shared_ptr<const Expr::Node>& n) {
        if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
        const std::size_t m = y.size();
        Dual r{0, std::vector<double>(m, 0.0)};
        auto unary = [&](double v, double dv, const Dual& a) {
            r.value = v;
            for (std::size_t i = 0; i < m; ++i) r.grad[i] = dv * a.grad[i];
        };
        switch (n->op) {
            case Expr::Op::Const: r.value = to_double(n->value); break;
            case Expr::Op::Z: r.value = z; break;
            case Expr::Op::Var:
                r.value = y.at(n->index);
                r.grad[n->index] = 1;
                break;
            case Expr::Op::Add:
            case Expr::Op::Sub: {
                const Dual a = run(n->a), b = run(n->b);
                const double s = n->op == Expr::Op::Add ? 1 : -1;
                r.value = a.value + s * b.value;
                for (std::size_t i = 0; i < m; ++i) r.grad[i] = a.grad[i] + s * b.grad[i];
                break;
            }
            case Expr::Op::Mul: {
                const Dual a = run(n->a), b = run(n->b);
                r.value = a.value * b.value;
                for (std::size_t i = 0; i < m; ++i) r.grad[i] = a.grad[i] * b.value + a.value * b.grad[i];
                break;
            }
            case Expr::Op::Div: {
                const Dual a = run(n->a), b = run(n->b);
                r.value = a.value / b.value;
                for (std::size_t i = 0; i < m; ++i)
                    r.grad[i] = (a.grad[i] * b.value - a.value * b.grad[i]) / (b.value * b.value);
                break;
            }
            case Expr::Op::Neg: {
                const Dual a = run(n->a);
                unary(-a.value, -1, a);
                break;
            }
            case Expr::Op::Exp: {
                const Dual a = run(n->a);
                const double v = std::exp(a.value);
                unary(v, v, a);
                break;
            }
            case Expr::Op::Log: {
                const Dual a = run(n->a);
                unary(std::log(a.value), 1 / a.value, a);
                break;
            }
            case Expr::Op::Apply: {
                const Dual a = run(n->a);
                unary(n->series.evaluate(a.value), n->series.evaluate_derivative(a.value), a);
                break;
            }
        }
        memo.emplace(n.get(), r);
        return r;
    }
};

Dual eval_numeric(const Expr& e, double z, const std::vector<double>& y) {
    NumericEvaluator ev{z, y, {}};
    return ev.run(e.node_);
}

namespace {

std::vector<PowerSeries> step(const SystemSpec& spec, const std::vector<PowerSeries>& y, int order) {
    std::vector<PowerSeries> next;
    next.reserve(spec.rhs.size());
    for (const auto& e : spec.rhs) next.push_back(eval_series(e, y, order));
    return next;
}

}  // namespace

std::vector<PowerSeries> solve_vector(const SystemSpec& spec, int order) {
    const int m = spec.size();
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "empty system");
    std::vector<PowerSeries> y(m, PowerSeries(order));
    auto first = step(spec, y, order);
    for (int i = 0; i < m; ++i)
        if (first[i][0] != 0)
            throw Error(ErrorCode::NonConvergent,
                        spec.name + ": F_" + std::to_string(i) + "(z,0) has a nonzero constant term");
    y = std::move(first);
    const int cap = (order + 2) * m + 5;
    for (int it = 0; it < cap; ++it) {
        auto next = step(spec, y, order);
        if (next == y) return y;
        y = std::move(next);
    }
    throw Error(ErrorCode::NonConvergent, spec.name + ": iteration did not settle");
}

PowerSeries solve_scalar(const SystemSpec& spec, int order) {
    if (spec.size() != 1) throw Error(ErrorCode::InvalidArgument, "solve_scalar needs one unknown");
    return solve_vector(spec, order).front();
}

std::vector<PowerSeries> height_truncations(const SystemSpec& spec, int order, int h_max) {
    if (spec.size() != 1) throw Error(ErrorCode::InvalidArgument, "height truncations need one unknown");
    std::vector<PowerSeries> out{PowerSeries(order)};
    for (int h = 0; h < h_max; ++h) {
        auto next = step(spec, {out.back()}, order);
        if (h == 0 && next[0][0] != 0)
            throw Error(ErrorCode::NonConvergent, spec.name + ": F(z,0) has a nonzero constant term");
        out.push_back(std::move(next[0]));
    }
    return out;
}

std::vector<double> height_values(const SystemSpec& spec, double z, int h_max) {
    if (spec.size() != 1) throw Error(ErrorCode::InvalidArgument, "height values need one unknown");
    std::vector<double> tau{0.0};
    for (int h = 0; h < h_max; ++h) tau.push_back(eval_numeric(spec.rhs[0], z, {tau.back()}).value);
    return tau;
}

std::vector<std::vector<double>> jacobian(const SystemSpec& spec, double z,
                                          const std::vector<double>& y) {
    std::vector<std::vector<double>> j;
    for (const auto& e : spec.rhs) j.push_back(eval_numeric(e, z, y).grad);
    return j;
}

}  // namespace mapforge
