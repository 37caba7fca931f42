#include "mapforge/power_series.hpp"

#include <algorithm>
#include <cmath>

#include "mapforge/error.hpp"

namespace mapforge {

Rational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
            s.end());
    if (s.empty()) throw MalformedInput(0, "empty number");
    try {
        const auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            if (digits.empty() || digits == "-" || digits == "+") throw MalformedInput(0, "bad decimal " + text);
            if (digits[0] == '+') digits.erase(0, 1);
            mpz_class num(digits, 10), den = 1;
            for (std::size_t k = dot + 1; k < s.size(); ++k) den *= 10;
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        if (s[0] == '+') s.erase(0, 1);
        Rational q(s, 10);
        if (q.get_den() == 0) throw Error(ErrorCode::ZeroDivision, "zero denominator in " + text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw MalformedInput(0, "bad number " + text);
    }
}

double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

// log|q| without overflow for huge numerators/denominators.
double log_abs(const Rational& q) {
    long en = 0, ed = 0;
    const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return std::log(std::fabs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

double term_value(const Rational& c, int n, double x) {
    if (sgn(c) == 0) return 0.0;
    if (x == 0.0) return n == 0 ? c.get_d() : 0.0;
    const double sign = (sgn(c) < 0 ? -1.0 : 1.0) * ((x < 0 && n % 2) ? -1.0 : 1.0);
    return sign * std::exp(log_abs(c) + n * std::log(std::fabs(x)));
}

bool all_integral(const std::vector<Rational>& v, int upto) {
    for (int i = 0; i <= upto; ++i)
        if (v[i].get_den() != 1) return false;
    return true;
}

}  // namespace

PowerSeries::PowerSeries(int order) : coeffs_(std::max(order, -1) + 1), order_(order) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
    coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
    PowerSeries s(order);
    if (order >= 0) s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::z(int order) {
    PowerSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

PowerSeries PowerSeries::from_integers(const std::vector<long long>& coeffs, int order) {
    PowerSeries s(order);
    for (int i = 0; i <= order && i < static_cast<int>(coeffs.size()); ++i) s.coeffs_[i] = Rational(static_cast<long>(coeffs[i]));
    return s;
}

int PowerSeries::valuation() const {
    for (int i = 0; i <= order_; ++i)
        if (sgn(coeffs_[i]) != 0) return i;
    return order_ + 1;
}

bool PowerSeries::is_integral() const { return all_integral(coeffs_, order_); }

PowerSeries PowerSeries::truncated(int order) const {
    if (order > order_) throw Error(ErrorCode::InvalidArgument, "cannot extend a truncated series");
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int i = 0; i <= order_; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int i = 0; i <= order_; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order_, b.order_);
    PowerSeries r(n);
    if (n < 0) return r;
    const int va = a.valuation(), vb = b.valuation();
    if (va + vb > n) return r;
    if (all_integral(a.coeffs_, n) && all_integral(b.coeffs_, n)) {
        std::vector<mpz_class> acc(n + 1);
        for (int i = va; i <= n - vb; ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            const mpz_srcptr ai = a.coeffs_[i].get_num_mpz_t();
            for (int j = vb; i + j <= n; ++j)
                mpz_addmul(acc[i + j].get_mpz_t(), ai, b.coeffs_[j].get_num_mpz_t());
        }
        for (int k = 0; k <= n; ++k) r.coeffs_[k] = Rational(acc[k]);
        return r;
    }
    for (int i = va; i <= n - vb; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (int j = vb; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    const int vb = b.valuation();
    if (vb > b.order_) throw Error(ErrorCode::ZeroDivision, "division by the zero series");
    if (vb == 0) return a * reciprocal(b);
    if (a.valuation() < vb) throw Error(ErrorCode::ValuationError, "quotient is not a power series");
    // Cancel z^vb on both sides; precision drops accordingly.
    const int n = std::min(a.order_, b.order_) - vb;
    PowerSeries na(n), nb(n);
    for (int i = 0; i <= n; ++i) {
        na.coeffs_[i] = a.coeffs_[i + vb];
        nb.coeffs_[i] = b.coeffs_[i + vb];
    }
    return na * reciprocal(nb);
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
    PowerSeries r = *this;
    Rational p = 1;
    for (int i = 0; i <= order_; ++i) {
        r.coeffs_[i] *= p;
        p *= c;
    }
    return r;
}

PowerSeries PowerSeries::shifted(int k) const {
    PowerSeries r(order_);
    for (int i = 0; i + k <= order_; ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

PowerSeries PowerSeries::derivative() const {
    PowerSeries r(std::max(order_ - 1, 0));
    for (int i = 1; i <= order_; ++i) r.coeffs_[i - 1] = coeffs_[i] * i;
    return r;
}

PowerSeries PowerSeries::integral() const {
    PowerSeries r(order_ + 1);
    for (int i = 0; i <= order_; ++i) r.coeffs_[i + 1] = coeffs_[i] / (i + 1);
    return r;
}

double PowerSeries::evaluate(double x) const {
    double s = 0.0;
    for (int i = 0; i <= order_; ++i) s += term_value(coeffs_[i], i, x);
    return s;
}

double PowerSeries::evaluate_derivative(double x) const {
    double s = 0.0;
    for (int i = 1; i <= order_; ++i) s += i * term_value(coeffs_[i], i - 1, x);
    return s;
}

PowerSeries reciprocal(const PowerSeries& f) {
    const int n = f.order();
    if (n < 0) return f;
    if (sgn(f[0]) == 0) throw Error(ErrorCode::ValuationError, "reciprocal needs a nonzero constant term");
    PowerSeries g(n);
    const Rational inv0 = 1 / f[0];
    const bool unit_integral = f.is_integral() && (f[0] == 1 || f[0] == -1);
    if (unit_integral) {
        std::vector<mpz_class> gz(n + 1);
        const int s = f[0] == 1 ? 1 : -1;
        gz[0] = s;
        mpz_class acc;
        for (int k = 1; k <= n; ++k) {
            acc = 0;
            for (int j = 1; j <= k; ++j)
                if (sgn(f[j]) != 0) mpz_addmul(acc.get_mpz_t(), f[j].get_num_mpz_t(), gz[k - j].get_mpz_t());
            gz[k] = -s * acc;
        }
        for (int k = 0; k <= n; ++k) g[k] = Rational(gz[k]);
        return g;
    }
    g[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j)
            if (sgn(f[j]) != 0) acc += f[j] * g[k - j];
        g[k] = -acc * inv0;
    }
    return g;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
    if (g.order() >= 0 && sgn(g[0]) != 0)
        throw Error(ErrorCode::ValuationError, "inner series of a composition needs zero constant term");
    const int n = std::min(f.order(), g.order());
    PowerSeries r = PowerSeries::constant(f[n], n);
    for (int k = n - 1; k >= 0; --k) {
        r = r * g.truncated(n);
        r[0] += f[k];
    }
    return r;
}

PowerSeries exp(const PowerSeries& f) {
    if (f.order() >= 0 && sgn(f[0]) != 0) throw Error(ErrorCode::ValuationError, "exp needs zero constant term");
    const int n = f.order();
    PowerSeries g(n);
    if (n < 0) return g;
    g[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j)
            if (sgn(f[j]) != 0) acc += f[j] * g[k - j] * j;
        g[k] = acc / k;
    }
    return g;
}

PowerSeries log(const PowerSeries& f) {
    if (f.order() < 0 || f[0] != 1) throw Error(ErrorCode::ValuationError, "log needs constant term 1");
    const int n = f.order();
    PowerSeries g(n);
    for (int k = 1; k <= n; ++k) {
        Rational acc = f[k] * k;
        for (int j = 1; j < k; ++j)
            if (sgn(f[k - j]) != 0) acc -= g[j] * j * f[k - j];
        g[k] = acc / k;
    }
    return g;
}

PowerSeries pow(const PowerSeries& f, int k) {
    if (k < 0) return pow(reciprocal(f), -k);
    PowerSeries result = PowerSeries::constant(1, f.order());
    PowerSeries base = f;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

namespace {

// Lagrange: [z^k] F(K(z)) = (1/k) [w^(k-1)] F'(w) phi(w)^k, K = z phi(K).
PowerSeries lagrange(const PowerSeries& fprime, const PowerSeries& phi, const Rational& constant, int n) {
    PowerSeries out(n);
    out[0] = constant;
    if (n < 1) return out;
    const PowerSeries base = phi.truncated(n - 1);
    PowerSeries power = PowerSeries::constant(1, n - 1);
    for (int k = 1; k <= n; ++k) {
        power = power * base;
        Rational acc = 0;
        for (int j = 0; j <= k - 1; ++j)
            if (sgn(fprime[j]) != 0) acc += fprime[j] * power[k - 1 - j];
        out[k] = acc / k;
    }
    return out;
}

PowerSeries phi_of(const PowerSeries& h) {
    if (h.order() < 1 || sgn(h[0]) != 0) throw Error(ErrorCode::ValuationError, "series to invert needs zero constant term");
    if (sgn(h[1]) == 0) throw Error(ErrorCode::InversionError, "series to invert has zero linear term");
    const int n = h.order();
    PowerSeries quotient(n - 1);
    for (int i = 0; i < n; ++i) quotient[i] = h[i + 1];
    return reciprocal(quotient);
}

}  // namespace

PowerSeries invert_functional(const PowerSeries& f) {
    const PowerSeries phi = phi_of(f);
    const int n = f.order();
    PowerSeries one = PowerSeries::constant(1, std::max(n - 1, 0));
    return lagrange(one, phi, 0, n);
}

PowerSeries compose_with_inverse(const PowerSeries& f, const PowerSeries& h) {
    const PowerSeries phi = phi_of(h);
    const int n = std::min(f.order(), h.order());
    return lagrange(f.derivative().truncated(std::max(n - 1, 0)), phi, f[0], n);
}

std::vector<Rational> power_coefficients(const PowerSeries& h, int n) {
    if (n > h.order()) throw Error(ErrorCode::InvalidArgument, "series order too small");
    if (sgn(h[0]) != 0) throw Error(ErrorCode::ValuationError, "power_coefficients needs zero constant term");
    std::vector<Rational> out(n + 1);
    const PowerSeries base = h.truncated(n);
    PowerSeries p = PowerSeries::constant(1, n);
    out[0] = n == 0 ? 1 : 0;
    for (int k = 1; k <= n; ++k) {
        p = p * base;
        out[k] = p[n];
    }
    return out;
}

}  // namespace mapforge
