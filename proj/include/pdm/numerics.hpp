#pragma once

// Shared numerical kernels: open intervals, adaptive Simpson quadrature,
// cached Gauss-Legendre rules, finite-difference stencils (including
// Fornberg weights for arbitrary-order derivatives), and a monotone
// cubic (Fritsch-Carlson) interpolant used to invert tabulated maps.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pdm/errors.hpp"

namespace pdm {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Open interval (lo, hi); infinite endpoints describe half-lines / the full line.
struct Interval {
    double lo = -kInf;
    double hi = kInf;

    bool contains(double u) const { return u > lo && u < hi; }
    bool bounded_below() const { return std::isfinite(lo); }
    bool bounded_above() const { return std::isfinite(hi); }

    static Interval full_line() { return {}; }
    static Interval above(double t) { return {t, kInf}; }
    static Interval between(double a, double b) { return {a, b}; }
};

namespace detail {

inline double adaptive_simpson_step(const std::function<double(double)>& f, double a,
                                    double b, double fa, double fm, double fb, double whole,
                                    double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson integration of f on [a, b] to absolute tolerance tol.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int max_depth = 52) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return sign * detail::adaptive_simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

struct GaussLegendreRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Nodes/weights by Newton iteration on the Legendre recurrence.
inline GaussLegendreRule make_gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

inline const GaussLegendreRule& gauss_legendre(int n) {
    thread_local std::unordered_map<int, GaussLegendreRule> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
    return it->second;
}

// Gauss-Legendre integral of f over [a, b] with an n-point rule.
inline double gauss_legendre_integrate(const std::function<double(double)>& f, double a,
                                       double b, int n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

// 4th-order central first derivative.
inline double derivative_4th(const std::function<double(double)>& f, double x, double h) {
    return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}

// 4th-order central second derivative.
inline double second_derivative_4th(const std::function<double(double)>& f, double x, double h) {
    return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2 * h)) /
           (12.0 * h * h);
}

// Fornberg weights for the m-th derivative at z from the nodes x.
inline std::vector<double> fornberg_weights(double z, const std::vector<double>& x, int m) {
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - z;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - z;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = c[i][m];
    return w;
}

// n-th derivative of f at x0 from a centered (2*width+1)-point stencil,
// accumulated in long double to tame the cancellation of high orders.
inline double nth_derivative_stencil(const std::function<double(double)>& f, double x0, int n,
                                     double h, int width) {
    std::vector<double> xs(2 * width + 1);
    for (int i = 0; i <= 2 * width; ++i) xs[i] = x0 + h * (i - width);
    const std::vector<double> w = fornberg_weights(x0, xs, n);
    long double acc = 0.0L;
    for (std::size_t i = 0; i < xs.size(); ++i)
        acc += static_cast<long double>(w[i]) * static_cast<long double>(f(xs[i]));
    return static_cast<double>(acc);
}

// Monotone cubic interpolant (Fritsch-Carlson); requires strictly increasing x and y.
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        if (n < 2) throw DomainError("MonotoneCubic: need at least two nodes");
        std::vector<double> d(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double dx = x_[i + 1] - x_[i];
            if (dx <= 0.0) throw DomainError("MonotoneCubic: abscissae must increase");
            d[i] = (y_[i + 1] - y_[i]) / dx;
        }
        slope_.assign(n, 0.0);
        slope_[0] = d[0];
        slope_[n - 1] = d[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (d[i - 1] * d[i] <= 0.0) {
                slope_[i] = 0.0;
            } else {
                const double w1 = 2.0 * (x_[i + 1] - x_[i]) + (x_[i] - x_[i - 1]);
                const double w2 = (x_[i + 1] - x_[i]) + 2.0 * (x_[i] - x_[i - 1]);
                slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
            }
        }
    }

    double operator()(double u) const {
        const std::size_t i = segment(u);
        const double hseg = x_[i + 1] - x_[i];
        const double t = (u - x_[i]) / hseg;
        const double t2 = t * t;
        const double t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1;
        const double h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2;
        const double h11 = t3 - t2;
        return h00 * y_[i] + h10 * hseg * slope_[i] + h01 * y_[i + 1] + h11 * hseg * slope_[i + 1];
    }

    double front_x() const { return x_.front(); }
    double back_x() const { return x_.back(); }

private:
    std::size_t segment(double u) const {
        auto it = std::upper_bound(x_.begin(), x_.end(), u);
        std::size_t i = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
        if (i + 1 >= x_.size()) i = x_.size() - 2;
        return i;
    }

    std::vector<double> x_, y_;
    std::vector<double> slope_;
};

// Composite Simpson over a uniformly spaced sample (odd point count preferred;
// a trapezoid patch covers the final panel when the count is even).
inline double simpson_uniform(const std::vector<double>& v, double h) {
    const std::size_t n = v.size();
    if (n < 2) return 0.0;
    const std::size_t last = (n % 2 == 1) ? n - 1 : n - 2;
    double sum = v[0] + v[last];
    for (std::size_t i = 1; i < last; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * v[i];
    double result = sum * h / 3.0;
    if (n % 2 == 0) result += 0.5 * h * (v[n - 2] + v[n - 1]);
    return result;
}

inline double trapezoid(const std::vector<double>& x, const std::vector<double>& v) {
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        sum += 0.5 * (v[i] + v[i - 1]) * (x[i] - x[i - 1]);
    return sum;
}

inline std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    const double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = a + h * i;
    g.back() = b;
    return g;
}

}  // namespace pdm
