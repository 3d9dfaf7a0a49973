#pragma once

// Minimal special-function kernel: physicists' Hermite and generalized
// Laguerre polynomials by three-term recurrence, a Lanczos Gamma function,
// and the terminating (polynomial) confluent hypergeometric series.

#include <cmath>
#include <vector>

#include "pdm/errors.hpp"

namespace pdm {

// Physicists' Hermite H_n(y): H_0 = 1, H_1 = 2y, H_{n+1} = 2y H_n - 2n H_{n-1}.
inline double hermite(int n, double y) {
    if (n < 0) throw DomainError("hermite: degree must be nonnegative");
    double h0 = 1.0;
    if (n == 0) return h0;
    double h1 = 2.0 * y;
    for (int k = 1; k < n; ++k) {
        const double h2 = 2.0 * y * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

// Generalized Laguerre L_n^(alpha)(x).
inline double laguerre(int n, double alpha, double x) {
    if (n < 0) throw DomainError("laguerre: degree must be nonnegative");
    double l0 = 1.0;
    if (n == 0) return l0;
    double l1 = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double l2 = ((2.0 * k + 1.0 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

namespace detail {

// Lanczos approximation, g = 7, 9 coefficients.
inline double lanczos_gamma(double x) {
    static constexpr double g = 7.0;
    static constexpr double coeff[9] = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        const double s = std::sin(M_PI * x);
        if (s == 0.0) throw DomainError("gamma_fn: pole at nonpositive integer");
        return M_PI / (s * lanczos_gamma(1.0 - x));
    }
    x -= 1.0;
    double a = coeff[0];
    for (int i = 1; i < 9; ++i) a += coeff[i] / (x + i);
    const double t = x + g + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace detail

// Gamma function; poles at nonpositive integers raise.
inline double gamma_fn(double x) {
    if (x <= 0.0 && x == std::floor(x)) throw DomainError("gamma_fn: pole at nonpositive integer");
    return detail::lanczos_gamma(x);
}

inline double log_gamma(double x) {
    if (x <= 0.0) throw DomainError("log_gamma: needs positive argument");
    return std::lgamma(x);
}

// Terminating Kummer series 1F1(-n; b; x).
inline double kummer_poly(int n, double b, double x) {
    if (n < 0) throw DomainError("kummer_poly: first argument must be -n with n >= 0");
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < n; ++j) {
        term *= (static_cast<double>(-n + j) / (b + j)) * x / (j + 1.0);
        sum += term;
    }
    return sum;
}

// Normalized oscillator eigenfunction H_k(y) e^{-y^2/2} / sqrt(2^k k! sqrt(pi)),
// built by a recurrence on the normalized functions to avoid overflow.
inline double hermite_function(int k, double y) {
    if (k < 0) throw DomainError("hermite_function: level must be nonnegative");
    const double f0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * y * y);
    if (k == 0) return f0;
    double prev = f0;
    double cur = std::sqrt(2.0) * y * f0;
    for (int j = 1; j < k; ++j) {
        const double next =
            y * std::sqrt(2.0 / (j + 1.0)) * cur - std::sqrt(j / (j + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace pdm
