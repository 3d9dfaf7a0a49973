#pragma once

// Refined factorization of PDM Hamiltonians, H = AB + eps with
// A = -(i/sqrt2) m^a P m^b + beta and B = A^dagger.  The oscillator
// beta-function turns (A, B) into ladder operators with [A,B] = -1 in
// hbar*omega_0 units; the generic surface accepts a user-supplied beta and
// exposes the Riccati residual, the commutator, the intertwined partner,
// and the missing states annihilated by each factor.

#include <cmath>
#include <complex>
#include <functional>
#include <utility>

#include "pdm/mass.hpp"
#include "pdm/oscillators.hpp"
#include "pdm/transform.hpp"
#include "pdm/wave.hpp"

namespace pdm {

struct FactorizationPair {
    MassFamily family;
    OrderingParameter ordering;
    std::function<double(double)> beta;
    std::function<double(double)> beta_prime;
    double epsilon = 0.5;
};

// beta = (1/sqrt2) int^x m^{1/2} dr - (1/sqrt2)(a + 1/4) m'/m^{3/2}; the
// antiderivative is sqrt(m0) s(x), anchored so it vanishes where s = 0.
inline double beta_oscillator(const MassFamily& family, double a, double x) {
    const CoordinateMap map = coordinate_map(family);
    if (!map.x_domain.contains(x)) throw DomainError("beta_oscillator: x outside family domain");
    const double m = mass_at(family, x);
    const double mp = mass_derivative(family, x);
    return std::sqrt(family.m0) * map.forward(x) / M_SQRT2 -
           (a + 0.25) * mp / (M_SQRT2 * m * std::sqrt(m));
}

// Ladder pair for a first-kind oscillator: epsilon = 1/2, [A,B] = -1.
inline FactorizationPair oscillator_pair(const MassFamily& family, double a) {
    FactorizationPair pair;
    pair.family = family;
    pair.ordering = {a};
    pair.epsilon = 0.5;
    const CoordinateMap map = coordinate_map(family);
    pair.beta = [family, a, map](double x) {
        const double m = mass_at(family, x);
        const double mp = mass_derivative(family, x);
        return std::sqrt(family.m0) * map.forward(x) / M_SQRT2 -
               (a + 0.25) * mp / (M_SQRT2 * m * std::sqrt(m));
    };
    pair.beta_prime = [family, a](double x) {
        const double m = mass_at(family, x);
        const double mp = mass_derivative(family, x);
        const double mpp = mass_second_derivative(family, x);
        return std::sqrt(m) / M_SQRT2 -
               (a + 0.25) / M_SQRT2 * (mpp / (m * std::sqrt(m)) -
                                       1.5 * mp * mp / (m * m * std::sqrt(m)));
    };
    return pair;
}

inline FactorizationPair oscillator_pair(const MassFamily& family) {
    return oscillator_pair(family, allowed_ordering_for(family).a);
}

// Intertwining pair with a caller-supplied beta; beta' falls back to a
// 4th-order finite difference.
inline FactorizationPair custom_pair(const MassFamily& family, double a,
                                     std::function<double(double)> beta, double epsilon,
                                     std::function<double(double)> beta_prime = {}) {
    FactorizationPair pair;
    pair.family = family;
    pair.ordering = {a};
    pair.epsilon = epsilon;
    pair.beta = std::move(beta);
    if (beta_prime) {
        pair.beta_prime = std::move(beta_prime);
    } else {
        pair.beta_prime = [b = pair.beta](double x) {
            return derivative_4th(b, x, 1e-3 * (1.0 + std::abs(x)));
        };
    }
    return pair;
}

// V - eps - (1/sqrt(2m))[2(a+1/4)(m'/m) beta - beta'] - beta^2; zero iff
// (beta, eps) factorizes V at x.
inline double riccati_residual(const FactorizationPair& pair, const PotentialSpec& v, double x) {
    const double m = mass_at(pair.family, x);
    const double mp = mass_derivative(pair.family, x);
    const double a = pair.ordering.a;
    const double b = pair.beta(x);
    const double bp = pair.beta_prime(x);
    return v(x) - pair.epsilon -
           (2.0 * (a + 0.25) * (mp / m) * b - bp) / std::sqrt(2.0 * m) - b * b;
}

// [A,B](x) = -(1/m^3)(a+1/4)[m m'' - (3/2) m'^2] - sqrt(2/m) beta'.
inline double commutator_value(const FactorizationPair& pair, double x) {
    const double m = mass_at(pair.family, x);
    const double mp = mass_derivative(pair.family, x);
    const double mpp = mass_second_derivative(pair.family, x);
    const double a = pair.ordering.a;
    return -(a + 0.25) * (m * mpp - 1.5 * mp * mp) / (m * m * m) -
           std::sqrt(2.0 / m) * pair.beta_prime(x);
}

// The potential a ladder pair factorizes, written in terms of beta; for the
// oscillator beta it collapses to (1/2)(int^x m^{1/2} dr)^2.
inline double potential_from_beta(const FactorizationPair& pair, double x) {
    const double m = mass_at(pair.family, x);
    const double mp = mass_derivative(pair.family, x);
    const double mpp = mass_second_derivative(pair.family, x);
    const double a = pair.ordering.a;
    const double b = pair.beta(x);
    const double root = std::sqrt(2.0 * m * m * m);
    return b * b + (2.0 / root) * (a + 0.25) *
                       (mp * b + (m * mpp - 1.5 * mp * mp) / (2.0 * root));
}

// Partner potential of the intertwined Hamiltonian: V~ = V - [A,B].
inline double partner_potential(const FactorizationPair& pair, const PotentialSpec& v, double x) {
    return v(x) - commutator_value(pair, x);
}

struct MissingState {
    double psi_tilde_eps = 0.0;  // solution of A psi~ = 0, eigenstate of H~ at eps
    double psi_m = 0.0;          // solution of B psi_M = 0, eigenstate of H at eps
    bool tilde_normalizable = false;
    bool m_normalizable = false;
};

namespace detail {

struct MissingStateData {
    std::function<double(double)> psi_tilde;
    std::function<double(double)> psi_m;
    bool tilde_normalizable = false;
    bool m_normalizable = false;
};

inline MissingStateData build_missing_states(const FactorizationPair& pair) {
    const CoordinateMap map = coordinate_map(pair.family);
    const double base = map.inverse(0.0);
    const double a = pair.ordering.a;
    const MassFamily family = pair.family;
    auto integrand = [family, beta = pair.beta](double r) {
        return std::sqrt(mass_at(family, r)) * beta(r);
    };
    auto exponent = [integrand, base](double x) {
        return M_SQRT2 * adaptive_simpson(integrand, base, x, 1e-11);
    };
    auto raw_tilde = [family, a, exponent](double x) {
        return std::pow(mass_at(family, x), a + 0.5) * std::exp(exponent(x));
    };
    auto raw_m = [family, a, exponent](double x) {
        return std::pow(mass_at(family, x), -a) * std::exp(-exponent(x));
    };

    // probe growth toward each end of the mapped window |s| <= 12
    auto normalizable = [&](const std::function<double(double)>& psi) {
        for (const double s_edge : {-1.0, 1.0}) {
            double prev = std::abs(psi(map.inverse(6.0 * s_edge)));
            for (const double s : {8.0, 10.0, 12.0}) {
                const double cur = std::abs(psi(map.inverse(s * s_edge)));
                if (cur > prev && cur > 1e-10) return false;
                prev = cur;
            }
        }
        return true;
    };

    MissingStateData data;
    data.tilde_normalizable = normalizable(raw_tilde);
    data.m_normalizable = normalizable(raw_m);
    auto normalize = [&](const std::function<double(double)>& psi) {
        const double xa = map.inverse(-12.0);
        const double xb = map.inverse(12.0);
        const double n2 = adaptive_simpson([psi](double x) { return psi(x) * psi(x); }, xa, xb,
                                           1e-12);
        return 1.0 / std::sqrt(n2);
    };
    const double c_tilde = data.tilde_normalizable ? normalize(raw_tilde) : 1.0;
    const double c_m = data.m_normalizable ? normalize(raw_m) : 1.0;
    data.psi_tilde = [raw_tilde, c_tilde](double x) { return c_tilde * raw_tilde(x); };
    data.psi_m = [raw_m, c_m](double x) { return c_m * raw_m(x); };
    return data;
}

}  // namespace detail

// psi~_eps = C m^{a+1/2} exp(+sqrt2 int^x m^{1/2} beta dr) and
// psi_M proportional to m^{1/2}/psi~_eps, normalized when square-integrable.
inline MissingState missing_state(const FactorizationPair& pair, double x) {
    const detail::MissingStateData data = detail::build_missing_states(pair);
    MissingState out;
    out.psi_tilde_eps = data.psi_tilde(x);
    out.psi_m = data.psi_m(x);
    out.tilde_normalizable = data.tilde_normalizable;
    out.m_normalizable = data.m_normalizable;
    return out;
}

enum class LadderDirection { Raise, Lower };

// Dimensionless ladder action on a uniform y-space sample:
// lower = d/dy + y, raise = -d/dy + y (convention [a-, a+] = 2, so
// lowering the k-th oscillator eigenfunction yields sqrt(2k) phi_{k-1}).
inline WaveSample apply_ladder(LadderDirection dir, const FirstKindOscillator&,
                               const WaveSample& wave) {
    wave.validate();
    if (wave.space != Space::Y) throw DomainError("apply_ladder: expected a y-space sample");
    const std::size_t n = wave.grid.size();
    if (n < 1001) throw DomainError("apply_ladder: grid too coarse, need >= 1001 points");
    const double h = wave.grid[1] - wave.grid[0];
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(wave.grid[i] - wave.grid[i - 1] - h) > 1e-8 * h)
            throw DomainError("apply_ladder: grid must be uniform");

    const auto& v = wave.values;
    std::vector<std::complex<double>> d(n);
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / (12.0 * h);
    d[0] = (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4]) / (12.0 * h);
    d[1] = (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]) / (12.0 * h);
    d[n - 2] =
        (3.0 * v[n - 1] + 10.0 * v[n - 2] - 18.0 * v[n - 3] + 6.0 * v[n - 4] - v[n - 5]) /
        (12.0 * h);
    d[n - 1] = (25.0 * v[n - 1] - 48.0 * v[n - 2] + 36.0 * v[n - 3] - 16.0 * v[n - 4] +
                3.0 * v[n - 5]) /
               (12.0 * h);

    WaveSample out;
    out.space = Space::Y;
    out.grid = wave.grid;
    out.values.resize(n);
    const double sign = (dir == LadderDirection::Lower) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) out.values[i] = sign * d[i] + wave.grid[i] * v[i];
    return out;
}

}  // namespace pdm
