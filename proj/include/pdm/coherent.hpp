#pragma once

// Coherent states of first-kind PDM oscillators: eigenstates of the
// lowering operator with amplitudes c_k = z^k c_0 / sqrt(2^k k!) and
// c_0 = e^{-|z|^2/4}, Poissonian level statistics with mean |z|^2/2, the
// energy moments <H> = |z|^2 + 1 (levels E_k = 2k+1 in these units) and
// Delta H = sqrt(2)|z|, and minimal y-space uncertainty.

#include <cmath>
#include <complex>
#include <vector>

#include "pdm/ladder.hpp"
#include "pdm/mass.hpp"
#include "pdm/special_functions.hpp"
#include "pdm/wave.hpp"

namespace pdm {

// Smallest truncation keeping the Poisson tail below 1e-12.
inline int required_truncation(std::complex<double> z) {
    const double mean = 0.5 * std::norm(z);
    return static_cast<int>(std::ceil(mean + 12.0 * std::sqrt(mean + 1.0) + 10.0));
}

inline std::vector<std::complex<double>> coherent_amplitudes(std::complex<double> z,
                                                             int n_trunc) {
    const int need = required_truncation(z);
    if (n_trunc < need)
        throw DomainError("coherent_amplitudes: truncation " + std::to_string(n_trunc) +
                          " too small for this z; need at least " + std::to_string(need));
    std::vector<std::complex<double>> c(static_cast<std::size_t>(n_trunc) + 1);
    c[0] = std::exp(-0.25 * std::norm(z));
    for (int k = 1; k <= n_trunc; ++k)
        c[static_cast<std::size_t>(k)] =
            c[static_cast<std::size_t>(k) - 1] * z / std::sqrt(2.0 * k);
    return c;
}

struct CoherentState {
    std::complex<double> z;
    int n_trunc = 0;
    std::vector<std::complex<double>> amplitudes;
    MassFamily family;
};

inline CoherentState make_coherent(std::complex<double> z, const MassFamily& family,
                                   int n_trunc = -1) {
    CoherentState state;
    state.z = z;
    state.n_trunc = n_trunc < 0 ? required_truncation(z) : n_trunc;
    state.amplitudes = coherent_amplitudes(z, state.n_trunc);
    state.family = family;
    return state;
}

// Theta_z(x) = (m(x)/m0)^{1/4} e^{-|z|^2/4} sum z^k/sqrt(2^k k!) phi_k(s(x)).
inline std::complex<double> coherent_wavefunction(const CoherentState& state, double x) {
    const CoordinateMap map = coordinate_map(state.family);
    if (!map.x_domain.contains(x))
        throw DomainError("coherent_wavefunction: x outside the family domain");
    const double y = map.forward(x);
    std::complex<double> sum = 0.0;
    for (int k = 0; k <= state.n_trunc; ++k)
        sum += state.amplitudes[static_cast<std::size_t>(k)] * hermite_function(k, y);
    return std::sqrt(map.jacobian(x)) * sum;
}

// Constant-mass coherent wavefunction theta_z on a y-grid.
inline WaveSample sample_coherent_y(const CoherentState& state, double lo, double hi, int n) {
    WaveSample w;
    w.space = Space::Y;
    w.grid = linspace(lo, hi, n);
    w.values.resize(w.grid.size());
    for (std::size_t i = 0; i < w.grid.size(); ++i) {
        std::complex<double> sum = 0.0;
        for (int k = 0; k <= state.n_trunc; ++k)
            sum += state.amplitudes[static_cast<std::size_t>(k)] * hermite_function(k, w.grid[i]);
        w.values[i] = sum;
    }
    return w;
}

// P_n = |z|^{2n} e^{-|z|^2/2} / (2^n n!), evaluated in log space.
inline double poisson_prob(std::complex<double> z, int n) {
    if (n < 0) throw DomainError("poisson_prob: n must be nonnegative");
    const double mean = 0.5 * std::norm(z);
    if (mean == 0.0) return n == 0 ? 1.0 : 0.0;
    return std::exp(n * std::log(mean) - mean - log_gamma(n + 1.0));
}

struct EnergyMoments {
    double mean = 1.0;    // <H> in the dimensionless convention E_k = 2k + 1
    double stddev = 0.0;  // sqrt(2) |z|
};

inline EnergyMoments energy_moments(std::complex<double> z) {
    const double a2 = std::norm(z);
    return {a2 + 1.0, std::sqrt(2.0) * std::abs(z)};
}

// Delta y * Delta p of an arbitrary y-space sample (p = -i d/dy), via
// Simpson quadrature and 4th-order finite differences.
inline double wave_uncertainty_product(const WaveSample& wave) {
    wave.validate();
    if (wave.space != Space::Y)
        throw DomainError("wave_uncertainty_product: expected a y-space sample");
    const std::size_t n = wave.grid.size();
    if (n < 101) throw DomainError("wave_uncertainty_product: grid too coarse");
    const double h = wave.grid[1] - wave.grid[0];

    std::vector<double> dens(n), ydens(n), y2dens(n);
    for (std::size_t i = 0; i < n; ++i) {
        dens[i] = std::norm(wave.values[i]);
        ydens[i] = wave.grid[i] * dens[i];
        y2dens[i] = wave.grid[i] * wave.grid[i] * dens[i];
    }
    const double nrm = simpson_uniform(dens, h);
    if (nrm <= 0.0) throw ConvergenceError("wave_uncertainty_product: zero norm");
    const double ymean = simpson_uniform(ydens, h) / nrm;
    const double y2 = simpson_uniform(y2dens, h) / nrm;

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

    std::vector<double> p2dens(n), pdens(n);
    for (std::size_t i = 0; i < n; ++i) {
        p2dens[i] = std::norm(d[i]);
        pdens[i] = (std::conj(v[i]) * std::complex<double>(0.0, -1.0) * d[i]).real();
    }
    const double pmean = simpson_uniform(pdens, h) / nrm;
    const double p2 = simpson_uniform(p2dens, h) / nrm;

    const double dy = std::sqrt(std::max(y2 - ymean * ymean, 0.0));
    const double dp = std::sqrt(std::max(p2 - pmean * pmean, 0.0));
    return dy * dp;
}

// Uncertainty product of the coherent state, evaluated in y-space.
inline double uncertainty_product(const CoherentState& state) {
    const double center = state.z.real();
    const WaveSample theta = sample_coherent_y(state, center - 14.0, center + 14.0, 4001);
    return wave_uncertainty_product(theta);
}

}  // namespace pdm
