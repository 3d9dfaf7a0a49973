#pragma once

// Direct bound-state solver for -1/2 phi'' + V phi = E phi on the line or a
// half-line: Numerov sweeps from both ends, node-count bracketing, then
// bisection on the matching-derivative discontinuity at the rightmost
// classical turning point.
//
// Domain truncation extends past the outermost turning point until both
// V >= E_top + margin and the WKB decay integral exceeds ~20, so the
// Dirichlet cutoff sits below the 1e-8 tail threshold even for steep wells.
// Singular walls g2/z^2 are entered through a Frobenius-seeded start; walls
// steeper than z^-2 are truncated where the potential is numerically dead.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pdm/spectra.hpp"
#include "pdm/transform.hpp"
#include "pdm/wave.hpp"

namespace pdm {

struct SolverConfig {
    int grid_points = 4001;     // odd, >= 201
    double ymax_margin = 25.0;  // V at the cutoff exceeds the top level by this much
    double energy_tol = 1e-10;
    int max_levels = 128;

    void validate() const {
        if (grid_points < 201 || grid_points % 2 == 0)
            throw DomainError("SolverConfig: grid_points must be odd and >= 201");
        if (energy_tol <= 0.0) throw DomainError("SolverConfig: energy_tol must be positive");
        if (max_levels < 1) throw DomainError("SolverConfig: max_levels must be positive");
    }
};

struct EigenSolution {
    int k = 0;
    double energy = 0.0;
    WaveSample wave;  // y-space, normalized
    double norm = 1.0;
};

namespace detail {

struct FrobeniusData {
    double ell = 1.0;  // regular indicial exponent
    double g2 = 0.0;   // z^2 coefficient of 2V at the wall
    double v0 = 0.0;   // constant term of 2V at the wall
    double v2 = 0.0;   // z^2 term of 2V at the wall
};

// Small-z data for 2V(z) = g2/z^2 + v0 + v2 z^2 + ... at a wall.
inline FrobeniusData wall_expansion(const PotentialSpec& v) {
    FrobeniusData data;
    if (v.kind == PotentialKind::Squeezed) {
        // 2V = 1/(4 z^2) + z^2/4 - sqrt(2)/2 (+ 2 shift), exactly
        data.g2 = 0.25;
        data.v0 = -M_SQRT2 / 2.0 + 2.0 * v.shift;
        data.v2 = 0.25;
    } else {
        const double wall = v.domain.lo;
        const double zp = 1e-4;
        data.g2 = 2.0 * v(wall + zp) * zp * zp;
        if (std::abs(data.g2) < 1e-6) data.g2 = 0.0;
        const double zc = 1e-3;
        data.v0 = 2.0 * v(wall + zc) - data.g2 / (zc * zc);
        data.v2 = 0.0;
    }
    data.ell = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * data.g2));
    return data;
}

// phi = sum_m a_m z^{ell+2m}; a_m = [a_{m-1}(v0 - 2E) + a_{m-2} v2] / (2m(2 ell + 2m - 1)).
inline std::vector<double> frobenius_seed(const std::vector<double>& z, const FrobeniusData& d,
                                          double energy) {
    constexpr int terms = 4;
    double a[terms] = {1.0, 0.0, 0.0, 0.0};
    for (int m = 1; m < terms; ++m) {
        const double prev2 = (m >= 2) ? a[m - 2] : 0.0;
        a[m] = (a[m - 1] * (d.v0 - 2.0 * energy) + prev2 * d.v2) /
               (2.0 * m * (2.0 * d.ell + 2.0 * m - 1.0));
    }
    std::vector<double> phi(z.size(), 0.0);
    for (std::size_t i = 0; i < z.size(); ++i) {
        double s = 0.0;
        for (int m = 0; m < terms; ++m) s += a[m] * std::pow(z[i], d.ell + 2.0 * m);
        phi[i] = s;
    }
    return phi;
}

struct SolverGrid {
    std::vector<double> y;
    std::vector<double> v;
    double h = 0.0;
    int start = 0;          // first live index (dead-wall truncation)
    int nseed = 2;          // seeded points at the left end
    bool left_wall = false;  // finite left edge (no tail check there)
    bool right_wall = false;
    bool frobenius = false;
    FrobeniusData frob;
};

// Extend past the turning point until the potential clears the margin and
// the WKB decay integral reaches 0.8 * margin (20 at the default margin).
inline double obstructed_edge(const PotentialSpec& v, double turn, double e_top, double margin,
                              bool right) {
    const double sgn = right ? 1.0 : -1.0;
    auto kappa = [&](double y) {
        const double gap = v(y) - e_top;
        return gap > 0.0 ? std::sqrt(2.0 * gap) : 0.0;
    };
    double dist = 0.5;
    for (int j = 0; j < 200; ++j) {
        const double edge = turn + sgn * dist;
        const double decay = std::abs(
            gauss_legendre_integrate(kappa, turn, edge, 64));
        if (v(edge) >= e_top + margin && decay >= 0.8 * margin) return edge;
        dist *= 1.25;
        if (dist > 1e6)
            throw DomainError("schrodinger: potential '" + v.display_name() +
                              "' is not confining");
    }
    throw DomainError("schrodinger: could not place the domain cutoff");
}

inline SolverGrid build_grid(const PotentialSpec& v, int k_max, const SolverConfig& cfg,
                             bool halfline) {
    const double e_top = wkb_quantize(v, k_max + 1).energy;
    const double y_min = potential_minimum(v);

    double left, right;
    const bool left_finite = v.domain.bounded_below();
    const bool right_finite = v.domain.bounded_above();

    const double turn_r = turning_point(v, e_top, y_min, true);
    right = right_finite ? v.domain.hi - 1e-9 * (1.0 + std::abs(v.domain.hi))
                         : obstructed_edge(v, turn_r, e_top, cfg.ymax_margin, true);
    if (left_finite) {
        left = v.domain.lo + 1e-6;
    } else {
        const double turn_l = turning_point(v, e_top, y_min, false);
        left = obstructed_edge(v, turn_l, e_top, cfg.ymax_margin, false);
    }

    SolverGrid grid;
    grid.y = linspace(left, right, cfg.grid_points);
    grid.h = grid.y[1] - grid.y[0];
    grid.v.resize(grid.y.size());
    grid.left_wall = left_finite;
    grid.right_wall = right_finite;

    if (halfline) {
        if (!left_finite) throw DomainError("solve_halfline: potential has no left wall");
        grid.frob = wall_expansion(v);
        // Frobenius start only for walls up to 1/z^2; steeper walls are
        // numerically dead and enter via a plain Dirichlet cutoff.
        if (grid.frob.g2 <= 25.0) {
            grid.frobenius = true;
            grid.nseed = 4;
        }
    }

    const double cap = 2.0 / (grid.h * grid.h);
    int start = 0;
    if (!grid.frobenius) {
        while (start + 8 < static_cast<int>(grid.y.size())) {
            const double val = v(grid.y[static_cast<std::size_t>(start)]);
            if (std::isfinite(val) && val <= cap) break;
            ++start;
        }
    }
    grid.start = start;
    for (std::size_t i = static_cast<std::size_t>(start); i < grid.y.size(); ++i)
        grid.v[i] = v(grid.y[i]);
    for (int i = 0; i < start; ++i) grid.v[static_cast<std::size_t>(i)] = cap;
    return grid;
}

struct SweepResult {
    int nodes = 0;
    double delta = 0.0;
    int match = 0;
};

inline void seed_left(const SolverGrid& g, double energy, std::vector<double>& phi, int& i0) {
    const int s = g.start;
    if (g.frobenius) {
        std::vector<double> z(static_cast<std::size_t>(g.nseed));
        const double wall = g.y[0] - 1e-6;  // grid starts 1e-6 inside the wall
        for (int i = 0; i < g.nseed; ++i) z[static_cast<std::size_t>(i)] = g.y[static_cast<std::size_t>(i)] - wall;
        const std::vector<double> seed = frobenius_seed(z, g.frob, energy);
        for (int i = 0; i < g.nseed; ++i) phi[static_cast<std::size_t>(i)] = seed[static_cast<std::size_t>(i)];
        i0 = g.nseed;
    } else {
        phi[static_cast<std::size_t>(s)] = 0.0;
        phi[static_cast<std::size_t>(s) + 1] = 1e-8;
        i0 = s + 2;
    }
}

inline SweepResult sweep(const SolverGrid& g, double energy) {
    const int n = static_cast<int>(g.y.size());
    const double c = g.h * g.h / 12.0;
    std::vector<double> f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        f[static_cast<std::size_t>(i)] = 2.0 * (g.v[static_cast<std::size_t>(i)] - energy);

    int match = g.start;
    for (int i = n - 1; i >= g.start; --i)
        if (f[static_cast<std::size_t>(i)] <= 0.0) {
            match = i;
            break;
        }
    match = std::clamp(match, g.start + g.nseed + 4, n - 6);

    // full left sweep for the node count
    std::vector<double> phi(static_cast<std::size_t>(n), 0.0);
    int i0 = 0;
    seed_left(g, energy, phi, i0);
    int nodes = 0;
    for (int i = i0; i < n; ++i) {
        const std::size_t s = static_cast<std::size_t>(i);
        phi[s] = (2.0 * phi[s - 1] * (1.0 + 5.0 * c * f[s - 1]) -
                  phi[s - 2] * (1.0 - c * f[s - 2])) /
                 (1.0 - c * f[s]);
        if (std::abs(phi[s]) > 1e160) {
            phi[s] *= 1e-160;
            phi[s - 1] *= 1e-160;
        }
        if (phi[s - 1] != 0.0 && phi[s - 1] * phi[s] < 0.0) ++nodes;
    }

    // left solution up to the matching point
    std::vector<double> pl(static_cast<std::size_t>(match) + 5, 0.0);
    seed_left(g, energy, pl, i0);
    for (int i = i0; i <= match + 4; ++i) {
        const std::size_t s = static_cast<std::size_t>(i);
        pl[s] = (2.0 * pl[s - 1] * (1.0 + 5.0 * c * f[s - 1]) -
                 pl[s - 2] * (1.0 - c * f[s - 2])) /
                (1.0 - c * f[s]);
        if (std::abs(pl[s]) > 1e160)
            for (std::size_t j = 0; j <= s; ++j) pl[j] *= 1e-160;
    }

    // right solution down to the matching point
    std::vector<double> pr(static_cast<std::size_t>(n), 0.0);
    pr[static_cast<std::size_t>(n) - 1] = 0.0;
    pr[static_cast<std::size_t>(n) - 2] = 1e-8;
    for (int i = n - 3; i >= match - 4; --i) {
        const std::size_t s = static_cast<std::size_t>(i);
        pr[s] = (2.0 * pr[s + 1] * (1.0 + 5.0 * c * f[s + 1]) -
                 pr[s + 2] * (1.0 - c * f[s + 2])) /
                (1.0 - c * f[s]);
        if (std::abs(pr[s]) > 1e160)
            for (std::size_t j = s; j < static_cast<std::size_t>(n); ++j) pr[j] *= 1e-160;
    }

    const std::size_t m = static_cast<std::size_t>(match);
    const double dl = (25.0 * pl[m] - 48.0 * pl[m - 1] + 36.0 * pl[m - 2] - 16.0 * pl[m - 3] +
                       3.0 * pl[m - 4]) /
                      (12.0 * g.h);
    const double dr = -(25.0 * pr[m] - 48.0 * pr[m + 1] + 36.0 * pr[m + 2] - 16.0 * pr[m + 3] +
                        3.0 * pr[m + 4]) /
                      (12.0 * g.h);
    const double scale = std::max(std::abs(pl[m] * pr[m]), 1e-280);
    return {nodes, (dl * pr[m] - dr * pl[m]) / scale, match};
}

inline std::vector<double> assemble(const SolverGrid& g, double energy, int match) {
    const int n = static_cast<int>(g.y.size());
    const double c = g.h * g.h / 12.0;
    std::vector<double> f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        f[static_cast<std::size_t>(i)] = 2.0 * (g.v[static_cast<std::size_t>(i)] - energy);

    std::vector<double> pl(static_cast<std::size_t>(match) + 1, 0.0);
    int i0 = 0;
    seed_left(g, energy, pl, i0);
    for (int i = i0; i <= match; ++i) {
        const std::size_t s = static_cast<std::size_t>(i);
        pl[s] = (2.0 * pl[s - 1] * (1.0 + 5.0 * c * f[s - 1]) -
                 pl[s - 2] * (1.0 - c * f[s - 2])) /
                (1.0 - c * f[s]);
        if (std::abs(pl[s]) > 1e160)
            for (std::size_t j = 0; j <= s; ++j) pl[j] *= 1e-160;
    }
    std::vector<double> pr(static_cast<std::size_t>(n), 0.0);
    pr[static_cast<std::size_t>(n) - 1] = 0.0;
    pr[static_cast<std::size_t>(n) - 2] = 1e-8;
    for (int i = n - 3; i >= match; --i) {
        const std::size_t s = static_cast<std::size_t>(i);
        pr[s] = (2.0 * pr[s + 1] * (1.0 + 5.0 * c * f[s + 1]) -
                 pr[s + 2] * (1.0 - c * f[s + 2])) /
                (1.0 - c * f[s]);
        if (std::abs(pr[s]) > 1e160)
            for (std::size_t j = s; j < static_cast<std::size_t>(n); ++j) pr[j] *= 1e-160;
    }

    std::vector<double> phi(static_cast<std::size_t>(n), 0.0);
    const double scale = pl[static_cast<std::size_t>(match)] / pr[static_cast<std::size_t>(match)];
    for (int i = 0; i <= match; ++i) phi[static_cast<std::size_t>(i)] = pl[static_cast<std::size_t>(i)];
    for (int i = match + 1; i < n; ++i)
        phi[static_cast<std::size_t>(i)] = scale * pr[static_cast<std::size_t>(i)];
    return phi;
}

inline int count_interior_nodes(const std::vector<double>& phi) {
    double peak = 0.0;
    for (double p : phi) peak = std::max(peak, std::abs(p));
    const double thr = 1e-9 * peak;
    int nodes = 0;
    double last = 0.0;
    for (double p : phi) {
        if (std::abs(p) <= thr) continue;
        if (last != 0.0 && last * p < 0.0) ++nodes;
        last = p;
    }
    return nodes;
}

inline std::vector<EigenSolution> solve_impl(const PotentialSpec& v, int k_max,
                                             const SolverConfig& cfg, bool halfline) {
    cfg.validate();
    if (k_max < 0) throw DomainError("schrodinger: k_max must be nonnegative");
    if (k_max + 1 > cfg.max_levels)
        throw DomainError("schrodinger: k_max exceeds SolverConfig::max_levels");

    const SolverGrid grid = build_grid(v, k_max, cfg, halfline);
    double v_floor = grid.v[static_cast<std::size_t>(grid.start)];
    for (std::size_t i = static_cast<std::size_t>(grid.start); i < grid.v.size(); ++i)
        v_floor = std::min(v_floor, grid.v[i]);

    std::vector<EigenSolution> out;
    out.reserve(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        // bracket by node count of the full left sweep
        double hi = v_floor + 1.0;
        int guard = 0;
        while (sweep(grid, hi).nodes <= k) {
            hi = v_floor + 2.0 * (hi - v_floor);
            if (++guard > 200)
                throw ConvergenceError("schrodinger: node bracket failed for level " +
                                       std::to_string(k));
        }
        double lo = v_floor;
        const double coarse = std::max(1e-3 * (1.0 + std::abs(hi)), 8.0 * cfg.energy_tol);
        while (hi - lo > coarse) {
            const double mid = 0.5 * (lo + hi);
            if (sweep(grid, mid).nodes <= k)
                lo = mid;
            else
                hi = mid;
        }
        // refine on the matching discontinuity when it changes sign
        double a = lo, b = hi;
        double da = sweep(grid, a).delta;
        const double db = sweep(grid, b).delta;
        if (da * db < 0.0) {
            while (b - a > cfg.energy_tol * (1.0 + std::abs(b))) {
                const double mid = 0.5 * (a + b);
                const double dm = sweep(grid, mid).delta;
                if (da * dm <= 0.0) {
                    b = mid;
                } else {
                    a = mid;
                    da = dm;
                }
            }
        } else {
            while (b - a > cfg.energy_tol * (1.0 + std::abs(b))) {
                const double mid = 0.5 * (a + b);
                if (sweep(grid, mid).nodes <= k)
                    a = mid;
                else
                    b = mid;
            }
        }
        const double energy = 0.5 * (a + b);

        const SweepResult sr = sweep(grid, energy);
        std::vector<double> phi = assemble(grid, energy, sr.match);

        const double nrm2 = simpson_uniform([&] {
            std::vector<double> d(phi.size());
            for (std::size_t i = 0; i < phi.size(); ++i) d[i] = phi[i] * phi[i];
            return d;
        }(), grid.h);
        const double inv = 1.0 / std::sqrt(nrm2);
        for (double& p : phi) p *= inv;

        double peak = 0.0;
        for (double p : phi) peak = std::max(peak, std::abs(p));
        for (double p : phi) {
            if (std::abs(p) > 0.01 * peak) {
                if (p < 0.0)
                    for (double& q : phi) q = -q;
                break;
            }
        }

        const int nodes = count_interior_nodes(phi);
        if (nodes != k)
            throw ConvergenceError("schrodinger: level " + std::to_string(k) + " produced " +
                                   std::to_string(nodes) + " nodes at E = " +
                                   std::to_string(energy));

        if (!grid.left_wall && std::abs(phi[1]) > 1e-8 * peak)
            throw DomainError("schrodinger: wavefunction tail exceeds 1e-8 at the left cutoff; "
                              "increase ymax_margin");
        if (!grid.right_wall && std::abs(phi[phi.size() - 2]) > 1e-8 * peak)
            throw DomainError("schrodinger: wavefunction tail exceeds 1e-8 at the right cutoff; "
                              "increase ymax_margin");

        EigenSolution sol;
        sol.k = k;
        sol.energy = energy;
        sol.wave = make_real_wave(grid.y, phi, Space::Y);
        sol.norm = 1.0;
        out.push_back(std::move(sol));
    }
    return out;
}

}  // namespace detail

// Levels 0..k_max of a confining potential on the (possibly truncated) line.
inline std::vector<EigenSolution> solve_levels(const PotentialSpec& v, int k_max,
                                               const SolverConfig& cfg = {}) {
    return detail::solve_impl(v, k_max, cfg, false);
}

// Levels of a potential with a wall at its finite left endpoint; singular
// g2/z^2 walls enter through the indicial exponent (1 + sqrt(1+4 g2))/2.
inline std::vector<EigenSolution> solve_halfline(const PotentialSpec& v, int k_max,
                                                 const SolverConfig& cfg = {}) {
    return detail::solve_impl(v, k_max, cfg, true);
}

}  // namespace pdm
