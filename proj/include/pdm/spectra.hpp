#pragma once

// Leading-order WKB quantization: the closed-form even-power-law spectrum,
// its j_n constant and crossing index, a general turning-point quadrature
// quantizer, and the sinh^2 transcendental solver behind the reference
// level table.
//
// The action integral int sqrt(2(E - V)) dy is evaluated on the real line
// with the endpoint square-root singularity removed by y = y0 sin(theta);
// Gauss-Legendre in theta is doubled from 200 nodes until successive
// estimates agree below 1e-12.

#include <cmath>
#include <utility>
#include <vector>

#include "pdm/numerics.hpp"
#include "pdm/special_functions.hpp"
#include "pdm/transform.hpp"

namespace pdm {

enum class WkbMethod { ClosedForm, Quadrature };

struct WkbLevel {
    int k = 0;
    double energy = 0.0;
    std::pair<double, double> turning_points{0.0, 0.0};
    WkbMethod method = WkbMethod::Quadrature;
};

// j_n = sqrt(pi) Gamma(1/(4n+2)) / (2(n+1) Gamma((n+1)/(2n+1)))
//     = int_{-1}^{1} sqrt(1 - z^{4n+2}) dz.
inline double jn_constant(int n) {
    if (n < 0) throw DomainError("jn_constant: n must be nonnegative");
    const double nn = static_cast<double>(n);
    return std::sqrt(M_PI) * gamma_fn(1.0 / (4.0 * nn + 2.0)) /
           (2.0 * (nn + 1.0) * gamma_fn((nn + 1.0) / (2.0 * nn + 1.0)));
}

// E_k(n) = (1/2) [ (pi/j_n) (k+1/2)/(2n+1) ]^{(2n+1)/(n+1)}.  The n = 0
// evaluation continues the formula analytically and lands on k + 1/2.
inline double powerlaw_energy(int n, int k) {
    if (n < 0 || k < 0) throw DomainError("powerlaw_energy: indices must be nonnegative");
    const double nn = static_cast<double>(n);
    const double base = (M_PI / jn_constant(n)) * (k + 0.5) / (2.0 * nn + 1.0);
    return 0.5 * std::pow(base, (2.0 * nn + 1.0) / (nn + 1.0));
}

// Root of E_k(n) = k + 1/2 in the continuous level index.
inline double crossing_index(int n) {
    if (n < 1) throw DomainError("crossing_index: n must be >= 1");
    const double nn = static_cast<double>(n);
    const double bracket = (2.0 * nn + 1.0) * gamma_fn(1.0 / (4.0 * nn + 2.0)) /
                           (std::sqrt(M_PI) * (nn + 1.0) * gamma_fn((nn + 1.0) / (2.0 * nn + 1.0)));
    return 0.5 * (std::pow(bracket, (2.0 * nn + 1.0) / nn) - 1.0);
}

namespace detail {

struct ActionOptions {
    int start_nodes = 200;
    int max_nodes = 204800;
    double tol = 1e-12;
};

// int_{y1}^{y2} sqrt(2 max(E - V, 0)) dy with sin-substituted endpoints.
inline double action_integral(const PotentialSpec& v, double energy, double y1, double y2,
                              ActionOptions opt = {}) {
    const double mid = 0.5 * (y1 + y2);
    const double half = 0.5 * (y2 - y1);
    auto integrand = [&](double theta) {
        const double y = mid + half * std::sin(theta);
        const double gap = energy - v(y);
        return gap > 0.0 ? std::sqrt(2.0 * gap) * half * std::cos(theta) : 0.0;
    };
    double prev = gauss_legendre_integrate(integrand, -M_PI_2, M_PI_2, opt.start_nodes);
    for (int nodes = 2 * opt.start_nodes; nodes <= opt.max_nodes; nodes *= 2) {
        const double cur = gauss_legendre_integrate(integrand, -M_PI_2, M_PI_2, nodes);
        if (std::abs(cur - prev) < opt.tol) return cur;
        prev = cur;
    }
    throw ConvergenceError("action_integral: quadrature refinement stalled at E = " +
                           std::to_string(energy));
}

// Interior minimum of a confining potential: coarse probe then golden refine.
inline double potential_minimum(const PotentialSpec& v) {
    double center = 0.0;
    if (!v.domain.contains(center)) {
        if (v.domain.bounded_below() && v.domain.bounded_above())
            center = 0.5 * (v.domain.lo + v.domain.hi);
        else if (v.domain.bounded_below())
            center = v.domain.lo + 1.0;
        else
            center = v.domain.hi - 1.0;
    }
    double best_y = center;
    double best_v = v(center);
    for (int j = 0; j < 64; ++j) {
        const double step = 0.1 * std::pow(1.25, j);
        for (const double y : {center - step, center + step}) {
            double yy = y;
            if (!v.domain.contains(yy)) {
                if (v.domain.bounded_below() && yy <= v.domain.lo)
                    yy = v.domain.lo + (best_y - v.domain.lo) * 0.5;
                else
                    continue;
            }
            const double val = v(yy);
            if (val < best_v) {
                best_v = val;
                best_y = yy;
            }
        }
        if (step > 64.0) break;
    }
    // golden-section refine around the best probe
    double a = best_y - 0.5, b = best_y + 0.5;
    if (v.domain.bounded_below()) a = std::max(a, v.domain.lo + 0.25 * (best_y - v.domain.lo));
    if (v.domain.bounded_above()) b = std::min(b, v.domain.hi - 0.25 * (v.domain.hi - best_y));
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = v(c), fd = v(d);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + std::abs(a)); ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = v(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = v(d);
        }
    }
    return 0.5 * (a + b);
}

// Bracket-and-bisect V(y) = E on one side of the minimum.
inline double turning_point(const PotentialSpec& v, double energy, double y_min, bool right) {
    double inside = y_min;
    double outside = y_min;
    bool found = false;
    const Interval dom = v.domain;
    const bool finite_edge = right ? dom.bounded_above() : dom.bounded_below();
    const double edge = right ? dom.hi : dom.lo;
    double step = 0.25 * (1.0 + std::abs(y_min));
    for (int j = 0; j < 600; ++j) {
        double probe;
        if (finite_edge) {
            probe = right ? outside + 0.5 * (edge - outside) : outside - 0.5 * (outside - edge);
            // a hard wall the energy never clears acts as the turning point
            if (std::abs(probe - edge) < 1e-13 * (1.0 + std::abs(edge))) return probe;
        } else {
            probe = right ? outside + step : outside - step;
            step *= 1.5;
        }
        if (v(probe) > energy) {
            outside = probe;
            found = true;
            break;
        }
        inside = outside = probe;
        if (std::abs(probe) > 1e8)
            throw DomainError("turning_point: potential '" + v.display_name() +
                              "' is not confining at this energy");
    }
    if (!found)
        throw DomainError("turning_point: no classical turning point found for '" +
                          v.display_name() + "'");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (inside + outside);
        if (v(mid) > energy)
            outside = mid;
        else
            inside = mid;
        if (std::abs(outside - inside) < 1e-15 * (1.0 + std::abs(mid))) break;
    }
    return 0.5 * (inside + outside);
}

}  // namespace detail

// Solve int sqrt(2(E - V)) dy = pi (k + 1/2) by bisection on E.  The well
// may be asymmetric; turning points are located independently on each side.
inline WkbLevel wkb_quantize(const PotentialSpec& v, int k) {
    if (k < 0) throw DomainError("wkb_quantize: level index must be nonnegative");
    const double y_min = detail::potential_minimum(v);
    const double v_min = v(y_min);
    const double target = M_PI * (k + 0.5);

    auto action_at = [&](double energy) {
        const double yl = detail::turning_point(v, energy, y_min, false);
        const double yr = detail::turning_point(v, energy, y_min, true);
        return detail::action_integral(v, energy, yl, yr);
    };

    double hi = v_min + 1.0;
    int guard = 0;
    while (action_at(hi) < target) {
        hi = v_min + 2.0 * (hi - v_min);
        if (++guard > 200) throw ConvergenceError("wkb_quantize: failed to bracket the level");
    }
    double lo = v_min;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (action_at(mid) < target)
            lo = mid;
        else
            hi = mid;
        if ((hi - lo) <= 1e-12 * (1.0 + std::abs(hi))) break;
    }
    WkbLevel level;
    level.k = k;
    level.energy = 0.5 * (lo + hi);
    level.turning_points = {detail::turning_point(v, level.energy, y_min, false),
                            detail::turning_point(v, level.energy, y_min, true)};
    level.method = WkbMethod::Quadrature;
    return level;
}

// Closed-form power-law level with its analytic turning points.
inline WkbLevel powerlaw_wkb_level(int n, int k) {
    WkbLevel level;
    level.k = k;
    level.energy = powerlaw_energy(n, k);
    const double y0 = (2.0 * n + 1.0) * std::pow(2.0 * level.energy, 1.0 / (4.0 * n + 2.0));
    level.turning_points = {-y0, y0};
    level.method = WkbMethod::ClosedForm;
    return level;
}

// First k_max + 1 WKB levels of V = sinh^2(y)/2, using the closed-form
// turning points +/- arcsinh(sqrt(2E)).
inline std::vector<WkbLevel> sinh2_wkb_spectrum(int k_max) {
    if (k_max < 0) throw DomainError("sinh2_wkb_spectrum: k_max must be nonnegative");
    const PotentialSpec v = PotentialSpec::sinh2();
    std::vector<WkbLevel> levels;
    levels.reserve(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        const double target = M_PI * (k + 0.5);
        auto action_at = [&](double energy) {
            const double y0 = std::asinh(std::sqrt(2.0 * energy));
            return detail::action_integral(v, energy, -y0, y0);
        };
        double lo = 0.0, hi = 1.0;
        int guard = 0;
        while (action_at(hi) < target) {
            hi *= 2.0;
            if (++guard > 100)
                throw ConvergenceError("sinh2_wkb_spectrum: failed to bracket level");
        }
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (action_at(mid) < target)
                lo = mid;
            else
                hi = mid;
            if ((hi - lo) <= 1e-12 * (1.0 + std::abs(hi))) break;
        }
        WkbLevel level;
        level.k = k;
        level.energy = 0.5 * (lo + hi);
        const double y0 = std::asinh(std::sqrt(2.0 * level.energy));
        level.turning_points = {-y0, y0};
        level.method = WkbMethod::Quadrature;
        levels.push_back(level);
    }
    return levels;
}

}  // namespace pdm
