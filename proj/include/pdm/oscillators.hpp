#pragma once

// The oscillator catalog.  First-kind oscillators carry the equidistant
// spectrum k + 1/2 by construction: the x-space interaction is the
// pull-back (1/2) s(x)^2 of the harmonic well.  Second-kind oscillators put
// a literal harmonic (or squeezed) interaction on a position-dependent
// mass; their spectra are read off the pushed-forward y-space problem.

#include <cmath>
#include <string>

#include "pdm/mass.hpp"
#include "pdm/special_functions.hpp"
#include "pdm/transform.hpp"

namespace pdm {

struct FirstKindOscillator {
    MassFamily family;
    OrderingParameter ordering;
    PotentialSpec potential;  // x-space pull-back of the harmonic well
    CoordinateMap map;
};

inline FirstKindOscillator make_first_kind(const MassFamily& family) {
    FirstKindOscillator osc;
    osc.family = family;
    osc.ordering = allowed_ordering_for(family);
    osc.map = coordinate_map(family);
    const bool unit_scale = family.lambda == 1.0;
    switch (family.kind) {
        case MassKind::Constant:
            osc.potential = PotentialSpec::harmonic();
            break;
        case MassKind::Regular:
            osc.potential = unit_scale
                                ? PotentialSpec::arcsinh_sq()
                                : pullback_potential(PotentialSpec::harmonic(), osc.map);
            break;
        case MassKind::Singular0:
            osc.potential = unit_scale
                                ? PotentialSpec::log2(family.x0)
                                : pullback_potential(PotentialSpec::harmonic(), osc.map);
            break;
        case MassKind::SingularN: {
            // (1/2)(2n+1)^2 (x0 + lambda x)^{2/(2n+1)} / lambda^2
            const double x0 = family.x0;
            const double l = family.lambda;
            const int den = family.exponent_den();
            osc.potential = PotentialSpec::custom(
                [x0, l, den](double x) {
                    const double r = detail::odd_root(x0 + l * x, den);
                    return 0.5 * den * den * r * r / (l * l);
                },
                Interval::full_line(), "odd-root-law(n=" + std::to_string(family.n) + ")");
            break;
        }
        default:
            osc.potential = pullback_potential(PotentialSpec::harmonic(), osc.map);
            break;
    }
    return osc;
}

// psi_k(x) = J^{1/2}(x) phi_k(s(x)) with phi_k the normalized
// Hermite-Gaussian; exact spectrum k + 1/2.
inline double first_kind_eigenfunction(const FirstKindOscillator& osc, int k, double x) {
    if (!osc.map.x_domain.contains(x))
        throw DomainError("first_kind_eigenfunction: x outside the family domain");
    return std::sqrt(osc.map.jacobian(x)) * hermite_function(k, osc.map.forward(x));
}

// Squeezed (singular) oscillator on z = x0 + x > 0:
// (1/8)[(1/z - z)^2 + 2(1 - sqrt(2))].
inline double squeezed_potential(double x, double x0) {
    const double z = x0 + x;
    if (z <= 0.0) throw DomainError("squeezed_potential: x below the wall t0 = -x0");
    const double r = 1.0 / z - z;
    return 0.125 * (r * r + 2.0 * (1.0 - M_SQRT2));
}

// Normalized half-line eigenfunctions
// phi_k(z) = sqrt(k!/(2^{1/sqrt2} Gamma(k+1+1/sqrt2)))
//            z^{(1+sqrt2)/2} e^{-z^2/4} L_k^{(1/sqrt2)}(z^2/2).
inline double squeezed_eigenfunction(int k, double z) {
    if (k < 0) throw DomainError("squeezed_eigenfunction: level must be nonnegative");
    if (z <= 0.0) throw DomainError("squeezed_eigenfunction: z must be positive");
    const double alpha = 1.0 / M_SQRT2;
    const double log_norm =
        0.5 * (log_gamma(k + 1.0) - alpha * std::log(2.0) - log_gamma(k + 1.0 + alpha));
    const double ell = 0.5 * (1.0 + M_SQRT2);
    return std::exp(log_norm + ell * std::log(z) - 0.25 * z * z) *
           laguerre(k, alpha, 0.5 * z * z);
}

struct SecondKindOscillator {
    MassFamily family;
    PotentialSpec x_potential;
    PotentialSpec y_potential;
    CoordinateMap map;
};

// Assemble the (family, x-potential) pair and its y-space image.  The
// harmonic interaction lives on the whole line, so the half-line a0 family
// is rejected; the squeezed interaction requires the wall offsets to agree
// for the half-line family.
inline SecondKindOscillator build_second_kind(const MassFamily& family,
                                              const PotentialSpec& x_pot) {
    if (x_pot.kind != PotentialKind::Harmonic && x_pot.kind != PotentialKind::Squeezed)
        throw DomainError("build_second_kind: x-potential must be harmonic or squeezed");
    if (x_pot.kind == PotentialKind::Harmonic && family.kind == MassKind::Singular0)
        throw DomainError("build_second_kind: the harmonic well needs the full line but the "
                          "singular0 family maps only the half-line x > t0");
    SecondKindOscillator osc;
    osc.family = family;
    osc.x_potential = x_pot;
    osc.map = coordinate_map(family);
    osc.y_potential = pushforward_potential(x_pot, osc.map);
    return osc;
}

}  // namespace pdm
