#pragma once

// Reduction machinery between the position-dependent-mass problem in x and
// the constant-mass problem in y: effective potentials, potential
// push-forward along a coordinate map, and norm-preserving wavefunction
// pull-back psi = J^{1/2} (phi o s).

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "pdm/mass.hpp"
#include "pdm/wave.hpp"

namespace pdm {

enum class PotentialKind { Harmonic, Squeezed, PowerLaw, Sinh2, Log2, ArcsinhSq, Custom };

inline std::string to_string(PotentialKind k) {
    switch (k) {
        case PotentialKind::Harmonic: return "harmonic";
        case PotentialKind::Squeezed: return "squeezed";
        case PotentialKind::PowerLaw: return "powerlaw";
        case PotentialKind::Sinh2: return "sinh2";
        case PotentialKind::Log2: return "log2";
        case PotentialKind::ArcsinhSq: return "arcsinhsq";
        case PotentialKind::Custom: return "custom";
    }
    return "unknown";
}

// One-dimensional potential in hbar*omega_0 units. Evaluation outside the
// declared open domain raises rather than extrapolates.
struct PotentialSpec {
    PotentialKind kind = PotentialKind::Harmonic;
    int n = 1;           // PowerLaw index
    double x0 = 0.0;     // offset of the squeezed / log wall, t0 = -x0
    double shift = 0.0;  // additive constant carried explicitly
    Interval domain = Interval::full_line();
    std::function<double(double)> fn;  // Custom only
    std::string label;

    static PotentialSpec harmonic(double shift = 0.0) {
        PotentialSpec v;
        v.kind = PotentialKind::Harmonic;
        v.shift = shift;
        return v;
    }
    static PotentialSpec squeezed(double x0 = 0.0, double shift = 0.0) {
        PotentialSpec v;
        v.kind = PotentialKind::Squeezed;
        v.x0 = x0;
        v.shift = shift;
        v.domain = Interval::above(-x0);
        return v;
    }
    static PotentialSpec power_law(int n, double shift = 0.0) {
        if (n < 1) throw DomainError("power_law: n must be >= 1");
        PotentialSpec v;
        v.kind = PotentialKind::PowerLaw;
        v.n = n;
        v.shift = shift;
        return v;
    }
    static PotentialSpec sinh2(double shift = 0.0) {
        PotentialSpec v;
        v.kind = PotentialKind::Sinh2;
        v.shift = shift;
        return v;
    }
    static PotentialSpec log2(double x0 = 0.0, double shift = 0.0) {
        PotentialSpec v;
        v.kind = PotentialKind::Log2;
        v.x0 = x0;
        v.shift = shift;
        v.domain = Interval::above(-x0);
        return v;
    }
    static PotentialSpec arcsinh_sq(double shift = 0.0) {
        PotentialSpec v;
        v.kind = PotentialKind::ArcsinhSq;
        v.shift = shift;
        return v;
    }
    static PotentialSpec custom(std::function<double(double)> f, Interval dom,
                                std::string label = "custom") {
        PotentialSpec v;
        v.kind = PotentialKind::Custom;
        v.fn = std::move(f);
        v.domain = dom;
        v.label = std::move(label);
        return v;
    }

    PotentialSpec restricted(Interval dom) const {
        PotentialSpec v = *this;
        v.domain = dom;
        return v;
    }

    double operator()(double u) const {
        if (!domain.contains(u))
            throw DomainError("potential '" + display_name() + "' evaluated outside its domain");
        switch (kind) {
            case PotentialKind::Harmonic: return 0.5 * u * u + shift;
            case PotentialKind::Squeezed: {
                const double z = x0 + u;
                const double r = 1.0 / z - z;
                return 0.125 * (r * r + 2.0 * (1.0 - M_SQRT2)) + shift;
            }
            case PotentialKind::PowerLaw: {
                const double t = u / (2.0 * n + 1.0);
                return 0.5 * std::pow(t, 4.0 * n + 2.0) + shift;
            }
            case PotentialKind::Sinh2: {
                const double s = std::sinh(u);
                return 0.5 * s * s + shift;
            }
            case PotentialKind::Log2: {
                const double g = std::log(x0 + u);
                return 0.5 * g * g + shift;
            }
            case PotentialKind::ArcsinhSq: {
                const double g = std::asinh(u);
                return 0.5 * g * g + shift;
            }
            case PotentialKind::Custom: return fn(u) + shift;
        }
        throw DomainError("potential: unhandled kind");
    }

    std::string display_name() const {
        return kind == PotentialKind::Custom && !label.empty() ? label : to_string(kind);
    }
};

// V_eff(y) = V(y) - (1/2m^3)[(1/4+a) m m'' - (7/16 + a(2+a)) m'^2], the mass
// derivatives taken at x = s^{-1}(y).  V is the potential already expressed
// in the y-representation.
inline double effective_potential(const PotentialSpec& v_y, const CoordinateMap& map, double a,
                                  double y) {
    const double base = v_y(y);
    if (map.family.kind == MassKind::Constant) return base;
    const double x = map.inverse(y);
    const double m = mass_at(map.family, x);
    const double mp = mass_derivative(map.family, x);
    const double mpp = mass_second_derivative(map.family, x);
    const double bracket =
        (0.25 + a) * m * mpp - (7.0 / 16.0 + a * (2.0 + a)) * mp * mp;
    return base - bracket / (2.0 * m * m * m);
}

inline double effective_potential(const PotentialSpec& v_y, const MassFamily& family, double a,
                                  double y) {
    return effective_potential(v_y, coordinate_map(family), a, y);
}

namespace detail {

inline bool subset_of(const Interval& inner, const Interval& outer) {
    const bool lo_ok = !outer.bounded_below() || (inner.bounded_below() && inner.lo >= outer.lo);
    const bool hi_ok = !outer.bounded_above() || (inner.bounded_above() && inner.hi <= outer.hi);
    return lo_ok && hi_ok;
}

inline Interval image_interval(const Interval& dom, const CoordinateMap& map) {
    Interval img;
    img.lo = dom.bounded_below() && dom.lo > map.x_domain.lo ? map.forward(dom.lo)
                                                             : map.y_domain.lo;
    img.hi = dom.bounded_above() && dom.hi < map.x_domain.hi ? map.forward(dom.hi)
                                                             : map.y_domain.hi;
    return img;
}

}  // namespace detail

// V o s^{-1} as a potential on y-space.  For the cataloged pairs the
// closed-form tag is attached: (singular_n, harmonic) -> power law,
// (regular, harmonic) -> sinh^2, (singular0, squeezed) -> shifted sinh^2.
inline PotentialSpec pushforward_potential(const PotentialSpec& v, const CoordinateMap& map) {
    const MassFamily& f = map.family;
    if (f.kind == MassKind::Constant) return v;
    if (!detail::subset_of(v.domain, map.x_domain))
        throw DomainError("pushforward_potential: potential domain exceeds the map's x-domain (" +
                          v.display_name() + " with " + to_string(f.kind) + ")");

    const bool unit_scale = f.lambda == 1.0;
    if (unit_scale && v.kind == PotentialKind::Harmonic && f.kind == MassKind::SingularN &&
        f.x0 == 0.0)
        return PotentialSpec::power_law(f.n, v.shift);
    if (unit_scale && v.kind == PotentialKind::Harmonic && f.kind == MassKind::Regular)
        return PotentialSpec::sinh2(v.shift);
    if (unit_scale && v.kind == PotentialKind::Squeezed && f.kind == MassKind::Singular0 &&
        v.x0 == f.x0)
        return PotentialSpec::sinh2(v.shift + 0.25 * (1.0 - M_SQRT2));

    PotentialSpec out = PotentialSpec::custom(
        [v, inv = map.inverse](double y) { return v(inv(y)); },
        detail::image_interval(v.domain, map),
        v.display_name() + " via " + to_string(f.kind) + " map");
    return out;
}

inline PotentialSpec pushforward_potential(const PotentialSpec& v, const MassFamily& family) {
    return pushforward_potential(v, coordinate_map(family));
}

// x-representation of a y-space potential, V o s (the pull-back direction).
inline PotentialSpec pullback_potential(const PotentialSpec& v_y, const CoordinateMap& map) {
    const MassFamily& f = map.family;
    if (f.kind == MassKind::Constant) return v_y;
    Interval dom;
    dom.lo = v_y.domain.bounded_below() && v_y.domain.lo > map.y_domain.lo
                 ? map.inverse(v_y.domain.lo)
                 : map.x_domain.lo;
    dom.hi = v_y.domain.bounded_above() && v_y.domain.hi < map.y_domain.hi
                 ? map.inverse(v_y.domain.hi)
                 : map.x_domain.hi;
    return PotentialSpec::custom([v_y, fwd = map.forward](double x) { return v_y(fwd(x)); }, dom,
                                 v_y.display_name() + " in x-space");
}

// psi(x_i) = J^{1/2}(x_i) phi(y_i) on the image grid x_i = s^{-1}(y_i).
inline WaveSample pullback_wavefunction(const WaveSample& phi, const CoordinateMap& map) {
    phi.validate();
    if (phi.space != Space::Y)
        throw DomainError("pullback_wavefunction: input must be a y-space sample");
    WaveSample psi;
    psi.space = Space::X;
    psi.grid.reserve(phi.grid.size());
    psi.values.reserve(phi.grid.size());
    for (std::size_t i = 0; i < phi.grid.size(); ++i) {
        const double y = phi.grid[i];
        if (!map.y_domain.contains(y))
            throw DomainError("pullback_wavefunction: grid leaves the map's y-domain");
        const double x = map.inverse(y);
        psi.grid.push_back(x);
        psi.values.push_back(std::sqrt(map.jacobian(x)) * phi.values[i]);
    }
    psi.validate();
    return psi;
}

// Forward direction phi(y_i) = J^{-1/2}(x_i) psi(x_i) on the image grid.
inline WaveSample pushforward_wavefunction(const WaveSample& psi, const CoordinateMap& map) {
    psi.validate();
    if (psi.space != Space::X)
        throw DomainError("pushforward_wavefunction: input must be an x-space sample");
    WaveSample phi;
    phi.space = Space::Y;
    phi.grid.reserve(psi.grid.size());
    phi.values.reserve(psi.grid.size());
    for (std::size_t i = 0; i < psi.grid.size(); ++i) {
        const double x = psi.grid[i];
        if (!map.x_domain.contains(x))
            throw DomainError("pushforward_wavefunction: grid leaves the map's x-domain");
        phi.grid.push_back(map.forward(x));
        phi.values.push_back(psi.values[i] / std::sqrt(map.jacobian(x)));
    }
    phi.validate();
    return phi;
}

}  // namespace pdm
