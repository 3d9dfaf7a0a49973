#pragma once

// Catalog of position-dependent mass families with their coordinate maps,
// Jacobians, domains and admissible kinetic-ordering parameters.
//
// Units: hbar = omega_0 = m_0 = 1 unless a family overrides m0; lambda
// defaults to the oscillator inverse length (= 1 in these units) and the
// integration constant of the forward map is fixed to zero.

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdm/errors.hpp"
#include "pdm/numerics.hpp"

namespace pdm {

enum class MassKind { Constant, Singular0, SingularN, Regular, RationalW, QuadraticC };

inline std::string to_string(MassKind k) {
    switch (k) {
        case MassKind::Constant: return "constant";
        case MassKind::Singular0: return "singular0";
        case MassKind::SingularN: return "singular_n";
        case MassKind::Regular: return "regular";
        case MassKind::RationalW: return "rational_w";
        case MassKind::QuadraticC: return "quadratic_c";
    }
    return "unknown";
}

inline MassKind mass_kind_from_string(const std::string& s) {
    if (s == "constant") return MassKind::Constant;
    if (s == "singular0") return MassKind::Singular0;
    if (s == "singular_n") return MassKind::SingularN;
    if (s == "regular") return MassKind::Regular;
    if (s == "rational_w") return MassKind::RationalW;
    if (s == "quadratic_c") return MassKind::QuadraticC;
    throw DomainError("unknown mass family kind: " + s);
}

// A named mass function m(x).  x0 and lambda enter only the families that
// use them (the singular power-law masses and the regular family's scale).
struct MassFamily {
    MassKind kind = MassKind::Constant;
    double m0 = 1.0;
    double x0 = 0.0;
    double lambda = 1.0;
    int n = 1;       // SingularN: exponent 4n/(2n+1), held as the integer pair
    double w = 1.0;  // RationalW
    double c = 1.0;  // QuadraticC

    static MassFamily constant(double m0 = 1.0) { return validated({MassKind::Constant, m0}); }
    static MassFamily singular0(double x0 = 0.0, double lambda = 1.0, double m0 = 1.0) {
        return validated({MassKind::Singular0, m0, x0, lambda});
    }
    static MassFamily singular_n(int n, double x0 = 0.0, double lambda = 1.0, double m0 = 1.0) {
        MassFamily f{MassKind::SingularN, m0, x0, lambda};
        f.n = n;
        return validated(f);
    }
    static MassFamily regular(double lambda = 1.0, double m0 = 1.0) {
        return validated({MassKind::Regular, m0, 0.0, lambda});
    }
    static MassFamily rational_w(double w, double m0 = 1.0) {
        MassFamily f{MassKind::RationalW, m0};
        f.w = w;
        return validated(f);
    }
    static MassFamily quadratic_c(double c, double m0 = 1.0) {
        MassFamily f{MassKind::QuadraticC, m0};
        f.c = c;
        return validated(f);
    }

    // 4n/(2n+1) as exact integers (SingularN only).
    int exponent_num() const { return 4 * n; }
    int exponent_den() const { return 2 * n + 1; }

    // Location of the mass pole / zero, where defined.
    double pole() const { return -x0 / lambda; }

    Interval domain() const {
        switch (kind) {
            case MassKind::Singular0: return Interval::above(pole());
            case MassKind::QuadraticC: return Interval::above(0.0);
            default: return Interval::full_line();
        }
    }

private:
    static MassFamily validated(MassFamily f) {
        if (f.m0 <= 0.0) throw DomainError("mass family: m0 must be positive");
        if (f.lambda <= 0.0) throw DomainError("mass family: lambda must be positive");
        if (f.kind == MassKind::SingularN && f.n < 1)
            throw DomainError("mass family: singular_n needs n >= 1");
        if (f.kind == MassKind::RationalW && f.w <= 0.0)
            throw DomainError("mass family: rational_w needs w > 0");
        if (f.kind == MassKind::QuadraticC && f.c <= 0.0)
            throw DomainError("mass family: quadratic_c needs c > 0");
        return f;
    }
};

namespace detail {

// Sign-preserving odd root u^{1/(2n+1)}.
inline double odd_root(double u, int den) {
    return std::copysign(std::pow(std::abs(u), 1.0 / den), u);
}

inline void require_in_domain(const MassFamily& f, double x, const char* op) {
    if (!f.domain().contains(x))
        throw DomainError(std::string(op) + ": x outside the " + to_string(f.kind) +
                          " family domain");
    if ((f.kind == MassKind::SingularN || f.kind == MassKind::Singular0) &&
        f.x0 + f.lambda * x == 0.0)
        throw DomainError(std::string(op) + ": x at the mass pole");
}

}  // namespace detail

inline double mass_at(const MassFamily& f, double x) {
    detail::require_in_domain(f, x, "mass_at");
    const double u = f.x0 + f.lambda * x;
    switch (f.kind) {
        case MassKind::Constant: return f.m0;
        case MassKind::Singular0: return f.m0 / (u * u);
        case MassKind::SingularN: {
            const double r = detail::odd_root(u, f.exponent_den());
            return f.m0 / std::pow(r, static_cast<double>(f.exponent_num()));
        }
        case MassKind::Regular: return f.m0 / (1.0 + u * u);
        case MassKind::RationalW: {
            const double q = (f.w + x * x) / (1.0 + x * x);
            return f.m0 * q * q;
        }
        case MassKind::QuadraticC: return f.c * x * x;
    }
    throw DomainError("mass_at: unhandled family kind");
}

// Closed-form m'(x).
inline double mass_derivative(const MassFamily& f, double x) {
    detail::require_in_domain(f, x, "mass_derivative");
    const double u = f.x0 + f.lambda * x;
    switch (f.kind) {
        case MassKind::Constant: return 0.0;
        case MassKind::Singular0: return -2.0 * f.lambda * f.m0 / (u * u * u);
        case MassKind::SingularN: {
            const double p = static_cast<double>(f.exponent_num()) / f.exponent_den();
            const double r = detail::odd_root(u, f.exponent_den());
            // d/du u^{-p} = -p u^{-p-1}; -p-1 = -(6n+1)/(2n+1), an odd power of r
            return -p * f.lambda * f.m0 * std::copysign(1.0, u) /
                   std::pow(std::abs(r), 6.0 * f.n + 1.0);
        }
        case MassKind::Regular: {
            const double d = 1.0 + u * u;
            return -2.0 * f.m0 * f.lambda * u / (d * d);
        }
        case MassKind::RationalW: {
            const double d = 1.0 + x * x;
            const double q = (f.w + x * x) / d;
            const double qp = 2.0 * x * (1.0 - f.w) / (d * d);
            return 2.0 * f.m0 * q * qp;
        }
        case MassKind::QuadraticC: return 2.0 * f.c * x;
    }
    throw DomainError("mass_derivative: unhandled family kind");
}

// Closed-form m''(x).
inline double mass_second_derivative(const MassFamily& f, double x) {
    detail::require_in_domain(f, x, "mass_second_derivative");
    const double u = f.x0 + f.lambda * x;
    const double l2 = f.lambda * f.lambda;
    switch (f.kind) {
        case MassKind::Constant: return 0.0;
        case MassKind::Singular0: return 6.0 * l2 * f.m0 / (u * u * u * u);
        case MassKind::SingularN: {
            const double p = static_cast<double>(f.exponent_num()) / f.exponent_den();
            const double r = detail::odd_root(u, f.exponent_den());
            // p(p+1) u^{-p-2}; -p-2 = -(8n+2)/(2n+1), an even power of r
            return p * (p + 1.0) * l2 * f.m0 / std::pow(std::abs(r), 8.0 * f.n + 2.0);
        }
        case MassKind::Regular: {
            const double d = 1.0 + u * u;
            return f.m0 * l2 * (6.0 * u * u - 2.0) / (d * d * d);
        }
        case MassKind::RationalW: {
            const double d = 1.0 + x * x;
            const double q = (f.w + x * x) / d;
            const double qp = 2.0 * x * (1.0 - f.w) / (d * d);
            const double qpp = 2.0 * (1.0 - f.w) * (1.0 - 3.0 * x * x) / (d * d * d);
            return 2.0 * f.m0 * (qp * qp + q * qpp);
        }
        case MassKind::QuadraticC: return 2.0 * f.c;
    }
    throw DomainError("mass_second_derivative: unhandled family kind");
}

// Kinetic ordering exponent pair; 2a + 2b = -1 exactly.
struct OrderingParameter {
    double a = -0.25;
    double b() const { return (-1.0 - 2.0 * a) / 2.0; }
};

// n = 0 selects a_0 = -1/4 (the mass-independent ordering); n >= 1 selects
// a_n = (1-n)/(4n), the orderings that close the power-law mass equation.
inline OrderingParameter allowed_ordering(int n) {
    if (n < 0) throw DomainError("allowed_ordering: n must be nonnegative");
    if (n == 0) return {-0.25};
    return {(1.0 - static_cast<double>(n)) / (4.0 * n)};
}

inline OrderingParameter allowed_ordering_for(const MassFamily& f) {
    return f.kind == MassKind::SingularN ? allowed_ordering(f.n) : allowed_ordering(0);
}

// Bijection between x-space and y-space with Jacobian sqrt(m/m0).
struct CoordinateMap {
    std::function<double(double)> forward;   // s
    std::function<double(double)> inverse;   // s^{-1}
    std::function<double(double)> jacobian;  // J = sqrt(m/m0)
    Interval x_domain;
    Interval y_domain;
    MassFamily family;
    bool closed_form = true;
};

namespace detail {

inline CoordinateMap numeric_map(const MassFamily& f, Interval working) {
    if (!(working.bounded_below() && working.bounded_above()) || working.lo >= working.hi)
        throw DomainError("coordinate_map: numeric map needs a bounded working interval");
    const Interval dom = f.domain();
    if (working.lo < dom.lo || working.hi > dom.hi)
        throw DomainError("coordinate_map: working interval leaves the family domain");
    if (f.kind == MassKind::QuadraticC && working.lo <= 0.0 && working.hi >= 0.0)
        throw DomainError("coordinate_map: quadratic_c is non-bijective across x = 0");

    auto jac = [f](double x) { return std::sqrt(mass_at(f, x) / f.m0); };
    const double anchor = working.contains(0.0) ? 0.0 : 0.5 * (working.lo + working.hi);

    const int table_n = 2049;
    auto xs = std::make_shared<std::vector<double>>(linspace(working.lo, working.hi, table_n));
    auto ys = std::make_shared<std::vector<double>>(table_n, 0.0);
    // cumulative integral of J, then shift so the anchor maps to 0
    for (int i = 1; i < table_n; ++i)
        (*ys)[i] = (*ys)[i - 1] + adaptive_simpson(jac, (*xs)[i - 1], (*xs)[i], 1e-14);
    double y_anchor = 0.0;
    {
        auto it = std::lower_bound(xs->begin(), xs->end(), anchor);
        const std::size_t i = static_cast<std::size_t>(it - xs->begin());
        const std::size_t j = (i == 0) ? 0 : i - 1;
        y_anchor = (*ys)[j] + adaptive_simpson(jac, (*xs)[j], anchor, 1e-14);
    }
    for (auto& y : *ys) y -= y_anchor;

    auto fwd = [xs, ys, jac](double x) {
        if (x < xs->front() || x > xs->back())
            throw DomainError("coordinate_map: x outside the tabulated working interval");
        auto it = std::upper_bound(xs->begin(), xs->end(), x);
        const std::size_t i = (it == xs->begin()) ? 0 : static_cast<std::size_t>(it - xs->begin()) - 1;
        return (*ys)[i] + adaptive_simpson(jac, (*xs)[i], x, 1e-14);
    };

    auto inv_spline = std::make_shared<MonotoneCubic>(*ys, *xs);
    auto inv = [inv_spline, fwd, jac, xs](double y) {
        double lo = inv_spline->front_x(), hi = inv_spline->back_x();
        if (y < lo || y > hi)
            throw DomainError("coordinate_map: y outside the tabulated working interval");
        double x = (*inv_spline)(y);
        x = std::clamp(x, xs->front(), xs->back());
        // one Newton polish step on forward(x) = y
        const double j = jac(x);
        if (j > 0.0) x = std::clamp(x - (fwd(x) - y) / j, xs->front(), xs->back());
        return x;
    };

    CoordinateMap map;
    map.forward = fwd;
    map.inverse = inv;
    map.jacobian = jac;
    map.x_domain = working;
    map.y_domain = Interval::between((*ys).front(), (*ys).back());
    map.family = f;
    map.closed_form = false;
    return map;
}

}  // namespace detail

inline Interval default_numeric_working(const MassFamily& f) {
    if (f.kind == MassKind::QuadraticC) return Interval::between(1e-3, 25.0);
    return Interval::between(-25.0, 25.0);
}

inline CoordinateMap coordinate_map(const MassFamily& f, Interval working) {
    const double l = f.lambda;
    CoordinateMap map;
    map.family = f;
    switch (f.kind) {
        case MassKind::Constant:
            map.forward = [](double x) { return x; };
            map.inverse = [](double y) { return y; };
            map.jacobian = [](double) { return 1.0; };
            map.x_domain = Interval::full_line();
            map.y_domain = Interval::full_line();
            return map;
        case MassKind::Singular0: {
            const double x0 = f.x0;
            map.forward = [x0, l](double x) {
                const double u = x0 + l * x;
                if (u <= 0.0) throw DomainError("coordinate_map: x outside half-line domain");
                return std::log(u) / l;
            };
            map.inverse = [x0, l](double y) { return (std::exp(l * y) - x0) / l; };
            map.jacobian = [x0, l](double x) {
                const double u = x0 + l * x;
                if (u <= 0.0) throw DomainError("coordinate_map: x outside half-line domain");
                return 1.0 / u;
            };
            map.x_domain = Interval::above(f.pole());
            map.y_domain = Interval::full_line();
            return map;
        }
        case MassKind::SingularN: {
            const double x0 = f.x0;
            const int den = f.exponent_den();  // 2n+1
            const int nn = f.n;
            map.forward = [x0, l, den](double x) {
                return (static_cast<double>(den) / l) * detail::odd_root(x0 + l * x, den);
            };
            map.inverse = [x0, l, den](double y) {
                return (std::pow(l * y / den, static_cast<double>(den)) - x0) / l;
            };
            map.jacobian = [x0, l, den, nn](double x) {
                const double u = x0 + l * x;
                if (u == 0.0) return kInf;
                const double r = detail::odd_root(u, den);
                return 1.0 / std::pow(std::abs(r), 2.0 * nn);
            };
            map.x_domain = Interval::full_line();
            map.y_domain = Interval::full_line();
            return map;
        }
        case MassKind::Regular:
            map.forward = [l](double x) { return std::asinh(l * x) / l; };
            map.inverse = [l](double y) { return std::sinh(l * y) / l; };
            map.jacobian = [l](double x) { return 1.0 / std::sqrt(1.0 + l * x * l * x); };
            map.x_domain = Interval::full_line();
            map.y_domain = Interval::full_line();
            return map;
        default:
            return detail::numeric_map(f, working);
    }
}

inline CoordinateMap coordinate_map(const MassFamily& f) {
    return coordinate_map(f, default_numeric_working(f));
}

// Residual of the null-term condition c1 m m'' + c2 (m')^2 with the
// coefficients read off the effective-potential bracket:
// c1 = 1/4 + a, c2 = -(7/16 + a(2 + a)).
inline double mdnt_residual(const MassFamily& f, double a, double x) {
    const double c1 = 0.25 + a;
    const double c2 = -(7.0 / 16.0 + a * (2.0 + a));
    const double m = mass_at(f, x);
    const double mp = mass_derivative(f, x);
    const double mpp = mass_second_derivative(f, x);
    return c1 * m * mpp + c2 * mp * mp;
}

// JSON descriptor {kind, m0, x0, lambda, n|w|c}.
inline nlohmann::json family_to_json(const MassFamily& f) {
    nlohmann::json j;
    j["kind"] = to_string(f.kind);
    j["m0"] = f.m0;
    switch (f.kind) {
        case MassKind::Singular0:
            j["x0"] = f.x0;
            j["lambda"] = f.lambda;
            break;
        case MassKind::SingularN:
            j["x0"] = f.x0;
            j["lambda"] = f.lambda;
            j["n"] = f.n;
            break;
        case MassKind::Regular:
            j["lambda"] = f.lambda;
            break;
        case MassKind::RationalW:
            j["w"] = f.w;
            break;
        case MassKind::QuadraticC:
            j["c"] = f.c;
            break;
        case MassKind::Constant:
            break;
    }
    return j;
}

inline MassFamily family_from_json(const nlohmann::json& j) {
    const MassKind kind = mass_kind_from_string(j.at("kind").get<std::string>());
    const double m0 = j.value("m0", 1.0);
    const double x0 = j.value("x0", 0.0);
    const double lambda = j.value("lambda", 1.0);
    switch (kind) {
        case MassKind::Constant: return MassFamily::constant(m0);
        case MassKind::Singular0: return MassFamily::singular0(x0, lambda, m0);
        case MassKind::SingularN: return MassFamily::singular_n(j.at("n").get<int>(), x0, lambda, m0);
        case MassKind::Regular: return MassFamily::regular(lambda, m0);
        case MassKind::RationalW: return MassFamily::rational_w(j.at("w").get<double>(), m0);
        case MassKind::QuadraticC: return MassFamily::quadratic_c(j.at("c").get<double>(), m0);
    }
    throw DomainError("family_from_json: unhandled kind");
}

}  // namespace pdm
