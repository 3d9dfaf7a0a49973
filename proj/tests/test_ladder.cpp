#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pdm/ladder.hpp"
#include "pdm/special_functions.hpp"

using namespace pdm;

namespace {

WaveSample hermite_sample(int k, double half_width = 9.0, int n = 4001) {
    WaveSample w;
    w.space = Space::Y;
    w.grid = linspace(-half_width, half_width, n);
    w.values.resize(w.grid.size());
    for (std::size_t i = 0; i < w.grid.size(); ++i)
        w.values[i] = hermite_function(k, w.grid[i]);
    return w;
}

std::vector<double> interior_grid(const MassFamily& f) {
    std::vector<double> xs;
    const CoordinateMap map = coordinate_map(f);
    for (int i = 0; i < 200; ++i) {
        const double y = -4.0 + 8.0 * i / 199.0;
        xs.push_back(map.inverse(y));
    }
    return xs;
}

}  // namespace

TEST_CASE("beta_oscillator: reference forms") {
    // constant mass: beta = x / sqrt 2
    CHECK(beta_oscillator(MassFamily::constant(), 0.3, 1.0) ==
          Catch::Approx(1.0 / M_SQRT2).epsilon(1e-14));
    // MINT ordering kills the derivative term: beta = s(x)/sqrt 2
    const MassFamily reg = MassFamily::regular();
    for (double x : {-1.2, 0.4, 2.5})
        CHECK(beta_oscillator(reg, -0.25, x) ==
              Catch::Approx(std::asinh(x) / M_SQRT2).epsilon(1e-13));
    // singular_n(1) at a = 0: both terms in closed form
    const MassFamily sing = MassFamily::singular_n(1);
    const double x = 1.0;
    // s = 3 x^{1/3}, m'/m^{3/2} = -(4/3) x^{-1/3}
    const double expected = 3.0 / M_SQRT2 - 0.25 * (-4.0 / 3.0) / M_SQRT2;
    CHECK(beta_oscillator(sing, 0.0, x) == Catch::Approx(expected).epsilon(1e-12));
}

TEST_CASE("riccati_residual: oscillator pairs factorize their wells") {
    // textbook constant-mass oscillator
    const FactorizationPair textbook = oscillator_pair(MassFamily::constant());
    CHECK(std::abs(riccati_residual(textbook, PotentialSpec::harmonic(), 0.7)) < 1e-12);

    // regular family at the MINT ordering factorizes the arcsinh^2 well
    const FactorizationPair reg = oscillator_pair(MassFamily::regular());
    for (double x : interior_grid(MassFamily::regular()))
        CHECK(std::abs(riccati_residual(reg, PotentialSpec::arcsinh_sq(), x)) < 1e-9);

    // a perturbed beta is detected
    const FactorizationPair wrong = custom_pair(
        MassFamily::constant(), -0.25,
        [](double t) { return t / M_SQRT2 + 0.1; }, 0.5);
    CHECK(std::abs(riccati_residual(wrong, PotentialSpec::harmonic(), 0.7)) > 0.05);
}

TEST_CASE("commutator_value: ladder pairs close on -1") {
    CHECK(commutator_value(oscillator_pair(MassFamily::constant()), 1.3) ==
          Catch::Approx(-1.0).epsilon(1e-12));
    for (const MassFamily& f : {MassFamily::regular(), MassFamily::singular_n(1),
                                MassFamily::singular_n(2), MassFamily::singular0(1.0)}) {
        const FactorizationPair pair = oscillator_pair(f);
        for (double x : interior_grid(f))
            CHECK(std::abs(commutator_value(pair, x) + 1.0) < 1e-9);
    }
    // finite-difference beta' fallback stays within the coarse tolerance
    const FactorizationPair fd = custom_pair(
        MassFamily::regular(), -0.25,
        [](double t) { return std::asinh(t) / M_SQRT2; }, 0.5);
    CHECK(commutator_value(fd, 0.8) == Catch::Approx(-1.0).margin(1e-10));
}

TEST_CASE("potential_from_beta: collapses to half the squared antiderivative") {
    const FactorizationPair constant = oscillator_pair(MassFamily::constant());
    CHECK(potential_from_beta(constant, 1.2) == Catch::Approx(0.72).epsilon(1e-13));

    const FactorizationPair reg = oscillator_pair(MassFamily::regular());
    for (double x : {-2.0, 0.5, 1.7}) {
        const double s = std::asinh(x);
        CHECK(potential_from_beta(reg, x) == Catch::Approx(0.5 * s * s).epsilon(1e-11).margin(1e-13));
    }
    // singular_n(1): (9/2) x^{2/3}, the odd-root well
    const FactorizationPair sing = oscillator_pair(MassFamily::singular_n(1));
    for (double x : {0.4, 1.0, 3.1}) {
        CHECK(potential_from_beta(sing, x) ==
              Catch::Approx(4.5 * std::pow(x, 2.0 / 3.0)).epsilon(1e-11));
        const double s = coordinate_map(MassFamily::singular_n(1)).forward(x);
        CHECK(potential_from_beta(sing, x) == Catch::Approx(0.5 * s * s).epsilon(1e-11));
    }
}

TEST_CASE("partner_potential: ladder shift, SUSY pair, zero commutator") {
    // ladder pairs shift the well by one quantum
    const FactorizationPair reg = oscillator_pair(MassFamily::regular());
    for (double x : {-1.0, 0.3, 2.0})
        CHECK(partner_potential(reg, PotentialSpec::arcsinh_sq(), x) ==
              Catch::Approx(0.5 * std::asinh(x) * std::asinh(x) + 1.0).epsilon(1e-10).margin(1e-12));

    // constant mass, beta = tanh(x)/sqrt2, eps = -1/2 factorizes -sech^2 and
    // its intertwined partner is the free particle
    const PotentialSpec sech_well = PotentialSpec::custom(
        [](double t) {
            const double c = std::cosh(t);
            return -1.0 / (c * c);
        },
        Interval::full_line(), "sech2 well");
    const FactorizationPair susy = custom_pair(
        MassFamily::constant(), -0.25,
        [](double t) { return std::tanh(t) / M_SQRT2; }, -0.5,
        [](double t) {
            const double c = std::cosh(t);
            return 1.0 / (M_SQRT2 * c * c);
        });
    for (double x : {-1.5, 0.0, 0.9}) {
        CHECK(std::abs(riccati_residual(susy, sech_well, x)) < 1e-12);
        CHECK(partner_potential(susy, sech_well, x) == Catch::Approx(0.0).margin(1e-12));
    }

    // a constant beta commutes: the partner equals the original well
    const FactorizationPair inert = custom_pair(
        MassFamily::constant(), -0.25, [](double) { return 0.7; }, 0.0,
        [](double) { return 0.0; });
    CHECK(partner_potential(inert, PotentialSpec::harmonic(), 1.1) ==
          Catch::Approx(0.5 * 1.1 * 1.1).epsilon(1e-13));
}

TEST_CASE("missing_state: oscillator pair recovers the ground state") {
    const FactorizationPair constant = oscillator_pair(MassFamily::constant());
    const MissingState at0 = missing_state(constant, 0.0);
    CHECK_FALSE(at0.tilde_normalizable);
    CHECK(at0.m_normalizable);
    // psi_M is the normalized gaussian ground state
    CHECK(at0.psi_m == Catch::Approx(std::pow(M_PI, -0.25)).epsilon(1e-8));
    const MissingState at1 = missing_state(constant, 1.3);
    CHECK(at1.psi_m ==
          Catch::Approx(std::pow(M_PI, -0.25) * std::exp(-0.5 * 1.3 * 1.3)).epsilon(1e-8));
    // psi~ grows like e^{+x^2/2}
    CHECK(at1.psi_tilde_eps > at0.psi_tilde_eps);

    // regular-family ladder pair: psi_M matches the first-kind ground state
    const FactorizationPair reg = oscillator_pair(MassFamily::regular());
    const FirstKindOscillator osc = make_first_kind(MassFamily::regular());
    for (double x : {-0.8, 0.0, 1.6}) {
        const MissingState ms = missing_state(reg, x);
        CHECK(ms.m_normalizable);
        CHECK(ms.psi_m ==
              Catch::Approx(first_kind_eigenfunction(osc, 0, x)).epsilon(1e-8).margin(1e-9));
    }
}

TEST_CASE("apply_ladder: annihilation, coefficients, commutation") {
    const FirstKindOscillator osc = make_first_kind(MassFamily::constant());

    // lowering the ground state annihilates it
    const WaveSample zero = apply_ladder(LadderDirection::Lower, osc, hermite_sample(0));
    CHECK(std::sqrt(simpson_norm_squared(zero)) < 1e-6);

    // lowering phi_3 yields sqrt(6) phi_2
    const WaveSample lowered = apply_ladder(LadderDirection::Lower, osc, hermite_sample(3));
    WaveSample expected = hermite_sample(2);
    for (auto& v : expected.values) v *= std::sqrt(6.0);
    CHECK(l2_distance(lowered, expected) < 1e-6);

    // raise then lower phi_2: a- a+ phi_2 = 2(k+1) phi_2 = 6 phi_2
    const WaveSample raised = apply_ladder(LadderDirection::Raise, osc, hermite_sample(2));
    const WaveSample cycled = apply_ladder(LadderDirection::Lower, osc, raised);
    WaveSample six = hermite_sample(2);
    for (auto& v : six.values) v *= 6.0;
    CHECK(l2_distance(cycled, six) < 1e-5);

    // raising coefficient sqrt(2(k+1))
    CHECK(std::sqrt(simpson_norm_squared(raised)) == Catch::Approx(std::sqrt(6.0)).margin(1e-6));

    // too-coarse grids are rejected
    CHECK_THROWS_AS(apply_ladder(LadderDirection::Lower, osc, hermite_sample(0, 9.0, 501)),
                    DomainError);
}

TEST_CASE("intertwining through the map: lower in y-space, compare pulled back") {
    const MassFamily f = MassFamily::regular();
    const CoordinateMap map = coordinate_map(f);
    const FirstKindOscillator osc = make_first_kind(f);
    const int k = 3;

    // pull back phi_k, push it forward again, lower, and compare with phi_{k-1}
    const WaveSample psi_x = pullback_wavefunction(hermite_sample(k), map);
    const WaveSample phi_back = pushforward_wavefunction(psi_x, map);
    const WaveSample lowered = apply_ladder(LadderDirection::Lower, osc, phi_back);
    WaveSample expected = hermite_sample(k - 1);
    for (auto& v : expected.values) v *= std::sqrt(2.0 * k);
    CHECK(l2_distance(lowered, expected) < 1e-5);
}

TEST_CASE("factorization energy: <phi_k| AB + 1/2 |phi_k> = k + 1/2") {
    const FirstKindOscillator osc = make_first_kind(MassFamily::constant());
    for (int k = 0; k <= 4; ++k) {
        const WaveSample phi = hermite_sample(k);
        // AB = (1/2) a+ a-, so act with a- then a+ and halve
        const WaveSample ab = apply_ladder(LadderDirection::Raise, osc,
                                           apply_ladder(LadderDirection::Lower, osc, phi));
        double acc = 0.0;
        const double h = phi.grid[1] - phi.grid[0];
        std::vector<double> integrand(phi.grid.size());
        for (std::size_t i = 0; i < phi.grid.size(); ++i)
            integrand[i] = (0.5 * ab.values[i] + 0.5 * phi.values[i]).real() *
                           phi.values[i].real();
        acc = simpson_uniform(integrand, h);
        CHECK(acc == Catch::Approx(k + 0.5).margin(1e-6));
    }
}
