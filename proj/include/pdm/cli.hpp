#pragma once

// Command-line front end: run configurations (flag-mirroring JSON included),
// family/potential selection, and the command dispatcher.  All numeric
// output goes through the fixed 9-significant-digit formatter so identical
// configurations produce byte-identical artifacts.

#include <complex>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdm/coherent.hpp"
#include "pdm/format.hpp"
#include "pdm/ladder.hpp"
#include "pdm/mass.hpp"
#include "pdm/oscillators.hpp"
#include "pdm/schrodinger.hpp"
#include "pdm/spectra.hpp"
#include "pdm/transform.hpp"

namespace pdm {

struct RunConfig {
    std::string command = "spectrum";
    std::string family = "constant";
    int n = 1;            // singular_n index; doubles as the power-law index
    double x0 = 0.0;
    double lambda = 1.0;
    double w = 1.0;
    double c = 1.0;
    std::string potential = "harmonic";
    int levels = 10;
    int level = 0;        // ladder target level
    int grid_points = 4001;
    double ymax_margin = 25.0;
    std::string method = "auto";  // auto | numerov | wkb
    std::string direction = "lower";
    int times = 1;
    double z_re = 0.0;
    double z_im = 0.0;
    std::string format = "csv";  // csv | json
    std::string out;             // empty writes to stdout

    bool operator==(const RunConfig&) const = default;
};

inline nlohmann::json config_to_json(const RunConfig& c) {
    return nlohmann::json{{"command", c.command},
                          {"family", c.family},
                          {"n", c.n},
                          {"x0", c.x0},
                          {"lambda", c.lambda},
                          {"w", c.w},
                          {"c", c.c},
                          {"potential", c.potential},
                          {"levels", c.levels},
                          {"level", c.level},
                          {"grid_points", c.grid_points},
                          {"ymax_margin", c.ymax_margin},
                          {"method", c.method},
                          {"direction", c.direction},
                          {"times", c.times},
                          {"z", {c.z_re, c.z_im}},
                          {"format", c.format},
                          {"out", c.out}};
}

inline RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig c;
    c.command = j.value("command", c.command);
    c.family = j.value("family", c.family);
    c.n = j.value("n", c.n);
    c.x0 = j.value("x0", c.x0);
    c.lambda = j.value("lambda", c.lambda);
    c.w = j.value("w", c.w);
    c.c = j.value("c", c.c);
    c.potential = j.value("potential", c.potential);
    c.levels = j.value("levels", c.levels);
    c.level = j.value("level", c.level);
    c.grid_points = j.value("grid_points", c.grid_points);
    c.ymax_margin = j.value("ymax_margin", c.ymax_margin);
    c.method = j.value("method", c.method);
    c.direction = j.value("direction", c.direction);
    c.times = j.value("times", c.times);
    if (j.contains("z")) {
        c.z_re = j["z"].at(0).get<double>();
        c.z_im = j["z"].at(1).get<double>();
    }
    c.format = j.value("format", c.format);
    c.out = j.value("out", c.out);
    return c;
}

namespace cli {

inline MassFamily make_family(const RunConfig& c) {
    switch (mass_kind_from_string(c.family)) {
        case MassKind::Constant: return MassFamily::constant();
        case MassKind::Singular0: return MassFamily::singular0(c.x0, c.lambda);
        case MassKind::SingularN: return MassFamily::singular_n(c.n, c.x0, c.lambda);
        case MassKind::Regular: return MassFamily::regular(c.lambda);
        case MassKind::RationalW: return MassFamily::rational_w(c.w);
        case MassKind::QuadraticC: return MassFamily::quadratic_c(c.c);
    }
    throw DomainError("unknown family: " + c.family);
}

inline PotentialSpec make_y_potential(const RunConfig& c) {
    if (c.potential == "harmonic") return PotentialSpec::harmonic();
    if (c.potential == "sinh2") return PotentialSpec::sinh2();
    if (c.potential == "powerlaw") return PotentialSpec::power_law(c.n);
    if (c.potential == "squeezed") return PotentialSpec::squeezed(c.x0);
    if (c.potential == "log2") return PotentialSpec::log2(c.x0);
    if (c.potential == "arcsinhsq") return PotentialSpec::arcsinh_sq();
    throw DomainError("unknown potential: " + c.potential);
}

inline SolverConfig make_solver_config(const RunConfig& c) {
    SolverConfig s;
    s.grid_points = c.grid_points;
    s.ymax_margin = c.ymax_margin;
    s.max_levels = std::max(128, c.levels + 2);
    return s;
}

inline std::vector<EigenSolution> numeric_levels(const PotentialSpec& v, int k_max,
                                                 const SolverConfig& s) {
    const bool halfline = v.domain.bounded_below();
    return halfline ? solve_halfline(v, k_max, s) : solve_levels(v, k_max, s);
}

inline void cmd_spectrum(const RunConfig& c, std::ostream& os) {
    const PotentialSpec v = make_y_potential(c);
    if (c.method == "wkb") {
        os << "k,E_wkb,y_turn\n";
        if (c.potential == "sinh2") {
            for (const WkbLevel& lv : sinh2_wkb_spectrum(c.levels - 1))
                os << lv.k << "," << format_g9(lv.energy) << ","
                   << format_g9(lv.turning_points.second) << "\n";
        } else {
            for (int k = 0; k < c.levels; ++k) {
                const WkbLevel lv = wkb_quantize(v, k);
                os << k << "," << format_g9(lv.energy) << ","
                   << format_g9(lv.turning_points.second) << "\n";
            }
        }
        return;
    }
    os << "k,E\n";
    if (c.potential == "harmonic" && c.method == "auto") {
        // first-kind pairing: exact equidistant spectrum
        for (int k = 0; k < c.levels; ++k) os << k << "," << format_g9(k + 0.5) << "\n";
        return;
    }
    const std::vector<EigenSolution> sols = numeric_levels(v, c.levels - 1, make_solver_config(c));
    for (const EigenSolution& s : sols) os << s.k << "," << format_g9(s.energy) << "\n";
}

inline void cmd_wkb_compare(const RunConfig& c, std::ostream& os) {
    os << "k,E_wkb,E_schrodinger\n";
    if (c.potential == "powerlaw") {
        const std::vector<EigenSolution> sols =
            solve_levels(PotentialSpec::power_law(c.n), c.levels - 1, make_solver_config(c));
        for (int k = 0; k < c.levels; ++k)
            os << k << "," << format_g9(powerlaw_energy(c.n, k)) << ","
               << format_g9(sols[static_cast<std::size_t>(k)].energy) << "\n";
        return;
    }
    if (c.potential != "sinh2")
        throw DomainError("wkb-compare supports the sinh2 and powerlaw potentials");
    const std::vector<WkbLevel> wkb = sinh2_wkb_spectrum(c.levels - 1);
    const std::vector<EigenSolution> sols =
        solve_levels(PotentialSpec::sinh2(), c.levels - 1, make_solver_config(c));
    for (int k = 0; k < c.levels; ++k)
        os << k << "," << format_g9(wkb[static_cast<std::size_t>(k)].energy) << ","
           << format_g9(sols[static_cast<std::size_t>(k)].energy) << "\n";
}

inline void emit_wave_table(std::ostream& os, const std::vector<double>& grid,
                            const std::vector<std::vector<double>>& columns,
                            const std::string& axis) {
    os << axis;
    for (std::size_t j = 0; j < columns.size(); ++j) os << ",psi_" << j;
    os << "\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        os << format_g9(grid[i]);
        for (const auto& col : columns) os << "," << format_g9(col[i]);
        os << "\n";
    }
}

inline void cmd_first_kind(const RunConfig& c, std::ostream& os, std::ostream* waves_os) {
    const MassFamily family = make_family(c);
    const FirstKindOscillator osc = make_first_kind(family);
    os << "k,E\n";
    for (int k = 0; k < c.levels; ++k) os << k << "," << format_g9(k + 0.5) << "\n";
    if (waves_os) {
        const int npts = std::max(c.grid_points, 201);
        const std::vector<double> ygrid = linspace(-6.0, 6.0, npts);
        std::vector<double> xgrid(ygrid.size());
        for (std::size_t i = 0; i < ygrid.size(); ++i) xgrid[i] = osc.map.inverse(ygrid[i]);
        std::vector<std::vector<double>> cols;
        for (int k = 0; k < c.levels; ++k) {
            std::vector<double> col(xgrid.size());
            for (std::size_t i = 0; i < xgrid.size(); ++i)
                col[i] = first_kind_eigenfunction(osc, k, xgrid[i]);
            cols.push_back(std::move(col));
        }
        emit_wave_table(*waves_os, xgrid, cols, "x");
    }
}

inline void cmd_second_kind(const RunConfig& c, std::ostream& os, std::ostream* waves_os) {
    const MassFamily family = make_family(c);
    PotentialSpec x_pot;
    if (c.potential == "harmonic")
        x_pot = PotentialSpec::harmonic();
    else if (c.potential == "squeezed")
        x_pot = PotentialSpec::squeezed(c.x0);
    else
        throw DomainError("second-kind: x-potential must be harmonic or squeezed");
    const SecondKindOscillator osc = build_second_kind(family, x_pot);
    os << "# y_potential=" << osc.y_potential.display_name()
       << " shift=" << format_g9(osc.y_potential.shift) << "\n";
    const std::vector<EigenSolution> sols =
        numeric_levels(osc.y_potential, c.levels - 1, make_solver_config(c));
    os << "k,E\n";
    for (const EigenSolution& s : sols) os << s.k << "," << format_g9(s.energy) << "\n";
    if (waves_os) {
        std::vector<std::vector<double>> cols;
        std::vector<double> xgrid;
        for (const EigenSolution& s : sols) {
            const WaveSample psi = pullback_wavefunction(s.wave, osc.map);
            if (xgrid.empty()) xgrid = psi.grid;
            std::vector<double> col(psi.values.size());
            for (std::size_t i = 0; i < col.size(); ++i) col[i] = psi.values[i].real();
            cols.push_back(std::move(col));
        }
        emit_wave_table(*waves_os, xgrid, cols, "x");
    }
}

inline void cmd_eigenfunction(const RunConfig& c, std::ostream& os) {
    const MassFamily family = make_family(c);
    const CoordinateMap map = coordinate_map(family);
    if (c.potential == "harmonic") {
        const FirstKindOscillator osc = make_first_kind(family);
        const std::vector<double> ygrid = linspace(-6.0, 6.0, std::max(c.grid_points, 201));
        std::vector<double> xgrid(ygrid.size());
        for (std::size_t i = 0; i < ygrid.size(); ++i) xgrid[i] = map.inverse(ygrid[i]);
        std::vector<std::vector<double>> cols;
        for (int k = 0; k < c.levels; ++k) {
            std::vector<double> col(xgrid.size());
            for (std::size_t i = 0; i < xgrid.size(); ++i)
                col[i] = first_kind_eigenfunction(osc, k, xgrid[i]);
            cols.push_back(std::move(col));
        }
        emit_wave_table(os, xgrid, cols, "x");
        return;
    }
    const PotentialSpec v = make_y_potential(c);
    const std::vector<EigenSolution> sols = numeric_levels(v, c.levels - 1, make_solver_config(c));
    std::vector<std::vector<double>> cols;
    std::vector<double> xgrid;
    for (const EigenSolution& s : sols) {
        const WaveSample psi = pullback_wavefunction(s.wave, map);
        if (xgrid.empty()) xgrid = psi.grid;
        std::vector<double> col(psi.values.size());
        for (std::size_t i = 0; i < col.size(); ++i) col[i] = psi.values[i].real();
        cols.push_back(std::move(col));
    }
    emit_wave_table(os, xgrid, cols, "x");
}

inline void cmd_ladder(const RunConfig& c, std::ostream& os) {
    const MassFamily family = make_family(c);
    const FirstKindOscillator osc = make_first_kind(family);
    const LadderDirection dir =
        c.direction == "raise" ? LadderDirection::Raise : LadderDirection::Lower;
    const int npts = std::max(c.grid_points, 2001);
    WaveSample wave;
    wave.space = Space::Y;
    wave.grid = linspace(-9.0 - 0.5 * c.times, 9.0 + 0.5 * c.times, npts);
    wave.values.resize(wave.grid.size());
    for (std::size_t i = 0; i < wave.grid.size(); ++i)
        wave.values[i] = hermite_function(c.level, wave.grid[i]);

    std::vector<double> coefficients;
    int k = c.level;
    for (int t = 0; t < c.times; ++t) {
        const WaveSample next = apply_ladder(dir, osc, wave);
        coefficients.push_back(std::sqrt(simpson_norm_squared(next) /
                                         simpson_norm_squared(wave)));
        wave = next;
        k += (dir == LadderDirection::Raise) ? 1 : -1;
    }
    if (c.format == "json") {
        nlohmann::json j;
        j["family"] = c.family;
        j["level"] = c.level;
        j["direction"] = c.direction;
        j["times"] = c.times;
        j["coefficients"] = coefficients;
        std::vector<double> re(wave.values.size());
        for (std::size_t i = 0; i < re.size(); ++i) re[i] = wave.values[i].real();
        j["wave"] = {{"grid", wave.grid}, {"re", re}};
        os << j.dump(2) << "\n";
        return;
    }
    os << "# coefficients=";
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        os << (i ? ";" : "") << format_g9(coefficients[i]);
    os << "\n";
    write_csv(os, wave);
}

inline void cmd_coherent(const RunConfig& c, std::ostream& os) {
    const MassFamily family = make_family(c);
    const std::complex<double> z{c.z_re, c.z_im};
    const CoherentState state = make_coherent(z, family);
    const EnergyMoments moments = energy_moments(z);

    nlohmann::json j;
    j["family"] = family_to_json(family);
    j["z"] = {c.z_re, c.z_im};
    j["n_trunc"] = state.n_trunc;
    j["mean_energy"] = moments.mean;
    j["stddev_energy"] = moments.stddev;
    j["uncertainty_product"] = uncertainty_product(state);
    std::vector<double> pn;
    for (int n = 0; n <= std::min(state.n_trunc, 40); ++n) pn.push_back(poisson_prob(z, n));
    j["poisson"] = pn;

    const CoordinateMap map = coordinate_map(family);
    const int npts = std::min(std::max(c.grid_points, 65), 1025);
    const std::vector<double> ygrid = linspace(c.z_re - 8.0, c.z_re + 8.0, npts);
    std::vector<double> xs, density;
    for (double y : ygrid) {
        const double x = map.inverse(y);
        xs.push_back(x);
        density.push_back(std::norm(coherent_wavefunction(state, x)));
    }
    j["density"] = {{"x", xs}, {"abs2", density}};
    os << j.dump(2) << "\n";
}

inline void cmd_catalog(std::ostream& os) {
    nlohmann::json out = nlohmann::json::array();
    const std::vector<MassFamily> families = {
        MassFamily::constant(),      MassFamily::singular0(1.0),
        MassFamily::singular_n(1),   MassFamily::singular_n(2),
        MassFamily::singular_n(3),   MassFamily::regular(),
        MassFamily::rational_w(2.0), MassFamily::quadratic_c(1.0)};
    for (const MassFamily& f : families) {
        nlohmann::json entry;
        entry["family"] = family_to_json(f);
        entry["ordering_a"] = allowed_ordering_for(f).a;
        const CoordinateMap map = coordinate_map(f);
        entry["map"] = map.closed_form ? "closed-form" : "numeric";
        entry["first_kind_potential"] = make_first_kind(f).potential.display_name();
        for (const char* pot : {"harmonic", "squeezed"}) {
            const PotentialSpec x_pot = std::string(pot) == "harmonic"
                                            ? PotentialSpec::harmonic()
                                            : PotentialSpec::squeezed(f.x0);
            try {
                entry["second_kind"][pot] =
                    build_second_kind(f, x_pot).y_potential.display_name();
            } catch (const DomainError& e) {
                entry["second_kind"][pot] = std::string("error: ") + e.what();
            }
        }
        out.push_back(entry);
    }
    os << out.dump(2) << "\n";
}

}  // namespace cli

// Dispatch a validated configuration.  Exit codes: 0 success, 2 domain
// error, 3 convergence failure.
inline int run(const RunConfig& c, std::ostream& err = std::cerr) {
    try {
        std::ofstream file;
        std::unique_ptr<std::ofstream> waves_file;
        std::ostream* os = &std::cout;
        std::ostream* waves_os = nullptr;
        if (!c.out.empty()) {
            file.open(c.out);
            if (!file) throw DomainError("cannot open output file: " + c.out);
            os = &file;
            if (c.command == "first-kind" || c.command == "second-kind") {
                waves_file = std::make_unique<std::ofstream>(c.out + ".waves.csv");
                waves_os = waves_file.get();
            }
        }
        if (c.command == "spectrum")
            cli::cmd_spectrum(c, *os);
        else if (c.command == "wkb-compare")
            cli::cmd_wkb_compare(c, *os);
        else if (c.command == "first-kind")
            cli::cmd_first_kind(c, *os, waves_os);
        else if (c.command == "second-kind")
            cli::cmd_second_kind(c, *os, waves_os);
        else if (c.command == "eigenfunction")
            cli::cmd_eigenfunction(c, *os);
        else if (c.command == "ladder")
            cli::cmd_ladder(c, *os);
        else if (c.command == "coherent")
            cli::cmd_coherent(c, *os);
        else if (c.command == "catalog")
            cli::cmd_catalog(*os);
        else
            throw DomainError("unknown command: " + c.command);
        return 0;
    } catch (const ConvergenceError& e) {
        err << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace pdm
