// pdmosc: spectra, eigenfunctions, WKB comparisons, ladder actions and
// coherent states for position-dependent-mass oscillators.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdm/cli.hpp"

namespace {

// --config file.json provides defaults; explicit flags override it.
pdm::RunConfig load_config_defaults(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            std::ifstream in(argv[i + 1]);
            if (!in) throw pdm::DomainError(std::string("cannot read config file: ") + argv[i + 1]);
            nlohmann::json j;
            in >> j;
            return pdm::config_from_json(j);
        }
    }
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    pdm::RunConfig cfg;
    try {
        cfg = load_config_defaults(argc, argv);
    } catch (const pdm::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"position-dependent mass oscillator toolkit"};
    std::string config_path;
    app.add_option("command", cfg.command,
                   "one of: spectrum, eigenfunction, wkb-compare, ladder, coherent, catalog, "
                   "first-kind, second-kind")
        ->required(cfg.command.empty());
    app.add_option("--config", config_path, "JSON config mirroring the flags");
    app.add_option("--family", cfg.family,
                   "mass family: constant, singular0, singular_n, regular, rational_w, "
                   "quadratic_c");
    app.add_option("--n", cfg.n, "singular_n family index / power-law index");
    app.add_option("--x0", cfg.x0, "dimensionless offset of the singular families");
    app.add_option("--lambda", cfg.lambda, "inverse-length scale");
    app.add_option("--w", cfg.w, "rational_w parameter");
    app.add_option("--c", cfg.c, "quadratic_c parameter");
    app.add_option("--potential", cfg.potential,
                   "harmonic, sinh2, powerlaw, squeezed, log2, arcsinhsq");
    app.add_option("--levels", cfg.levels, "number of levels to emit");
    app.add_option("--level", cfg.level, "ladder start level");
    app.add_option("--grid-points", cfg.grid_points, "solver / sampling grid points");
    app.add_option("--ymax-margin", cfg.ymax_margin, "domain truncation margin");
    app.add_option("--method", cfg.method, "spectrum method: auto, numerov, wkb");
    app.add_option("--direction", cfg.direction, "ladder direction: raise or lower");
    app.add_option("--times", cfg.times, "ladder applications");
    std::string z_arg;
    app.add_option("--z", z_arg, "coherent label as re,im");
    app.add_option("--format", cfg.format, "csv or json");
    app.add_option("--out", cfg.out, "output path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    if (!z_arg.empty()) {
        const auto comma = z_arg.find(',');
        try {
            cfg.z_re = std::stod(z_arg.substr(0, comma));
            cfg.z_im = comma == std::string::npos ? 0.0 : std::stod(z_arg.substr(comma + 1));
        } catch (const std::exception&) {
            std::cerr << "domain error: --z expects re,im\n";
            return 2;
        }
    }
    return pdm::run(cfg);
}
