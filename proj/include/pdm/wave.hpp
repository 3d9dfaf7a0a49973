#pragma once

// Sampled wavefunctions tagged with the space they live in, plus the
// norm helpers and CSV round-trip used by the CLI.

#include <complex>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pdm/errors.hpp"
#include "pdm/format.hpp"
#include "pdm/numerics.hpp"

namespace pdm {

enum class Space { X, Y };

inline std::string to_string(Space s) { return s == Space::X ? "x_space" : "y_space"; }

struct WaveSample {
    std::vector<double> grid;                  // strictly increasing
    std::vector<std::complex<double>> values;  // same length as grid
    Space space = Space::Y;

    void validate() const {
        if (grid.size() != values.size())
            throw DomainError("WaveSample: grid/value length mismatch");
        for (std::size_t i = 1; i < grid.size(); ++i)
            if (!(grid[i] > grid[i - 1]))
                throw DomainError("WaveSample: grid must be strictly increasing");
    }

    bool is_real(double tol = 0.0) const {
        for (const auto& v : values)
            if (std::abs(v.imag()) > tol) return false;
        return true;
    }
};

inline WaveSample make_real_wave(std::vector<double> grid, const std::vector<double>& re,
                                 Space space) {
    WaveSample w;
    w.grid = std::move(grid);
    w.values.reserve(re.size());
    for (double v : re) w.values.emplace_back(v, 0.0);
    w.space = space;
    w.validate();
    return w;
}

// Trapezoid L2 norm squared on the (possibly non-uniform) grid.
inline double trapezoid_norm_squared(const WaveSample& w) {
    std::vector<double> density(w.values.size());
    for (std::size_t i = 0; i < w.values.size(); ++i) density[i] = std::norm(w.values[i]);
    return trapezoid(w.grid, density);
}

// Simpson norm squared; requires a uniform grid.
inline double simpson_norm_squared(const WaveSample& w) {
    const double h = w.grid[1] - w.grid[0];
    std::vector<double> density(w.values.size());
    for (std::size_t i = 0; i < w.values.size(); ++i) density[i] = std::norm(w.values[i]);
    return simpson_uniform(density, h);
}

// <a|b> by Simpson on a common uniform grid.
inline std::complex<double> overlap(const WaveSample& a, const WaveSample& b) {
    if (a.grid.size() != b.grid.size())
        throw DomainError("overlap: samples live on different grids");
    const double h = a.grid[1] - a.grid[0];
    std::vector<double> re(a.values.size()), im(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const std::complex<double> p = std::conj(a.values[i]) * b.values[i];
        re[i] = p.real();
        im[i] = p.imag();
    }
    return {simpson_uniform(re, h), simpson_uniform(im, h)};
}

inline double l2_distance(const WaveSample& a, const WaveSample& b) {
    if (a.grid.size() != b.grid.size())
        throw DomainError("l2_distance: samples live on different grids");
    const double h = a.grid[1] - a.grid[0];
    std::vector<double> d(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) d[i] = std::norm(a.values[i] - b.values[i]);
    return std::sqrt(simpson_uniform(d, h));
}

// CSV: "grid,re[,im]" with a header row naming the columns. The imaginary
// column is emitted only when some value carries one.
inline void write_csv(std::ostream& os, const WaveSample& w) {
    const bool complex_valued = !w.is_real();
    os << "grid,re";
    if (complex_valued) os << ",im";
    os << "\n";
    for (std::size_t i = 0; i < w.grid.size(); ++i) {
        os << format_g9(w.grid[i]) << "," << format_g9(w.values[i].real());
        if (complex_valued) os << "," << format_g9(w.values[i].imag());
        os << "\n";
    }
}

inline WaveSample read_csv(std::istream& is, Space space) {
    WaveSample w;
    w.space = space;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("grid", 0) == 0) continue;
        std::istringstream ls(line);
        std::string cell;
        double cols[3] = {0.0, 0.0, 0.0};
        int k = 0;
        while (std::getline(ls, cell, ',') && k < 3) cols[k++] = std::stod(cell);
        if (k < 2) throw DomainError("read_csv: expected at least two columns");
        w.grid.push_back(cols[0]);
        w.values.emplace_back(cols[1], k > 2 ? cols[2] : 0.0);
    }
    w.validate();
    return w;
}

}  // namespace pdm
