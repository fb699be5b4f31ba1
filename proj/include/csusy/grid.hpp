#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csusy/errors.hpp"

namespace csusy {

/// Uniform sampling grid on [x_min, x_max].
struct GridSpec {
    double x_min = 0.0;
    double x_max = 1.0;
    int n_points = 2;
};

inline std::vector<double> linspace(const GridSpec& g) {
    if (g.n_points < 2) throw ConfigError("grid needs at least 2 points");
    if (!(g.x_min < g.x_max)) throw ConfigError("grid requires x_min < x_max");
    std::vector<double> xs(static_cast<std::size_t>(g.n_points));
    const double h = (g.x_max - g.x_min) / (g.n_points - 1);
    for (int i = 0; i < g.n_points; ++i) xs[static_cast<std::size_t>(i)] = g.x_min + h * i;
    xs.back() = g.x_max;
    return xs;
}

/// Ordered sample points with one or more named value columns, ready for export.
struct GridSeries {
    std::vector<double> x;
    std::vector<std::pair<std::string, std::vector<double>>> columns;

    void add_column(std::string name, std::vector<double> values) {
        columns.emplace_back(std::move(name), std::move(values));
    }
};

} // namespace csusy
