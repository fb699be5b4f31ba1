#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "csusy/errors.hpp"
#include "csusy/grid.hpp"

namespace csusy::io {

/// 17 significant digits: enough for binary doubles to round-trip exactly
/// through decimal text.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// CSV layout: header row `x,name1[,name2,...]`, UTF-8, LF line endings,
/// '.' decimal separator.
inline void write_csv(const std::string& path, const GridSeries& series) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_csv: cannot open " + path);
    out << "x";
    for (const auto& [name, _] : series.columns) out << "," << name;
    out << "\n";
    for (std::size_t i = 0; i < series.x.size(); ++i) {
        out << format_double(series.x[i]);
        for (const auto& [_, col] : series.columns) out << "," << format_double(col[i]);
        out << "\n";
    }
}

inline GridSeries read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("read_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw Error("read_csv: empty file " + path);
    GridSeries series;
    {
        std::istringstream header(line);
        std::string name;
        bool first = true;
        while (std::getline(header, name, ',')) {
            if (first) { first = false; continue; }
            series.columns.emplace_back(name, std::vector<double>{});
        }
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::size_t idx = 0;
        while (std::getline(row, cell, ',')) {
            const double v = std::strtod(cell.c_str(), nullptr);
            if (idx == 0) series.x.push_back(v);
            else if (idx - 1 < series.columns.size()) series.columns[idx - 1].second.push_back(v);
            ++idx;
        }
    }
    return series;
}

inline nlohmann::json series_to_json(const GridSeries& series) {
    nlohmann::json j;
    j["x"] = series.x;
    for (const auto& [name, col] : series.columns) j[name] = col;
    return j;
}

inline void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_json: cannot open " + path);
    out << j.dump(2) << "\n";
}

} // namespace csusy::io
