#pragma once

// Points-file format shared by all tools:
//   # ppc-points d=<dim> n=<count>
//   <dim> comma-separated decimals per line, 17 significant digits.
// Writing then reading reproduces coordinates bit for bit.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ppc/torus.hpp"

namespace ppc {

inline void write_points(const PointSet& ps, std::ostream& out) {
    out << "# ppc-points d=" << ps.dim << " n=" << ps.size() << "\n";
    char buf[40];
    for (std::size_t i = 0; i < ps.size(); ++i) {
        auto p = ps.point(i);
        for (std::size_t j = 0; j < p.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", p[j]);
            if (j) out << ',';
            out << buf;
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("write_points: stream failure");
}

inline void write_points(const PointSet& ps, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_points: cannot open " + path);
    write_points(ps, out);
}

inline PointSet read_points(std::istream& in, std::string label = {}) {
    std::string header;
    if (!std::getline(in, header))
        throw std::runtime_error("read_points: empty file");
    int dim = 0;
    unsigned long long count = 0;
    if (std::sscanf(header.c_str(), "# ppc-points d=%d n=%llu", &dim, &count) != 2)
        throw std::runtime_error("read_points: malformed header: " + header);
    if (dim < 1 || count < 1)
        throw std::runtime_error("read_points: header declares empty point set");

    std::vector<std::vector<double>> rows;
    rows.reserve(count);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        while (p < end) {
            double value = 0.0;
            auto [next, ec] = std::from_chars(p, end, value);
            if (ec != std::errc{})
                throw std::runtime_error("read_points: bad coordinate in line: " + line);
            row.push_back(value);
            p = next;
            if (p < end) {
                if (*p != ',')
                    throw std::runtime_error("read_points: expected ',' in line: " + line);
                ++p;
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() != count)
        throw std::runtime_error("read_points: header count " + std::to_string(count) +
                                 " does not match " + std::to_string(rows.size()) + " rows");
    for (const auto& row : rows)
        if (row.size() != static_cast<std::size_t>(dim))
            throw std::runtime_error("read_points: row dimension does not match header");
    return validate_point_set(rows, std::move(label));
}

inline PointSet read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_points: cannot open " + path);
    return read_points(in, path);
}

}  // namespace ppc
