#pragma once

// Star discrepancy: exact in one dimension via the sorted-points formula,
// sandwiched between grid bounds in higher dimensions.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ppc/torus.hpp"

namespace ppc {

struct DiscrepancyResult {
    std::size_t n = 0;
    double lower = 0.0;
    double upper = 0.0;
    bool exact = false;  // true iff lower == upper by construction
};

/// Exact star discrepancy for d = 1:
/// D*_N = 1/(2N) + max_k |x_(k) - (2k-1)/(2N)| over order statistics.
inline DiscrepancyResult star_discrepancy_1d(const PointSet& ps) {
    if (ps.dim != 1)
        throw std::invalid_argument("star_discrepancy_1d: defined only in one dimension");
    std::vector<double> sorted(ps.coords);
    std::sort(sorted.begin(), sorted.end());
    const double dn = static_cast<double>(sorted.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        const double anchor = (2.0 * static_cast<double>(k) + 1.0) / (2.0 * dn);
        worst = std::max(worst, std::fabs(sorted[k] - anchor));
    }
    const double value = 0.5 / dn + worst;
    return {sorted.size(), value, value, true};
}

/// Sandwich bounds for star discrepancy in any dimension: the lower bound
/// scans anchored boxes with corners on the m-per-axis grid, the upper bound
/// adds the grid-gap slack d/m.  Boxes are half-open [0, t) per axis; points
/// exactly on a grid plane count via strict inequality, which matches
/// flooring into cells.
inline DiscrepancyResult star_discrepancy_box(const PointSet& ps, int resolution) {
    if (resolution < 2)
        throw std::invalid_argument("star_discrepancy_box: resolution must be >= 2");
    const int d = ps.dim;
    const auto m = static_cast<std::size_t>(resolution);
    std::size_t total = 1;
    for (int j = 0; j < d; ++j) {
        if (total > (std::size_t{1} << 27) / m)
            throw std::invalid_argument("star_discrepancy_box: resolution^d too large");
        total *= m;
    }

    // Histogram of points per grid cell, then prefix sums along each axis
    // turn it into counts of anchored boxes.
    std::vector<double> counts(total, 0.0);
    const std::size_t npts = ps.size();
    for (std::size_t i = 0; i < npts; ++i) {
        auto p = ps.point(i);
        std::size_t idx = 0;
        for (int j = 0; j < d; ++j) {
            auto c = static_cast<std::size_t>(p[static_cast<std::size_t>(j)] * static_cast<double>(m));
            if (c >= m) c = m - 1;
            idx = idx * m + c;
        }
        counts[idx] += 1.0;
    }
    std::size_t stride = 1;
    for (int axis = d - 1; axis >= 0; --axis) {
        for (std::size_t base = 0; base < total; ++base) {
            const std::size_t digit = (base / stride) % m;
            if (digit > 0) counts[base] += counts[base - stride];
        }
        stride *= m;
    }

    // Cell (c_0..c_{d-1}) now holds the count of the box with corner
    // ((c_0+1)/m, ..., (c_{d-1}+1)/m).
    const double dn = static_cast<double>(npts);
    double lower = 0.0;
    std::vector<std::size_t> digits(static_cast<std::size_t>(d), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        double volume = 1.0;
        for (int j = 0; j < d; ++j)
            volume *= static_cast<double>(digits[static_cast<std::size_t>(j)] + 1) /
                      static_cast<double>(m);
        lower = std::max(lower, std::fabs(counts[idx] / dn - volume));
        for (int j = d - 1; j >= 0; --j) {
            if (++digits[static_cast<std::size_t>(j)] < m) break;
            digits[static_cast<std::size_t>(j)] = 0;
        }
    }
    const double upper = std::min(1.0, lower + static_cast<double>(d) / static_cast<double>(m));
    return {npts, lower, upper, false};
}

}  // namespace ppc
