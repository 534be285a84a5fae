#pragma once

// Near-pair enumeration on the torus: O(N^2) brute force and a periodic
// cell list that visits only neighboring cells.  Both report exactly the
// unordered pairs {i, j} with torus distance <= radius, in a deterministic
// order.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ppc/torus.hpp"

namespace ppc {

enum class PairAlgorithm { kBrute, kCells };

namespace detail {

template <class Visit>
void near_pairs_brute(const PointSet& ps, double radius, NormKind norm, Visit&& visit) {
    const std::size_t n = ps.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dist = torus_distance(ps.point(i), ps.point(j), norm);
            if (dist <= radius) visit(i, j, dist);
        }
}

template <class Visit>
void near_pairs_cells(const PointSet& ps, double radius, NormKind norm, Visit&& visit) {
    const int d = ps.dim;
    const std::size_t n = ps.size();

    // Cell width must be >= radius.  The axis count is capped so the grid
    // stays proportional to N; coarser cells remain correct.
    long long per_axis = static_cast<long long>(std::floor(1.0 / radius));
    long long cap = std::max<long long>(
        3, static_cast<long long>(std::ceil(std::pow(4.0 * static_cast<double>(n), 1.0 / d))));
    per_axis = std::min(per_axis, cap);
    if (per_axis < 3) {
        near_pairs_brute(ps, radius, norm, visit);
        return;
    }
    const auto m = static_cast<std::size_t>(per_axis);
    std::size_t total_cells = 1;
    for (int j = 0; j < d; ++j) total_cells *= m;

    // Bucket points into cells (counting sort keeps index order inside cells).
    std::vector<std::size_t> cell_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t idx = 0;
        auto p = ps.point(i);
        for (int j = 0; j < d; ++j) {
            auto c = static_cast<std::size_t>(p[static_cast<std::size_t>(j)] * static_cast<double>(m));
            if (c >= m) c = m - 1;
            idx = idx * m + c;
        }
        cell_of[i] = idx;
    }
    std::vector<std::size_t> start(total_cells + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++start[cell_of[i] + 1];
    for (std::size_t c = 0; c < total_cells; ++c) start[c + 1] += start[c];
    std::vector<std::size_t> members(n);
    {
        std::vector<std::size_t> cursor(start.begin(), start.end() - 1);
        for (std::size_t i = 0; i < n; ++i) members[cursor[cell_of[i]]++] = i;
    }

    // Half stencil: offsets in {-1,0,1}^d whose first nonzero entry is +1.
    std::vector<std::vector<int>> offsets;
    {
        std::vector<int> off(static_cast<std::size_t>(d), -1);
        while (true) {
            int first_nonzero = 0;
            for (int v : off)
                if (v != 0) { first_nonzero = v; break; }
            if (first_nonzero > 0) offsets.push_back(off);
            int j = d - 1;
            while (j >= 0 && off[static_cast<std::size_t>(j)] == 1)
                off[static_cast<std::size_t>(j--)] = -1;
            if (j < 0) break;
            ++off[static_cast<std::size_t>(j)];
        }
    }

    std::vector<std::size_t> digits(static_cast<std::size_t>(d), 0);
    for (std::size_t cell = 0; cell < total_cells; ++cell) {
        const std::size_t* cell_begin = members.data() + start[cell];
        const std::size_t cell_count = start[cell + 1] - start[cell];
        // Pairs within the cell.
        for (std::size_t a = 0; a < cell_count; ++a)
            for (std::size_t b = a + 1; b < cell_count; ++b) {
                std::size_t i = cell_begin[a], j = cell_begin[b];
                if (i > j) std::swap(i, j);
                const double dist = torus_distance(ps.point(i), ps.point(j), norm);
                if (dist <= radius) visit(i, j, dist);
            }
        // Pairs against each forward neighbor cell (periodic wrap; per_axis
        // >= 3 guarantees the neighbor is a distinct cell).
        for (const auto& off : offsets) {
            std::size_t nbr = 0;
            for (int j = 0; j < d; ++j) {
                auto c = static_cast<long long>(digits[static_cast<std::size_t>(j)]) +
                         off[static_cast<std::size_t>(j)];
                if (c < 0) c += per_axis;
                if (c >= per_axis) c -= per_axis;
                nbr = nbr * m + static_cast<std::size_t>(c);
            }
            const std::size_t* nbr_begin = members.data() + start[nbr];
            const std::size_t nbr_count = start[nbr + 1] - start[nbr];
            for (std::size_t a = 0; a < cell_count; ++a)
                for (std::size_t b = 0; b < nbr_count; ++b) {
                    std::size_t i = cell_begin[a], j = nbr_begin[b];
                    if (i > j) std::swap(i, j);
                    const double dist = torus_distance(ps.point(i), ps.point(j), norm);
                    if (dist <= radius) visit(i, j, dist);
                }
        }
        // Advance mixed-radix cell coordinates.
        for (int j = d - 1; j >= 0; --j) {
            if (++digits[static_cast<std::size_t>(j)] < m) break;
            digits[static_cast<std::size_t>(j)] = 0;
        }
    }
}

}  // namespace detail

/// Visit every unordered pair {i, j} with torus distance <= radius once.
/// The visitor receives (i, j, dist) with i < j.
template <class Visit>
void for_each_near_pair(const PointSet& ps, double radius, NormKind norm,
                        PairAlgorithm algorithm, Visit&& visit) {
    if (!(radius > 0.0))
        throw std::invalid_argument("for_each_near_pair: radius must be positive");
    radius = std::min(radius, torus_distance_cap(ps.dim, norm));
    if (algorithm == PairAlgorithm::kBrute)
        detail::near_pairs_brute(ps, radius, norm, visit);
    else
        detail::near_pairs_cells(ps, radius, norm, visit);
}

}  // namespace ppc
