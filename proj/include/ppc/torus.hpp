#pragma once

// Torus geometry and the point-set container shared by every other module.
// The torus is [0,1)^d with per-coordinate wraparound, volume 1.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppc {

enum class NormKind { kEuclidean, kSup };

inline const char* norm_name(NormKind norm) {
    return norm == NormKind::kEuclidean ? "l2" : "linf";
}

/// Volume of the d-dimensional Euclidean unit ball.
inline double unit_ball_volume(int d) {
    if (d < 1) throw std::invalid_argument("unit_ball_volume: dimension must be >= 1");
    switch (d) {
        case 1: return 2.0;
        case 2: return std::numbers::pi;
        case 3: return 4.0 * std::numbers::pi / 3.0;
        default:
            return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
    }
}

/// Ordered sequence of N points on the d-torus, stored row-major.
/// The order of points is significant: the object of study is the prefix
/// x_1..x_N, so permuting coordinates of storage is not allowed.
struct PointSet {
    int dim = 1;
    std::vector<double> coords;  // size() * dim entries, each in [0,1)
    std::string label;

    std::size_t size() const { return dim > 0 ? coords.size() / static_cast<std::size_t>(dim) : 0; }

    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
    }
};

/// Wraparound distance between two points of equal dimension.
/// Per-coordinate displacement is min(|p_i - q_i|, 1 - |p_i - q_i|); the
/// result is the chosen norm of the displacement vector.
inline double torus_distance(std::span<const double> p, std::span<const double> q, NormKind norm) {
    if (p.size() != q.size())
        throw std::invalid_argument("torus_distance: dimension mismatch");
    if (p.empty())
        throw std::invalid_argument("torus_distance: dimension must be >= 1");
    if (norm == NormKind::kSup) {
        double worst = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            double d = std::fabs(p[i] - q[i]);
            d = std::min(d, 1.0 - d);
            worst = std::max(worst, d);
        }
        return worst;
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double d = std::fabs(p[i] - q[i]);
        d = std::min(d, 1.0 - d);
        sq += d * d;
    }
    return std::sqrt(sq);
}

/// Largest possible torus distance for the given norm and dimension.
inline double torus_distance_cap(int dim, NormKind norm) {
    return norm == NormKind::kSup ? 0.5 : 0.5 * std::sqrt(static_cast<double>(dim));
}

/// Reduce a raw coordinate into [0,1).  Exactly 1 maps to 0 (torus
/// identification); anything else outside [0,1) is an input error.
inline double reduce_coordinate(double c) {
    if (c == 1.0) return 0.0;
    if (!(c >= 0.0 && c < 1.0))
        throw std::invalid_argument("coordinate out of range [0,1): " + std::to_string(c));
    return c;
}

/// Build a validated PointSet from raw coordinate rows.  All rows must share
/// one dimension and every coordinate must lie in [0,1] (1 reduces to 0).
inline PointSet validate_point_set(const std::vector<std::vector<double>>& rows,
                                   std::string label = {}) {
    if (rows.empty())
        throw std::invalid_argument("validate_point_set: empty input");
    const std::size_t dim = rows.front().size();
    if (dim < 1)
        throw std::invalid_argument("validate_point_set: dimension must be >= 1");
    PointSet ps;
    ps.dim = static_cast<int>(dim);
    ps.label = std::move(label);
    ps.coords.reserve(rows.size() * dim);
    for (const auto& row : rows) {
        if (row.size() != dim)
            throw std::invalid_argument("validate_point_set: ragged rows");
        for (double c : row) ps.coords.push_back(reduce_coordinate(c));
    }
    return ps;
}

}  // namespace ppc
