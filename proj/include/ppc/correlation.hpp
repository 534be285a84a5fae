#pragma once

// Pair counting at the Poissonian scales and the (weak) pair-correlation
// and smoothed kernel statistics.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ppc/kernels.hpp"
#include "ppc/neighbor.hpp"
#include "ppc/torus.hpp"

namespace ppc {

/// One evaluation of the (possibly weak) pair-correlation statistic.
struct PairCorrResult {
    double s = 0.0;
    double alpha = 1.0;            // 1 = standard PPC
    NormKind norm = NormKind::kEuclidean;
    std::uint64_t count = 0;       // ordered pairs, always even
    double normalized = 0.0;       // count / N^(2 - alpha)
    double target = 0.0;           // omega_d s^d (l2) or (2s)^d (linf)
};

struct KernelStatResult {
    double delta = 0.0;
    double value = 0.0;            // (1/N^2) sum_{m != n} f_delta(x_m - x_n)
};

/// Number of ordered pairs (m, n), m != n, with torus distance <= radius.
/// BRUTE is the O(N^2) reference; CELLS must agree exactly.
inline std::uint64_t pair_count(const PointSet& ps, double radius, NormKind norm,
                                PairAlgorithm algorithm) {
    if (!(radius > 0.0))
        throw std::invalid_argument("pair_count: radius must be positive");
    std::uint64_t unordered = 0;
    for_each_near_pair(ps, radius, norm, algorithm,
                       [&](std::size_t, std::size_t, double) { ++unordered; });
    return 2 * unordered;
}

/// Standard PPC statistic at scale s N^(-1/d).
inline PairCorrResult ppc_statistic(const PointSet& ps, double s, NormKind norm,
                                    PairAlgorithm algorithm = PairAlgorithm::kCells) {
    if (!(s > 0.0)) throw std::invalid_argument("ppc_statistic: s must be positive");
    const double dn = static_cast<double>(ps.size());
    const double radius = s * std::pow(dn, -1.0 / ps.dim);
    if (radius > torus_distance_cap(ps.dim, norm))
        throw std::invalid_argument("ppc_statistic: s N^(-1/d) exceeds the torus radius cap");
    PairCorrResult result;
    result.s = s;
    result.alpha = 1.0;
    result.norm = norm;
    result.count = pair_count(ps, radius, norm, algorithm);
    result.normalized = static_cast<double>(result.count) / dn;
    result.target = norm == NormKind::kEuclidean
                        ? unit_ball_volume(ps.dim) * std::pow(s, ps.dim)
                        : std::pow(2.0 * s, ps.dim);
    return result;
}

/// Weak pair correlation (d = 1 only): threshold s N^(-alpha), normalization
/// N^(2 - alpha).  alpha = 1 recovers the standard statistic.
inline PairCorrResult weak_ppc_statistic(const PointSet& ps, double s, double alpha,
                                         PairAlgorithm algorithm = PairAlgorithm::kCells) {
    if (ps.dim != 1)
        throw std::invalid_argument("weak_ppc_statistic: defined only in one dimension");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("weak_ppc_statistic: alpha must be in (0,1]");
    if (!(s > 0.0)) throw std::invalid_argument("weak_ppc_statistic: s must be positive");
    const double dn = static_cast<double>(ps.size());
    const double radius = s * std::pow(dn, -alpha);
    if (radius > torus_distance_cap(1, NormKind::kEuclidean))
        throw std::invalid_argument("weak_ppc_statistic: s N^(-alpha) exceeds 1/2");
    PairCorrResult result;
    result.s = s;
    result.alpha = alpha;
    result.norm = NormKind::kEuclidean;
    result.count = pair_count(ps, radius, NormKind::kEuclidean, algorithm);
    result.normalized = static_cast<double>(result.count) / std::pow(dn, 2.0 - alpha);
    result.target = 2.0 * s;
    return result;
}

/// Smoothed statistic (1/N^2) sum_{m != n} f_delta(x_m - x_n).  Only pairs
/// closer than the kernel support 2*delta contribute; the sum is compensated
/// with a fixed visit order.
inline KernelStatResult smoothed_pair_statistic(const PointSet& ps, double delta,
                                                PairAlgorithm algorithm = PairAlgorithm::kCells) {
    if (!(delta > 0.0 && delta < 0.25))
        throw std::invalid_argument("smoothed_pair_statistic: delta must lie in (0, 1/4)");
    const KernelParams kp{ps.dim, delta};
    validate_kernel_params(kp);
    double sum = 0.0, comp = 0.0;
    for_each_near_pair(ps, 2.0 * delta, NormKind::kEuclidean, algorithm,
                       [&](std::size_t, std::size_t, double dist) {
                           const double v = 2.0 * triangle_kernel_radial(kp, dist);
                           const double y = v - comp;
                           const double t = sum + y;
                           comp = (t - sum) - y;
                           sum = t;
                       });
    const double dn = static_cast<double>(ps.size());
    return {delta, sum / (dn * dn)};
}

/// Maximum normalized gap of an increasing positive s-grid, with s_0 = 0
/// prepended: max_n (s_{n+1} - s_n) / s_{M+1}.
inline double s_grid_gap_ratio(const std::vector<double>& svals) {
    if (svals.size() < 2)
        throw std::invalid_argument("s_grid_gap_ratio: need at least two values");
    if (!(svals.front() > 0.0))
        throw std::invalid_argument("s_grid_gap_ratio: values must be positive");
    for (std::size_t i = 1; i < svals.size(); ++i)
        if (!(svals[i] > svals[i - 1]))
            throw std::invalid_argument("s_grid_gap_ratio: values must be strictly increasing");
    double max_gap = svals.front();  // gap from the prepended s_0 = 0
    for (std::size_t i = 1; i < svals.size(); ++i)
        max_gap = std::max(max_gap, svals[i] - svals[i - 1]);
    return max_gap / svals.back();
}

}  // namespace ppc
