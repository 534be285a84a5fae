#pragma once

// Convolution kernels and Fourier multipliers: box kernel g, its
// self-convolution f = g*g, the sinc/Bessel coefficient formulas, the
// multiplier radius, and the Parseval identity check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ppc/neighbor.hpp"
#include "ppc/spectrum.hpp"
#include "ppc/torus.hpp"

namespace ppc {

/// Kernel width and dimension.  delta < 1/4 keeps supp f, a 2*delta ball,
/// inside a fundamental domain, so torus Fourier coefficients equal the
/// Euclidean transform.
struct KernelParams {
    int dim = 1;
    double delta = 0.1;
};

inline void validate_kernel_params(const KernelParams& kp) {
    if (kp.dim < 1 || kp.dim > 3)
        throw std::domain_error("kernels: supported dimensions are 1, 2, 3");
    if (!(kp.delta > 0.0 && kp.delta < 0.25))
        throw std::invalid_argument("kernels: delta must lie in (0, 1/4)");
}

/// J_1 by power series for z <= 12 and the large-argument asymptotic
/// expansion beyond.  Coefficients enter squared downstream, so ~1e-10
/// absolute accuracy at the switch point is ample.
inline double bessel_j1(double z) {
    const double az = std::fabs(z);
    const double sign = z < 0.0 ? -1.0 : 1.0;
    if (az <= 12.0) {
        const double q = 0.25 * az * az;
        double term = 0.5 * az;  // k = 0 term
        double sum = term;
        for (int k = 1; k < 60; ++k) {
            term *= -q / (static_cast<double>(k) * (k + 1.0));
            sum += term;
            if (std::fabs(term) < 1e-18 * std::fabs(sum) + 1e-300) break;
        }
        return sign * sum;
    }
    // Hankel expansion, mu = 4: truncate at the smallest term.
    const double inv8z = 1.0 / (8.0 * az);
    double p = 1.0, q = 0.0;
    double term = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 20; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (4.0 - odd * odd) * inv8z / static_cast<double>(k);
        if (std::fabs(term) >= prev) break;
        prev = std::fabs(term);
        switch (k % 4) {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            case 0: p += term; break;
        }
    }
    const double omega = az - 0.75 * std::numbers::pi;
    return sign * std::sqrt(2.0 / (std::numbers::pi * az)) *
           (p * std::cos(omega) - q * std::sin(omega));
}

/// Radial profile of g_hat at z = 2 pi ||l|| delta.  Returns 1 at z = 0.
inline double box_fourier_radial_profile(int dim, double z) {
    if (z == 0.0) return 1.0;
    switch (dim) {
        case 1:
            return std::sin(z) / z;
        case 2:
            return 2.0 * bessel_j1(z) / z;
        case 3: {
            if (z < 1.0) {
                // 3 (sin z - z cos z) / z^3 = sum_{k>=1} (-1)^(k+1) 6k z^(2k-2) / (2k+1)!
                const double z2 = z * z;
                double t = 1.0;  // k = 1 term: 6 / 3! = 1
                double sum = t;
                for (int k = 2; k < 24; ++k) {
                    t *= -z2 * static_cast<double>(k) /
                         (static_cast<double>(k - 1) * (2.0 * k) * (2.0 * k + 1.0));
                    sum += t;
                    if (std::fabs(t) < 1e-18) break;
                }
                return sum;
            }
            return 3.0 * (std::sin(z) - z * std::cos(z)) / (z * z * z);
        }
        default:
            throw std::domain_error("box_fourier_radial_profile: unsupported dimension");
    }
}

/// First positive zero of the radial profile.
inline double fourier_profile_first_zero(int dim) {
    switch (dim) {
        case 1: return std::numbers::pi;
        case 2: return 3.8317059702075123;   // first zero of J_1
        case 3: return 4.493409457909064;    // first root of tan z = z
        default: throw std::domain_error("fourier_profile_first_zero: unsupported dimension");
    }
}

/// g_hat(l) for the normalized box/ball kernel; g_hat(0) = 1.
inline double box_fourier_coeff(const KernelParams& kp, std::span<const long long> ell) {
    validate_kernel_params(kp);
    if (ell.size() != static_cast<std::size_t>(kp.dim))
        throw std::invalid_argument("box_fourier_coeff: frequency dimension mismatch");
    double sq = 0.0;
    for (long long c : ell) sq += static_cast<double>(c) * static_cast<double>(c);
    const double z = 2.0 * std::numbers::pi * std::sqrt(sq) * kp.delta;
    return box_fourier_radial_profile(kp.dim, z);
}

inline double box_fourier_coeff_radial(const KernelParams& kp, double freq_norm) {
    validate_kernel_params(kp);
    return box_fourier_radial_profile(kp.dim, 2.0 * std::numbers::pi * freq_norm * kp.delta);
}

/// g at Euclidean distance r from the origin: the normalized indicator of
/// the delta-ball.
inline double box_kernel_radial(const KernelParams& kp, double r) {
    validate_kernel_params(kp);
    if (r < 0.0) r = -r;
    if (r > kp.delta) return 0.0;
    return 1.0 / (unit_ball_volume(kp.dim) * std::pow(kp.delta, kp.dim));
}

inline double box_kernel_eval(const KernelParams& kp, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(kp.dim))
        throw std::invalid_argument("box_kernel_eval: point dimension mismatch");
    std::vector<double> origin(x.size(), 0.0);
    return box_kernel_radial(kp, torus_distance(x, origin, NormKind::kEuclidean));
}

/// f = g*g at center distance r: closed form in d=1, normalized lens /
/// ball-cap intersection volumes in d=2,3.  f(0) = 1/(omega_d delta^d).
inline double triangle_kernel_radial(const KernelParams& kp, double r) {
    validate_kernel_params(kp);
    if (r < 0.0) r = -r;
    const double delta = kp.delta;
    if (r >= 2.0 * delta) return 0.0;
    switch (kp.dim) {
        case 1:
            return 1.0 / (2.0 * delta) - r / (4.0 * delta * delta);
        case 2: {
            const double lens = 2.0 * delta * delta * std::acos(r / (2.0 * delta)) -
                                0.5 * r * std::sqrt(4.0 * delta * delta - r * r);
            const double vol = std::numbers::pi * delta * delta;
            return lens / (vol * vol);
        }
        case 3: {
            const double cap = std::numbers::pi / 12.0 * (4.0 * delta + r) *
                               (2.0 * delta - r) * (2.0 * delta - r);
            const double vol = 4.0 * std::numbers::pi / 3.0 * delta * delta * delta;
            return cap / (vol * vol);
        }
        default:
            throw std::domain_error("triangle_kernel_radial: unsupported dimension");
    }
}

inline double triangle_kernel_eval(const KernelParams& kp, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(kp.dim))
        throw std::invalid_argument("triangle_kernel_eval: point dimension mismatch");
    std::vector<double> origin(x.size(), 0.0);
    return triangle_kernel_radial(kp, torus_distance(x, origin, NormKind::kEuclidean));
}

/// Largest frequency radius L such that g_hat(l)^2 >= c2 for all ||l|| <= L,
/// by bisection on the radial profile before its first zero.
inline double multiplier_radius(const KernelParams& kp, double c2) {
    validate_kernel_params(kp);
    if (!(c2 > 0.0 && c2 < 1.0))
        throw std::invalid_argument("multiplier_radius: c2 must lie in (0,1)");
    double lo = 0.0;
    double hi = fourier_profile_first_zero(kp.dim);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double v = box_fourier_radial_profile(kp.dim, mid);
        if (v * v >= c2)
            lo = mid;
        else
            hi = mid;
    }
    return lo / (2.0 * std::numbers::pi * kp.delta);
}

/// Two independent evaluations of sum_{m,n} f(x_m - x_n): direct pair sum
/// against the truncated Fourier series N^2 + sum g_hat(l)^2 |S_N(l)|^2,
/// with a rigorous bound on the discarded tail.
struct ParsevalReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double tail_bound = 0.0;
    double gap = 0.0;
    double cutoff = 0.0;
};

namespace detail {

// Tail envelopes use |g_hat| <= 1/(pi l delta)-type decay per dimension:
//   d=1: g_hat(l)^2 <= 1/(2 pi l delta)^2, so
//        2 N^2 sum_{l>L} g_hat^2 <= N^2 / (2 pi^2 delta^2 L).
//   d=2: |J_1(z)| <= 0.78575 z^(-1/3) (Landau), g_hat^2 <= A ||l||^(-8/3);
//        lattice points own disjoint unit squares, so the sum is bounded by
//        the integral 2 pi int_{u0} (u + r0) A u^(-8/3) du, u0 = L - sqrt(2).
//   d=3: for z >= 1, |3(sin z - z cos z)/z^3| <= 6/z^2, g_hat^2 <= B ||l||^-4;
//        4 pi int_{u0} (u + r0)^2 B u^-4 du, u0 = L - sqrt(3).
inline double parseval_tail_bound(int dim, double delta, double L, double n2) {
    const double pi = std::numbers::pi;
    switch (dim) {
        case 1:
            return n2 / (2.0 * pi * pi * delta * delta * L);
        case 2: {
            const double r0 = std::numbers::sqrt2 / 2.0;
            const double u0 = L - 2.0 * r0;
            if (u0 <= 1.0) return std::numeric_limits<double>::infinity();
            const double a = 4.0 * 0.78575 * 0.78575 * std::pow(2.0 * pi * delta, -8.0 / 3.0);
            const double integral =
                1.5 * std::pow(u0, -2.0 / 3.0) + r0 * 0.6 * std::pow(u0, -5.0 / 3.0);
            return n2 * 2.0 * pi * a * integral;
        }
        case 3: {
            const double r0 = std::sqrt(3.0) / 2.0;
            const double u0 = L - 2.0 * r0;
            if (u0 <= 0.0 || 2.0 * pi * delta * u0 < 1.0)
                return std::numeric_limits<double>::infinity();
            const double b = 36.0 * std::pow(2.0 * pi * delta, -4.0);
            const double integral =
                1.0 / u0 + r0 / (u0 * u0) + r0 * r0 / (3.0 * u0 * u0 * u0);
            return n2 * 4.0 * pi * b * integral;
        }
        default:
            throw std::domain_error("parseval_tail_bound: unsupported dimension");
    }
}

}  // namespace detail

inline ParsevalReport parseval_check(const PointSet& ps, const KernelParams& kp,
                                     double trunc_tol) {
    validate_kernel_params(kp);
    if (ps.dim != kp.dim)
        throw std::invalid_argument("parseval_check: point-set/kernel dimension mismatch");
    if (!(trunc_tol > 0.0))
        throw std::invalid_argument("parseval_check: trunc_tol must be positive");
    const std::size_t n = ps.size();
    if (n > 5000)
        throw std::invalid_argument("parseval_check: oracle scale is N <= 5000");
    const double dn = static_cast<double>(n);
    const double n2 = dn * dn;
    ParsevalReport report;

    // Direct side: all ordered pairs including the diagonal.  Only pairs
    // closer than 2*delta contribute; Kahan summation in visit order.
    {
        double sum = 0.0, comp = 0.0;
        auto add = [&](double v) {
            const double y = v - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        };
        for_each_near_pair(ps, 2.0 * kp.delta, NormKind::kEuclidean, PairAlgorithm::kCells,
                           [&](std::size_t, std::size_t, double dist) {
                               add(2.0 * triangle_kernel_radial(kp, dist));
                           });
        report.lhs = sum + dn * triangle_kernel_radial(kp, 0.0);
    }

    // Spectral side, truncated at a radius whose analytic tail bound is
    // reported alongside.
    if (kp.dim == 1) {
        const double pi2 = 2.0 * std::numbers::pi * std::numbers::pi;
        auto cap = std::max<long long>(1000, 2'000'000'000 / static_cast<long long>(std::max<std::size_t>(n, 1)));
        auto L = static_cast<long long>(std::ceil(n2 / (pi2 * kp.delta * kp.delta * trunc_tol)));
        L = std::clamp<long long>(L, 16, cap);
        report.cutoff = static_cast<double>(L);
        report.tail_bound = detail::parseval_tail_bound(1, kp.delta, static_cast<double>(L), n2);
        const auto power = weyl_power_spectrum_1d(ps, L);
        double sum = 0.0, comp = 0.0;
        for (long long l = L; l >= 1; --l) {
            const double ghat = box_fourier_coeff_radial(kp, static_cast<double>(l));
            const double v = 2.0 * ghat * ghat * power[static_cast<std::size_t>(l - 1)];
            const double y = v - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        report.rhs = n2 + sum;
    } else {
        const double cap = kp.dim == 2 ? 192.0 : 56.0;
        double L = 8.0;
        while (L < cap &&
               detail::parseval_tail_bound(kp.dim, kp.delta, L, n2) > trunc_tol)
            L *= 1.5;
        L = std::min(L, cap);
        report.cutoff = L;
        report.tail_bound = detail::parseval_tail_bound(kp.dim, kp.delta, L, n2);
        // Conjugate symmetry: evaluate the half with positive leading
        // coordinate and double.  Phases are separable across axes, so each
        // point contributes via cached per-axis power tables instead of one
        // exp per lattice vector.
        std::vector<std::vector<long long>> half;
        for (const auto& ell : lattice_ball(kp.dim, L)) {
            long long lead = 0;
            for (long long c : ell)
                if (c != 0) { lead = c; break; }
            if (lead > 0) half.push_back(ell);
        }
        const std::size_t lmax = static_cast<std::size_t>(std::floor(L));
        std::vector<std::complex<double>> acc(half.size(), {0.0, 0.0});
        std::vector<std::complex<double>> powers(
            static_cast<std::size_t>(kp.dim) * (lmax + 1));
        for (std::size_t i = 0; i < n; ++i) {
            const auto p = ps.point(i);
            for (int j = 0; j < kp.dim; ++j) {
                auto* row = powers.data() + static_cast<std::size_t>(j) * (lmax + 1);
                const auto w = std::polar(1.0, 2.0 * std::numbers::pi * p[j]);
                row[0] = {1.0, 0.0};
                for (std::size_t l = 1; l <= lmax; ++l) row[l] = row[l - 1] * w;
            }
            for (std::size_t k = 0; k < half.size(); ++k) {
                std::complex<double> v{1.0, 0.0};
                for (int j = 0; j < kp.dim; ++j) {
                    const long long c = half[k][static_cast<std::size_t>(j)];
                    const auto* row = powers.data() + static_cast<std::size_t>(j) * (lmax + 1);
                    v *= c >= 0 ? row[c] : std::conj(row[-c]);
                }
                acc[k] += v;
            }
        }
        double sum = 0.0;
        for (std::size_t k = 0; k < half.size(); ++k) {
            const double ghat = box_fourier_coeff(kp, half[k]);
            sum += 2.0 * ghat * ghat * std::norm(acc[k]);
        }
        report.rhs = n2 + sum;
    }
    report.gap = std::fabs(report.lhs - report.rhs);
    return report;
}

}  // namespace ppc
