#pragma once

// Deterministic, seeded construction of the sequence families used to
// exercise and falsify Poissonian pair correlation.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ppc/rng.hpp"
#include "ppc/torus.hpp"

namespace ppc {

enum class Family { kRandom, kKronecker, kQuadratic, kGrid, kHalton, kClustered };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::kRandom: return "random";
        case Family::kKronecker: return "kronecker";
        case Family::kQuadratic: return "quadratic";
        case Family::kGrid: return "grid";
        case Family::kHalton: return "halton";
        case Family::kClustered: return "clustered";
    }
    return "?";
}

inline Family family_from_name(const std::string& s) {
    if (s == "random") return Family::kRandom;
    if (s == "kronecker") return Family::kKronecker;
    if (s == "quadratic") return Family::kQuadratic;
    if (s == "grid") return Family::kGrid;
    if (s == "halton") return Family::kHalton;
    if (s == "clustered") return Family::kClustered;
    throw std::invalid_argument("unknown generator family: " + s);
}

struct GeneratorSpec {
    Family family = Family::kRandom;
    int dim = 1;
    std::size_t count = 1;
    std::uint64_t seed = 0;            // RANDOM / CLUSTERED
    std::vector<double> alpha;         // KRONECKER (d entries) / QUADRATIC (1 entry)
    std::vector<int> bases;            // HALTON (d pairwise-coprime bases >= 2)
    int clusters = 1;                  // CLUSTERED
};

// Exact fractional part of k * alpha.  alpha is split into a 53-bit integer
// significand times a power of two, k * significand is reduced in 128-bit
// integer arithmetic.  A naive double product loses all fractional precision
// once k^2 * alpha reaches ~2^52, which happens near k = 10^5 for the
// quadratic family.
inline double frac_times(double alpha, unsigned long long k) {
    if (k == 0) return 0.0;
    const bool neg = alpha < 0.0;
    const double a = std::fabs(alpha);
    if (a == 0.0) return 0.0;
    if (!std::isfinite(a)) throw std::invalid_argument("frac_times: alpha must be finite");
    int e = 0;
    const double m = std::frexp(a, &e);          // a = m * 2^e, m in [0.5, 1)
    const auto sig = static_cast<unsigned long long>(std::ldexp(m, 53));  // exact
    const int shift = 53 - e;                    // a = sig * 2^-shift
    if (shift <= 0) return 0.0;                  // alpha is an integer
    double x;
    if (shift >= 120) {
        // k * a < 2^(93-120) < 1: the product itself is the fractional part.
        x = static_cast<double>(k) * a;
        x -= std::floor(x);
    } else {
        const unsigned __int128 prod = static_cast<unsigned __int128>(sig) * k;
        const unsigned __int128 mask = ((static_cast<unsigned __int128>(1) << shift) - 1);
        const unsigned __int128 r = prod & mask;
        x = std::ldexp(static_cast<double>(r), -shift);
    }
    if (neg && x > 0.0) x = 1.0 - x;
    if (x >= 1.0) x = 0.0;  // rounding at the top of the interval
    return x;
}

/// Radical inverse of index n in the given base (Halton component).
inline double radical_inverse(int base, unsigned long long n) {
    double inv_base = 1.0 / base;
    double value = 0.0;
    double scale = inv_base;
    while (n > 0) {
        value += static_cast<double>(n % static_cast<unsigned long long>(base)) * scale;
        n /= static_cast<unsigned long long>(base);
        scale *= inv_base;
    }
    return value < 1.0 ? value : 0.0;
}

inline std::vector<int> first_primes(int count) {
    std::vector<int> primes;
    for (int cand = 2; static_cast<int>(primes.size()) < count; ++cand) {
        bool is_prime = true;
        for (int p : primes) {
            if (p * p > cand) break;
            if (cand % p == 0) { is_prime = false; break; }
        }
        if (is_prime) primes.push_back(cand);
    }
    return primes;
}

/// Default Kronecker directions: sqrt of the first d primes (badly
/// approximable coordinates).
inline std::vector<double> default_kronecker_alpha(int dim) {
    std::vector<double> alpha;
    for (int p : first_primes(dim)) alpha.push_back(std::sqrt(static_cast<double>(p)));
    return alpha;
}

namespace detail {

inline std::string spec_label(const GeneratorSpec& spec) {
    std::ostringstream os;
    os << family_name(spec.family) << " d=" << spec.dim << " n=" << spec.count;
    switch (spec.family) {
        case Family::kRandom:
            os << " seed=" << spec.seed;
            break;
        case Family::kKronecker:
        case Family::kQuadratic:
            os << " alpha=";
            for (std::size_t i = 0; i < spec.alpha.size(); ++i)
                os << (i ? "," : "") << spec.alpha[i];
            break;
        case Family::kHalton:
            os << " bases=";
            for (std::size_t i = 0; i < spec.bases.size(); ++i)
                os << (i ? "," : "") << spec.bases[i];
            break;
        case Family::kClustered:
            os << " clusters=" << spec.clusters << " seed=" << spec.seed;
            break;
        case Family::kGrid:
            break;
    }
    return os.str();
}

inline void check_spec(const GeneratorSpec& spec) {
    if (spec.dim < 1) throw std::invalid_argument("generate: dim must be >= 1");
    if (spec.count < 1) throw std::invalid_argument("generate: count must be >= 1");
    switch (spec.family) {
        case Family::kKronecker:
            if (spec.alpha.size() != static_cast<std::size_t>(spec.dim))
                throw std::invalid_argument("generate: kronecker needs one alpha per dimension");
            break;
        case Family::kQuadratic:
            if (spec.dim != 1)
                throw std::invalid_argument("generate: quadratic family is one-dimensional");
            if (spec.alpha.size() != 1)
                throw std::invalid_argument("generate: quadratic needs a single alpha");
            break;
        case Family::kHalton: {
            if (spec.bases.size() != static_cast<std::size_t>(spec.dim))
                throw std::invalid_argument("generate: halton needs one base per dimension");
            for (int b : spec.bases)
                if (b < 2) throw std::invalid_argument("generate: halton bases must be >= 2");
            for (std::size_t i = 0; i < spec.bases.size(); ++i)
                for (std::size_t j = i + 1; j < spec.bases.size(); ++j)
                    if (std::gcd(spec.bases[i], spec.bases[j]) != 1)
                        throw std::invalid_argument("generate: halton bases must be pairwise coprime");
            break;
        }
        case Family::kClustered:
            if (spec.clusters < 1)
                throw std::invalid_argument("generate: clusters must be >= 1");
            break;
        case Family::kGrid:
        case Family::kRandom:
            break;
    }
}

inline std::size_t grid_side(int dim, std::size_t count) {
    if (dim == 1) return count;
    const auto m = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(count), 1.0 / dim)));
    for (std::size_t cand = (m > 1 ? m - 1 : 1); cand <= m + 1; ++cand) {
        std::size_t prod = 1;
        for (int j = 0; j < dim; ++j) prod *= cand;
        if (prod == count) return cand;
    }
    throw std::invalid_argument("generate: grid count must be a perfect d-th power");
}

}  // namespace detail

/// Generate the point set described by the spec.  Equal specs produce
/// bitwise-equal outputs, independent of evaluation order.
inline PointSet generate(const GeneratorSpec& spec) {
    detail::check_spec(spec);
    const int d = spec.dim;
    const std::size_t n = spec.count;
    PointSet ps;
    ps.dim = d;
    ps.label = detail::spec_label(spec);
    ps.coords.resize(n * static_cast<std::size_t>(d));

    auto set = [&](std::size_t i, int j, double v) {
        ps.coords[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)] =
            reduce_coordinate(v >= 1.0 ? 0.0 : v);
    };

    switch (spec.family) {
        case Family::kRandom:
            for (std::size_t i = 0; i < n; ++i)
                for (int j = 0; j < d; ++j)
                    set(i, j, uniform01(spec.seed, i, static_cast<std::uint64_t>(j)));
            break;
        case Family::kKronecker:
            for (std::size_t i = 0; i < n; ++i)
                for (int j = 0; j < d; ++j)
                    set(i, j, frac_times(spec.alpha[static_cast<std::size_t>(j)], i + 1));
            break;
        case Family::kQuadratic:
            for (std::size_t i = 0; i < n; ++i) {
                const unsigned long long k = i + 1;
                set(i, 0, frac_times(spec.alpha[0], k * k));
            }
            break;
        case Family::kGrid: {
            const std::size_t m = detail::grid_side(d, n);
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t rest = i;
                for (int j = d - 1; j >= 0; --j) {
                    set(i, j, static_cast<double>(rest % m) / static_cast<double>(m));
                    rest /= m;
                }
            }
            break;
        }
        case Family::kHalton:
            for (std::size_t i = 0; i < n; ++i)
                for (int j = 0; j < d; ++j)
                    set(i, j, radical_inverse(spec.bases[static_cast<std::size_t>(j)], i + 1));
            break;
        case Family::kClustered: {
            const auto k = static_cast<std::size_t>(spec.clusters);
            std::vector<double> centers(k * static_cast<std::size_t>(d));
            for (std::size_t c = 0; c < k; ++c)
                for (int j = 0; j < d; ++j)
                    centers[c * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)] =
                        uniform01(spec.seed, c, static_cast<std::uint64_t>(j));
            for (std::size_t i = 0; i < n; ++i)
                for (int j = 0; j < d; ++j)
                    set(i, j, centers[(i % k) * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)]);
            break;
        }
    }
    return ps;
}

}  // namespace ppc
