#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ppc/discrepancy.hpp"
#include "ppc/generators.hpp"
#include "ppc/rng.hpp"

using namespace ppc;

namespace {

PointSet random_points(int dim, std::size_t n, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.family = Family::kRandom;
    spec.dim = dim;
    spec.count = n;
    spec.seed = seed;
    return generate(spec);
}

// Brute-force 1d star discrepancy: the supremum over [0, t) is attained as
// t approaches a point from either side.
double star_discrepancy_1d_brute(const PointSet& ps) {
    std::vector<double> x(ps.coords);
    std::sort(x.begin(), x.end());
    const double dn = static_cast<double>(x.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double below = static_cast<double>(k) / dn;       // count in [0, x_k)
        const double at = static_cast<double>(k + 1) / dn;      // count in [0, x_k]
        worst = std::max(worst, std::fabs(below - x[k]));
        worst = std::max(worst, std::fabs(at - x[k]));
    }
    return worst;
}

}  // namespace

TEST_CASE("star discrepancy of explicit 1d sets") {
    CHECK(star_discrepancy_1d(validate_point_set({{0.5}})).lower == doctest::Approx(0.5));
    CHECK(star_discrepancy_1d(validate_point_set({{0.0}})).lower == doctest::Approx(1.0));
    // Midpoint set attains the 1d optimum 1/(2N).
    std::vector<std::vector<double>> rows;
    for (int k = 1; k <= 10; ++k) rows.push_back({(2.0 * k - 1.0) / 20.0});
    const auto r = star_discrepancy_1d(validate_point_set(rows));
    CHECK(r.lower == doctest::Approx(0.05));
    CHECK(r.exact);
}

TEST_CASE("sorted formula matches brute force on random sets") {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + counter_hash(31, trial, 0) % 1000;
        const auto ps = random_points(1, n, 600 + trial);
        CHECK(star_discrepancy_1d(ps).lower ==
              doctest::Approx(star_discrepancy_1d_brute(ps)).epsilon(1e-12));
    }
}

TEST_CASE("star_discrepancy_1d rejects higher dimensions") {
    CHECK_THROWS_AS(star_discrepancy_1d(random_points(2, 4, 1)), std::invalid_argument);
}

TEST_CASE("box bounds sandwich the exact 1d value") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        const auto ps = random_points(1, 50 + trial, 700 + trial);
        const double exact = star_discrepancy_1d(ps).lower;
        for (int m : {8, 32, 128}) {
            const auto box = star_discrepancy_box(ps, m);
            CHECK(box.lower <= exact + 1e-12);
            CHECK(box.upper >= exact - 1e-12);
        }
    }
}

TEST_CASE("box lower bound matches corner enumeration on the 2x2 grid") {
    GeneratorSpec spec;
    spec.family = Family::kGrid;
    spec.dim = 2;
    spec.count = 4;
    const auto ps = generate(spec);
    const auto box = star_discrepancy_box(ps, 4);
    // Brute force over the 16 corner boxes with the same half-open rule.
    double expected = 0.0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            const double t1 = a / 4.0, t2 = b / 4.0;
            int count = 0;
            for (std::size_t i = 0; i < ps.size(); ++i)
                if (ps.point(i)[0] < t1 && ps.point(i)[1] < t2) ++count;
            expected = std::max(expected, std::fabs(count / 4.0 - t1 * t2));
        }
    CHECK(box.lower == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("all points at the origin in 2d") {
    PointSet ps;
    ps.dim = 2;
    ps.coords.assign(20, 0.0);
    const auto box = star_discrepancy_box(ps, 4);
    CHECK(box.lower == doctest::Approx(1.0 - 1.0 / 16.0));
    CHECK(box.upper == doctest::Approx(1.0));  // capped
}

TEST_CASE("refining the grid tightens both bounds") {
    const auto ps = random_points(2, 200, 42);
    const auto coarse = star_discrepancy_box(ps, 8);
    const auto fine = star_discrepancy_box(ps, 16);
    CHECK(fine.lower >= coarse.lower - 1e-12);
    CHECK(fine.upper <= coarse.upper + 1e-12);
}

TEST_CASE("random 1d discrepancy sits at the root-N scale") {
    const std::size_t n = 10000;
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const auto ps = random_points(1, n, seed);
        CHECK(star_discrepancy_1d(ps).lower <= 5.0 / std::sqrt(static_cast<double>(n)));
    }
}
