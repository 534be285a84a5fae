#include <doctest.h>

#include <cmath>
#include <set>

#include "ppc/generators.hpp"
#include "ppc/torus.hpp"

using namespace ppc;

TEST_CASE("kronecker golden ratio first values") {
    GeneratorSpec spec;
    spec.family = Family::kKronecker;
    spec.dim = 1;
    spec.count = 3;
    spec.alpha = {(1.0 + std::sqrt(5.0)) / 2.0};
    const auto ps = generate(spec);
    CHECK(ps.coords[0] == doctest::Approx(0.6180339887).epsilon(1e-9));
    CHECK(ps.coords[1] == doctest::Approx(0.2360679774).epsilon(1e-9));
    CHECK(ps.coords[2] == doctest::Approx(0.8541019662).epsilon(1e-9));
}

TEST_CASE("grid in one dimension") {
    GeneratorSpec spec;
    spec.family = Family::kGrid;
    spec.count = 4;
    const auto ps = generate(spec);
    CHECK(ps.coords == std::vector<double>{0.0, 0.25, 0.5, 0.75});
}

TEST_CASE("grid requires a perfect d-th power") {
    GeneratorSpec spec;
    spec.family = Family::kGrid;
    spec.dim = 2;
    spec.count = 5;
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    spec.count = 9;
    const auto ps = generate(spec);
    CHECK(ps.size() == 9);
    CHECK(ps.point(4)[0] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("random generation is deterministic") {
    GeneratorSpec spec;
    spec.family = Family::kRandom;
    spec.dim = 2;
    spec.count = 100;
    spec.seed = 7;
    const auto a = generate(spec);
    const auto b = generate(spec);
    CHECK(a.coords == b.coords);
    spec.seed = 8;
    CHECK(generate(spec).coords != a.coords);
}

TEST_CASE("kronecker with alpha zero degenerates to the origin") {
    GeneratorSpec spec;
    spec.family = Family::kKronecker;
    spec.count = 10;
    spec.alpha = {0.0};
    for (double c : generate(spec).coords) CHECK(c == 0.0);
}

TEST_CASE("quadratic reduction is exact under integer shifts of alpha") {
    // {n^2 (alpha + 1)} = {n^2 alpha}; a naive double product fails this
    // around n ~ 1e5.
    const double alpha = std::sqrt(2.0) - 1.0;
    GeneratorSpec a, b;
    a.family = b.family = Family::kQuadratic;
    a.count = b.count = 200000;
    a.alpha = {alpha};
    b.alpha = {alpha + 1.0};
    const auto pa = generate(a);
    const auto pb = generate(b);
    for (std::size_t i : {std::size_t{0}, std::size_t{999}, std::size_t{99999}, std::size_t{199999}})
        CHECK(pa.coords[i] == pb.coords[i]);
}

TEST_CASE("quadratic matches direct arithmetic at small n") {
    const double alpha = 0.3141592653589793;
    GeneratorSpec spec;
    spec.family = Family::kQuadratic;
    spec.count = 50;
    spec.alpha = {alpha};
    const auto ps = generate(spec);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const double n = static_cast<double>(i + 1);
        const double direct = std::fmod(n * n * alpha, 1.0);
        CHECK(ps.coords[i] == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("quadratic rejects d != 1") {
    GeneratorSpec spec;
    spec.family = Family::kQuadratic;
    spec.dim = 2;
    spec.count = 4;
    spec.alpha = {0.5};
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
}

TEST_CASE("halton base-2 radical inverse") {
    GeneratorSpec spec;
    spec.family = Family::kHalton;
    spec.count = 4;
    spec.bases = {2};
    const auto ps = generate(spec);
    CHECK(ps.coords[0] == 0.5);
    CHECK(ps.coords[1] == 0.25);
    CHECK(ps.coords[2] == 0.75);
    CHECK(ps.coords[3] == 0.125);
}

TEST_CASE("halton rejects non-coprime bases") {
    GeneratorSpec spec;
    spec.family = Family::kHalton;
    spec.dim = 2;
    spec.count = 4;
    spec.bases = {2, 4};
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
}

TEST_CASE("clustered points live on at most k centers") {
    GeneratorSpec spec;
    spec.family = Family::kClustered;
    spec.dim = 2;
    spec.count = 200;
    spec.seed = 3;
    spec.clusters = 5;
    const auto ps = generate(spec);
    std::set<std::pair<double, double>> distinct;
    for (std::size_t i = 0; i < ps.size(); ++i)
        distinct.insert({ps.point(i)[0], ps.point(i)[1]});
    CHECK(distinct.size() <= 5);
}

TEST_CASE("all generator outputs pass validation") {
    std::vector<GeneratorSpec> specs(5);
    specs[0].family = Family::kRandom;
    specs[0].dim = 3;
    specs[0].count = 64;
    specs[1].family = Family::kKronecker;
    specs[1].dim = 2;
    specs[1].count = 64;
    specs[1].alpha = default_kronecker_alpha(2);
    specs[2].family = Family::kGrid;
    specs[2].dim = 2;
    specs[2].count = 64;
    specs[3].family = Family::kHalton;
    specs[3].dim = 2;
    specs[3].count = 64;
    specs[3].bases = {2, 3};
    specs[4].family = Family::kClustered;
    specs[4].count = 64;
    specs[4].clusters = 4;
    for (const auto& spec : specs) {
        const auto ps = generate(spec);
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            auto p = ps.point(i);
            rows.emplace_back(p.begin(), p.end());
        }
        const auto revalidated = validate_point_set(rows);
        CHECK(revalidated.coords == ps.coords);
    }
}
