#include <doctest.h>

#include <sstream>

#include "ppc/experiment.hpp"
#include "ppc/points_io.hpp"

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

}  // namespace

TEST_CASE("points file round trip is bitwise exact") {
    for (int dim : {1, 2, 3}) {
        const auto ps = random_points(dim, 137, 9000 + dim);
        std::stringstream buf;
        write_points(ps, buf);
        const auto back = read_points(buf);
        REQUIRE(back.dim == ps.dim);
        REQUIRE(back.size() == ps.size());
        for (std::size_t i = 0; i < ps.coords.size(); ++i)
            CHECK(back.coords[i] == ps.coords[i]);
    }
}

TEST_CASE("points file parsing errors") {
    {
        std::stringstream buf("# ppc-points d=1 n=3\n0.5\n0.25\n");
        CHECK_THROWS_WITH_AS(read_points(buf), doctest::Contains("does not match"),
                             std::runtime_error);
    }
    {
        std::stringstream buf("0.5\n");
        CHECK_THROWS_WITH_AS(read_points(buf), doctest::Contains("malformed header"),
                             std::runtime_error);
    }
    {
        std::stringstream buf("# ppc-points d=2 n=1\n0.5\n");
        CHECK_THROWS_AS(read_points(buf), std::runtime_error);
    }
    {
        std::stringstream buf("# ppc-points d=1 n=1\nnope\n");
        CHECK_THROWS_AS(read_points(buf), std::runtime_error);
    }
}

TEST_CASE("coordinate 1.0 reads back as 0.0") {
    std::stringstream buf("# ppc-points d=1 n=2\n1\n0.5\n");
    const auto ps = read_points(buf);
    CHECK(ps.coords[0] == 0.0);
    CHECK(ps.coords[1] == 0.5);
}

TEST_CASE("report is deterministic modulo wall clock") {
    const json cfg_json = {
        {"generator", {{"family", "random"}, {"dim", 1}, {"n", 500}}},
        {"analyses",
         {{{"kind", "paircorr"}, {"s", {0.5, 1.0}}},
          {{"kind", "certify"}, {"t", {1.0, 2.0}}},
          {{"kind", "discrepancy"}}}},
        {"seeds", {3, 4}},
    };
    const auto cfg = parse_config(cfg_json);
    const json a = strip_wall_clock(run_experiment(cfg));
    const json b = strip_wall_clock(run_experiment(cfg));
    CHECK(a == b);

    auto parallel_cfg = cfg;
    parallel_cfg.parallel = true;
    json c = strip_wall_clock(run_experiment(parallel_cfg));
    c["config"]["parallel"] = false;  // only the echo differs
    CHECK(a == c);
}

TEST_CASE("experiment report structure") {
    const json cfg_json = {
        {"generator", {{"family", "random"}, {"dim", 1}, {"n", 10000}}},
        {"analyses",
         {{{"kind", "paircorr"}, {"s", {0.5, 1.0, 2.0}}},
          {{"kind", "certify"}, {"t", {1.0, 2.0, 4.0}}}}},
        {"seeds", {1}},
    };
    const json report = run_experiment(parse_config(cfg_json));
    CHECK(report.at("tool_version") == kVersion);
    REQUIRE(report.at("runs").size() == 1);
    const auto& analyses = report["runs"][0].at("analyses");
    REQUIRE(analyses.size() == 2);
    CHECK(analyses[0].at("records").size() == 3);
    CHECK(analyses[1].at("records").size() == 3);
    for (const auto& a : analyses) CHECK(a.at("wall_clock_seconds").is_number());
    for (const auto& rec : analyses[0]["records"]) {
        CHECK(rec.at("s").is_number());
        CHECK(rec.at("normalized").is_number());
        CHECK(rec.at("target").is_number());
    }
    for (const auto& rec : analyses[1]["records"]) {
        CHECK(rec.at("verdict").is_string());
        CHECK(rec.at("iid_reference").is_number());
        CHECK(rec.at("constants_used").at("c").is_number());
    }
}

TEST_CASE("certify record for d >= 2 reports null iid reference") {
    const json cfg_json = {
        {"generator", {{"family", "random"}, {"dim", 2}, {"n", 400}}},
        {"analyses", {{{"kind", "certify"}, {"t", {2.0}}}}},
    };
    const json report = run_experiment(parse_config(cfg_json));
    CHECK(report["runs"][0]["analyses"][0]["records"][0].at("iid_reference").is_null());
}

TEST_CASE("analysis failures name the failing index") {
    const json cfg_json = {
        {"generator", {{"family", "grid"}, {"dim", 2}, {"n", 5}}},
        {"analyses", {{{"kind", "paircorr"}, {"s", {1.0}}}}},
    };
    // Grid generation itself rejects n = 5 in 2d.
    CHECK_THROWS_AS(run_experiment(parse_config(cfg_json)), std::invalid_argument);

    const json bad_analysis = {
        {"generator", {{"family", "random"}, {"dim", 2}, {"n", 16}}},
        {"analyses",
         {{{"kind", "paircorr"}, {"s", {1.0}}},
          {{"kind", "certify"}, {"t", {-1.0}}}}},
    };
    try {
        run_experiment(parse_config(bad_analysis));
        FAIL("expected ExperimentError");
    } catch (const ExperimentError& e) {
        CHECK(e.analysis_index == 1);
        CHECK(std::string(e.what()).find("analysis 1") != std::string::npos);
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(parse_config(json{{"generator", {{"family", "random"}, {"n", 10}}},
                                      {"analyses", json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config(json{{"generator", {{"family", "bogus"}, {"n", 10}}},
                                      {"analyses", {{{"kind", "discrepancy"}}}}}),
                    std::invalid_argument);
    const json cfg_json = {{"generator", {{"family", "random"}, {"n", 8}}},
                           {"analyses", {{{"kind", "nonsense"}}}}};
    CHECK_THROWS_AS(run_experiment(parse_config(cfg_json)), ExperimentError);
}

TEST_CASE("kronecker and halton defaults are filled in") {
    const auto k = detail::generator_from_json(
        json{{"family", "kronecker"}, {"dim", 2}, {"n", 10}});
    REQUIRE(k.alpha.size() == 2);
    CHECK(k.alpha[0] > 0.0);
    CHECK(k.alpha[0] != k.alpha[1]);
    const auto h = detail::generator_from_json(
        json{{"family", "halton"}, {"dim", 3}, {"n", 10}});
    CHECK(h.bases == std::vector<int>{2, 3, 5});
}
