#pragma once

// Experiment orchestration: a config document describes one generator and a
// list of analyses; the run produces a JSON report that echoes every
// parameter actually used.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <future>
#include <thread>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppc/correlation.hpp"
#include "ppc/discrepancy.hpp"
#include "ppc/generators.hpp"
#include "ppc/kernels.hpp"
#include "ppc/spectrum.hpp"
#include "ppc/torus.hpp"
#include "ppc/version.hpp"

namespace ppc {

using json = nlohmann::json;

inline json to_json(const PairCorrResult& r) {
    return {{"s", r.s},
            {"alpha", r.alpha},
            {"norm", norm_name(r.norm)},
            {"count", r.count},
            {"normalized", r.normalized},
            {"target", r.target}};
}

inline json to_json(const BoundCertificate& c) {
    json j{{"t", c.t},
           {"alpha", c.alpha},
           {"cutoff_used", c.cutoff_used},
           {"functional", c.functional},
           {"raw", c.raw},
           {"bound", c.bound},
           {"verdict", verdict_name(c.verdict)},
           {"constants_used", {{"c", c.c_constant}}}};
    j["iid_reference"] = std::isnan(c.iid_reference) ? json() : json(c.iid_reference);
    return j;
}

inline json to_json(const ParsevalReport& r) {
    return {{"lhs", r.lhs},
            {"rhs", r.rhs},
            {"tail_bound", r.tail_bound},
            {"gap", r.gap},
            {"cutoff", r.cutoff}};
}

inline json to_json(const DiscrepancyResult& r) {
    return {{"n", r.n}, {"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact}};
}

inline json to_json(const WeylSpectrum& s, std::size_t max_entries = 0) {
    json entries = json::array();
    std::size_t emitted = 0;
    for (const auto& [ell, value] : s.entries) {
        if (max_entries && emitted >= max_entries) break;
        entries.push_back({{"ell", ell}, {"value", value}});
        ++emitted;
    }
    return {{"dim", s.dim},
            {"n", s.n},
            {"cutoff", s.cutoff},
            {"symmetry", "both signs stored"},
            {"entries", entries}};
}

struct ExperimentConfig {
    GeneratorSpec generator;
    std::vector<json> analyses;          // each {"kind": ..., parameters...}
    std::vector<std::uint64_t> seeds;    // ensemble repeats; empty = generator seed
    std::string output;                  // report path ("" = stdout)
    bool parallel = false;
};

struct ExperimentError : std::runtime_error {
    std::size_t analysis_index;
    ExperimentError(std::size_t index, const std::string& what)
        : std::runtime_error("analysis " + std::to_string(index) + " failed: " + what),
          analysis_index(index) {}
};

namespace detail {

inline GeneratorSpec generator_from_json(const json& j) {
    GeneratorSpec spec;
    spec.family = family_from_name(j.at("family").get<std::string>());
    spec.dim = j.value("dim", 1);
    spec.count = j.at("n").get<std::size_t>();
    spec.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("alpha")) spec.alpha = j.at("alpha").get<std::vector<double>>();
    if (j.contains("bases")) spec.bases = j.at("bases").get<std::vector<int>>();
    spec.clusters = j.value("clusters", 1);
    if (spec.family == Family::kKronecker && spec.alpha.empty())
        spec.alpha = default_kronecker_alpha(spec.dim);
    if (spec.family == Family::kHalton && spec.bases.empty())
        spec.bases = first_primes(spec.dim);
    return spec;
}

inline json generator_to_json(const GeneratorSpec& spec) {
    json j{{"family", family_name(spec.family)},
           {"dim", spec.dim},
           {"n", spec.count},
           {"seed", spec.seed}};
    if (!spec.alpha.empty()) j["alpha"] = spec.alpha;
    if (!spec.bases.empty()) j["bases"] = spec.bases;
    if (spec.family == Family::kClustered) j["clusters"] = spec.clusters;
    return j;
}

inline NormKind norm_from_json(const json& j) {
    const auto name = j.value("norm", std::string("l2"));
    if (name == "l2") return NormKind::kEuclidean;
    if (name == "linf") return NormKind::kSup;
    throw std::invalid_argument("unknown norm: " + name);
}

inline PairAlgorithm algorithm_from_json(const json& j) {
    const auto name = j.value("algorithm", std::string("cells"));
    if (name == "cells") return PairAlgorithm::kCells;
    if (name == "brute") return PairAlgorithm::kBrute;
    throw std::invalid_argument("unknown algorithm: " + name);
}

/// Runs one analysis spec against a point set; returns the records plus the
/// echoed parameters (defaults filled in).
inline json run_analysis(const PointSet& ps, const json& spec) {
    const auto kind = spec.at("kind").get<std::string>();
    json out{{"kind", kind}};
    json records = json::array();
    if (kind == "paircorr") {
        const auto svals = spec.at("s").get<std::vector<double>>();
        const double alpha = spec.value("alpha", 1.0);
        const NormKind norm = norm_from_json(spec);
        const PairAlgorithm algo = algorithm_from_json(spec);
        out["s"] = svals;
        out["alpha"] = alpha;
        out["norm"] = norm_name(norm);
        for (double s : svals) {
            const PairCorrResult r = alpha == 1.0
                                         ? ppc_statistic(ps, s, norm, algo)
                                         : weak_ppc_statistic(ps, s, alpha, algo);
            records.push_back(to_json(r));
        }
        if (svals.size() >= 2) out["s_grid_gap_ratio"] = s_grid_gap_ratio(svals);
    } else if (kind == "certify") {
        const auto tvals = spec.at("t").get<std::vector<double>>();
        const double alpha = spec.value("alpha", 1.0);
        out["t"] = tvals;
        out["alpha"] = alpha;
        for (double t : tvals) {
            const BoundCertificate c =
                alpha == 1.0 ? ppc_functional(ps, t)
                             : weak_functional(ps, t, alpha, spec.value("c_alpha", 1.0));
            records.push_back(to_json(c));
        }
    } else if (kind == "spectrum") {
        const double lmax = spec.at("lmax").get<double>();
        out["lmax"] = lmax;
        const WeylScan scan = weyl_criterion_scan(ps, lmax);
        json entry = to_json(scan.normalized, spec.value("max_entries", std::size_t{0}));
        entry["max"] = scan.max;
        records.push_back(std::move(entry));
    } else if (kind == "parseval") {
        const double delta = spec.at("delta").get<double>();
        const double tol = spec.value("tol", 1e-2 * static_cast<double>(ps.size()) *
                                                 static_cast<double>(ps.size()));
        out["delta"] = delta;
        out["tol"] = tol;
        records.push_back(to_json(parseval_check(ps, KernelParams{ps.dim, delta}, tol)));
    } else if (kind == "discrepancy") {
        const int resolution = spec.value("resolution", 64);
        out["resolution"] = resolution;
        if (ps.dim == 1)
            records.push_back(to_json(star_discrepancy_1d(ps)));
        else
            records.push_back(to_json(star_discrepancy_box(ps, resolution)));
    } else if (kind == "smoothed") {
        const double delta = spec.at("delta").get<double>();
        out["delta"] = delta;
        const KernelStatResult r = smoothed_pair_statistic(ps, delta);
        records.push_back({{"delta", r.delta}, {"value", r.value}});
    } else {
        throw std::invalid_argument("unknown analysis kind: " + kind);
    }
    out["records"] = std::move(records);
    return out;
}

inline int worker_cap() {
    if (const char* env = std::getenv("PPC_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace detail

inline ExperimentConfig parse_config(const json& j) {
    ExperimentConfig cfg;
    cfg.generator = detail::generator_from_json(j.at("generator"));
    for (const auto& a : j.at("analyses")) cfg.analyses.push_back(a);
    if (cfg.analyses.empty())
        throw std::invalid_argument("config: at least one analysis is required");
    if (j.contains("seeds")) cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    cfg.output = j.value("output", std::string{});
    cfg.parallel = j.value("parallel", false);
    return cfg;
}

/// Execute the generator, then each analysis in configured order, once per
/// seed.  Deterministic given the config; failures surface the analysis
/// index.  Wall-clock fields are the only nondeterministic part of the
/// report.
inline json run_experiment(const ExperimentConfig& cfg) {
    json report;
    report["tool_version"] = kVersion;
    json config_echo{{"generator", detail::generator_to_json(cfg.generator)},
                     {"analyses", cfg.analyses},
                     {"parallel", cfg.parallel}};
    if (!cfg.seeds.empty()) config_echo["seeds"] = cfg.seeds;
    report["config"] = std::move(config_echo);

    std::vector<std::uint64_t> seeds =
        cfg.seeds.empty() ? std::vector<std::uint64_t>{cfg.generator.seed} : cfg.seeds;
    json runs = json::array();
    for (std::uint64_t seed : seeds) {
        GeneratorSpec spec = cfg.generator;
        spec.seed = seed;
        PointSet ps = generate(spec);
        json run{{"seed", seed}, {"label", ps.label}};
        json analyses = json::array();

        auto timed = [&](std::size_t index) -> json {
            const auto start = std::chrono::steady_clock::now();
            json result;
            try {
                result = detail::run_analysis(ps, cfg.analyses[index]);
            } catch (const std::exception& e) {
                throw ExperimentError(index, e.what());
            }
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;
            result["wall_clock_seconds"] = elapsed.count();
            return result;
        };

        if (cfg.parallel && cfg.analyses.size() > 1) {
            const int cap = detail::worker_cap();
            std::vector<std::future<json>> futures(cfg.analyses.size());
            std::size_t launched = 0, collected = 0;
            std::vector<json> results(cfg.analyses.size());
            while (collected < cfg.analyses.size()) {
                while (launched < cfg.analyses.size() &&
                       launched - collected < static_cast<std::size_t>(cap)) {
                    futures[launched] =
                        std::async(std::launch::async, timed, launched);
                    ++launched;
                }
                results[collected] = futures[collected].get();
                ++collected;
            }
            for (auto& r : results) analyses.push_back(std::move(r));
        } else {
            for (std::size_t i = 0; i < cfg.analyses.size(); ++i)
                analyses.push_back(timed(i));
        }
        run["analyses"] = std::move(analyses);
        runs.push_back(std::move(run));
    }
    report["runs"] = std::move(runs);
    return report;
}

/// Strip wall-clock fields, leaving the deterministic part of a report.
inline json strip_wall_clock(json report) {
    if (report.contains("runs"))
        for (auto& run : report["runs"])
            for (auto& a : run["analyses"]) a.erase("wall_clock_seconds");
    return report;
}

}  // namespace ppc
