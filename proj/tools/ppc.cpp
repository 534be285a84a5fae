// Command-line front end: generation, pair-correlation statistics, Weyl
// spectra, bound certificates, Parseval checks, discrepancy, and config-file
// driven experiment runs.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppc/correlation.hpp"
#include "ppc/discrepancy.hpp"
#include "ppc/experiment.hpp"
#include "ppc/generators.hpp"
#include "ppc/kernels.hpp"
#include "ppc/points_io.hpp"
#include "ppc/spectrum.hpp"
#include "ppc/version.hpp"

namespace {

using ppc::json;

void emit(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open " + path);
        out << j.dump(2) << "\n";
    }
}

ppc::NormKind parse_norm(const std::string& name) {
    if (name == "l2") return ppc::NormKind::kEuclidean;
    if (name == "linf") return ppc::NormKind::kSup;
    throw std::runtime_error("unknown norm: " + name);
}

ppc::PairAlgorithm parse_algorithm(const std::string& name) {
    if (name == "cells") return ppc::PairAlgorithm::kCells;
    if (name == "brute") return ppc::PairAlgorithm::kBrute;
    throw std::runtime_error("unknown algorithm: " + name);
}

void write_curve_csv(const std::string& path, const std::string& header,
                     const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << header << "\n";
    char buf[40];
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", row[i]);
            if (i) out << ',';
            out << buf;
        }
        out << "\n";
    }
}

void emit_curves(const json& report, const std::string& prefix) {
    std::vector<std::vector<double>> paircorr_rows, certify_rows;
    for (const auto& run : report.at("runs"))
        for (const auto& a : run.at("analyses")) {
            const auto kind = a.at("kind").get<std::string>();
            if (kind == "paircorr")
                for (const auto& r : a.at("records"))
                    paircorr_rows.push_back({r.at("s").get<double>(),
                                             r.at("normalized").get<double>(),
                                             r.at("target").get<double>()});
            if (kind == "certify")
                for (const auto& r : a.at("records"))
                    certify_rows.push_back({r.at("t").get<double>(),
                                            r.at("functional").get<double>(),
                                            r.at("bound").get<double>()});
        }
    if (!paircorr_rows.empty())
        write_curve_csv(prefix + "_paircorr.csv", "s,normalized,target", paircorr_rows);
    if (!certify_rows.empty())
        write_curve_csv(prefix + "_certify.csv", "t,functional,bound", certify_rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pair-correlation statistics on the d-torus"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "generate a point set");
    std::string family = "random", out_path;
    int dim = 1, clusters = 1;
    std::size_t count = 1000;
    std::uint64_t seed = 0;
    std::vector<double> alpha;
    std::vector<int> bases;
    gen->add_option("--family", family, "random|kronecker|quadratic|grid|halton|clustered");
    gen->add_option("--dim", dim);
    gen->add_option("--n", count)->required();
    gen->add_option("--seed", seed);
    gen->add_option("--alpha", alpha)->delimiter(',');
    gen->add_option("--bases", bases)->delimiter(',');
    gen->add_option("--clusters", clusters);
    gen->add_option("--out", out_path, "points file path")->required();

    // paircorr
    auto* pc = app.add_subcommand("paircorr", "pair-correlation statistics");
    std::string pc_in, pc_norm = "l2", pc_algo = "cells", pc_json;
    std::vector<double> svals;
    double pc_alpha = 1.0;
    pc->add_option("--in", pc_in)->required();
    pc->add_option("--s", svals)->delimiter(',')->required();
    pc->add_option("--alpha", pc_alpha, "scaling exponent (1 = standard PPC)");
    pc->add_option("--norm", pc_norm, "l2|linf");
    pc->add_option("--algorithm", pc_algo, "brute|cells");
    pc->add_option("--json", pc_json, "report path (stdout if omitted)");

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "Weyl criterion scan");
    std::string sp_in, sp_json;
    double sp_lmax = 10.0;
    sp->add_option("--in", sp_in)->required();
    sp->add_option("--lmax", sp_lmax)->required();
    sp->add_option("--json", sp_json);

    // certify
    auto* ce = app.add_subcommand("certify", "exponential-sum bound certificates");
    std::string ce_in, ce_json;
    std::vector<double> tvals;
    double ce_alpha = 1.0;
    ce->add_option("--in", ce_in)->required();
    ce->add_option("--t", tvals)->delimiter(',')->required();
    ce->add_option("--alpha", ce_alpha);
    ce->add_option("--json", ce_json);

    // parseval
    auto* pv = app.add_subcommand("parseval", "Parseval identity check");
    std::string pv_in, pv_json;
    double pv_delta = 0.05, pv_tol = 0.0;
    pv->add_option("--in", pv_in)->required();
    pv->add_option("--delta", pv_delta)->required();
    pv->add_option("--tol", pv_tol, "truncation tolerance (default 0.01 N^2)");
    pv->add_option("--json", pv_json);

    // discrepancy
    auto* di = app.add_subcommand("discrepancy", "star discrepancy");
    std::string di_in, di_json;
    int di_resolution = 64;
    di->add_option("--in", di_in)->required();
    di->add_option("--resolution", di_resolution, "grid resolution for d >= 2 bounds");
    di->add_option("--json", di_json);

    // kernel
    auto* ke = app.add_subcommand("kernel", "print kernel and coefficient values");
    int ke_dim = 1;
    double ke_delta = 0.1;
    std::vector<long long> ke_ell;
    ke->add_option("--dim", ke_dim);
    ke->add_option("--delta", ke_delta);
    ke->add_option("--ell", ke_ell)->delimiter(',');

    // run
    auto* ru = app.add_subcommand("run", "run an experiment config file");
    std::string ru_config, ru_curves;
    bool ru_parallel = false;
    ru->add_option("config", ru_config, "JSON config file")->required();
    ru->add_option("--emit-curves", ru_curves, "CSV prefix for (s,normalized,target) tables");
    ru->add_flag("--parallel", ru_parallel, "run independent analyses concurrently");

    app.add_subcommand("version", "print tool version");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            ppc::GeneratorSpec spec;
            spec.family = ppc::family_from_name(family);
            spec.dim = dim;
            spec.count = count;
            spec.seed = seed;
            spec.alpha = alpha;
            spec.bases = bases;
            spec.clusters = clusters;
            if (spec.family == ppc::Family::kKronecker && spec.alpha.empty())
                spec.alpha = ppc::default_kronecker_alpha(dim);
            if (spec.family == ppc::Family::kHalton && spec.bases.empty())
                spec.bases = ppc::first_primes(dim);
            ppc::write_points(ppc::generate(spec), out_path);
        } else if (pc->parsed()) {
            const ppc::PointSet ps = ppc::read_points(pc_in);
            const auto norm = parse_norm(pc_norm);
            const auto algo = parse_algorithm(pc_algo);
            json records = json::array();
            for (double s : svals) {
                const ppc::PairCorrResult r =
                    pc_alpha == 1.0 ? ppc::ppc_statistic(ps, s, norm, algo)
                                    : ppc::weak_ppc_statistic(ps, s, pc_alpha, algo);
                records.push_back(ppc::to_json(r));
            }
            emit(records, pc_json);
        } else if (sp->parsed()) {
            const ppc::PointSet ps = ppc::read_points(sp_in);
            const ppc::WeylScan scan = ppc::weyl_criterion_scan(ps, sp_lmax);
            json j = ppc::to_json(scan.normalized);
            j["max"] = scan.max;
            emit(j, sp_json);
        } else if (ce->parsed()) {
            const ppc::PointSet ps = ppc::read_points(ce_in);
            json records = json::array();
            for (double t : tvals) {
                const ppc::BoundCertificate c =
                    ce_alpha == 1.0 ? ppc::ppc_functional(ps, t)
                                    : ppc::weak_functional(ps, t, ce_alpha);
                records.push_back(ppc::to_json(c));
            }
            emit(records, ce_json);
        } else if (pv->parsed()) {
            const ppc::PointSet ps = ppc::read_points(pv_in);
            const double n2 = static_cast<double>(ps.size()) * static_cast<double>(ps.size());
            const double tol = pv_tol > 0.0 ? pv_tol : 1e-2 * n2;
            const ppc::ParsevalReport r =
                ppc::parseval_check(ps, ppc::KernelParams{ps.dim, pv_delta}, tol);
            emit(ppc::to_json(r), pv_json);
        } else if (di->parsed()) {
            const ppc::PointSet ps = ppc::read_points(di_in);
            const ppc::DiscrepancyResult r = ps.dim == 1
                                                 ? ppc::star_discrepancy_1d(ps)
                                                 : ppc::star_discrepancy_box(ps, di_resolution);
            emit(ppc::to_json(r), di_json);
        } else if (ke->parsed()) {
            const ppc::KernelParams kp{ke_dim, ke_delta};
            ppc::validate_kernel_params(kp);
            if (ke_ell.empty()) ke_ell.assign(static_cast<std::size_t>(ke_dim), 1);
            if (ke_ell.size() != static_cast<std::size_t>(ke_dim))
                throw std::runtime_error("--ell must have one entry per dimension");
            double sq = 0.0;
            for (long long c : ke_ell) sq += static_cast<double>(c) * static_cast<double>(c);
            const double r = std::sqrt(sq);
            json j{{"dim", ke_dim},
                   {"delta", ke_delta},
                   {"ell", ke_ell},
                   {"g_at_0", ppc::box_kernel_radial(kp, 0.0)},
                   {"f_at_0", ppc::triangle_kernel_radial(kp, 0.0)},
                   {"g_hat", ppc::box_fourier_coeff_radial(kp, r)},
                   {"f_hat", std::pow(ppc::box_fourier_coeff_radial(kp, r), 2)},
                   {"multiplier_radius_half", ppc::multiplier_radius(kp, 0.5)}};
            emit(j, "");
        } else if (ru->parsed()) {
            std::ifstream in(ru_config);
            if (!in) throw std::runtime_error("cannot open config " + ru_config);
            json cfg_json = json::parse(in);
            ppc::ExperimentConfig cfg = ppc::parse_config(cfg_json);
            if (ru_parallel) cfg.parallel = true;
            const json report = ppc::run_experiment(cfg);
            emit(report, cfg.output);
            if (!ru_curves.empty()) emit_curves(report, ru_curves);
        } else {
            std::cout << "ppc " << ppc::kVersion << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
