// gmfq: q-exponents of generalized modular functions and the statistics of
// their prime values, computed from weight-2 Hecke eigenforms.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmfq/analysis.hpp"
#include "gmfq/arith.hpp"
#include "gmfq/eigenform.hpp"
#include "gmfq/errors.hpp"
#include "gmfq/exponents.hpp"
#include "gmfq/reports.hpp"

namespace {

using namespace gmfq;

struct CommonOptions {
    std::string cache_dir;
    int threads = 1;
    std::string backend = "auto";
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_format = true) {
    cmd->add_option("--cache-dir", opts.cache_dir, "Directory for the a_p cache (off when empty)");
    cmd->add_option("--threads", opts.threads, "Worker threads for point counting")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--backend", opts.backend, "Coefficient backend")
        ->check(CLI::IsMember({"auto", "eta", "curve"}));
    cmd->add_option("--out", opts.out, "Write output to this path instead of stdout");
    if (with_format) {
        cmd->add_option("--format", opts.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}));
    }
}

LoadOptions load_options(const CommonOptions& opts) {
    LoadOptions load;
    load.backend = opts.backend;
    load.cache_dir = opts.cache_dir;
    load.threads = opts.threads;
    return load;
}

void emit(const CommonOptions& opts, const std::string& content) {
    if (opts.out.empty()) {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << '\n';
    } else {
        write_text_file(opts.out, content);
    }
}

void emit_json(const CommonOptions& opts, const nlohmann::json& doc) {
    emit(opts, doc.dump(2) + "\n");
}

int run(int argc, char** argv) {
    CLI::App app{"q-exponents of generalized modular functions"};
    app.require_subcommand(1);

    // exponents
    auto* cmd_exponents = app.add_subcommand("exponents", "Exponent series c(n) of a form");
    std::string exp_level;
    std::int64_t exp_limit = 10000;
    CommonOptions exp_opts;
    exp_opts.format = "csv";
    cmd_exponents->add_option("--level", exp_level, "Catalogue level or coefficient CSV path")
        ->required();
    cmd_exponents->add_option("--limit", exp_limit, "Largest n")->check(CLI::PositiveNumber);
    add_common(cmd_exponents, exp_opts);

    // satotate
    auto* cmd_satotate = app.add_subcommand("satotate", "Sato-Tate histogram of B(p)");
    std::string st_level;
    std::int64_t st_xmax = 100000;
    int st_bins = 20;
    double st_tol = 0.05;
    CommonOptions st_opts;
    cmd_satotate->add_option("--level", st_level)->required();
    cmd_satotate->add_option("--xmax", st_xmax, "Largest prime")->check(CLI::Range(2, 1000000000));
    cmd_satotate->add_option("--bins", st_bins, "Histogram bins")->check(CLI::PositiveNumber);
    cmd_satotate->add_option("--tol", st_tol, "Cap on the sup discrepancy");
    add_common(cmd_satotate, st_opts);

    // signs
    auto* cmd_signs = app.add_subcommand("signs", "Sign density of c(p) for one form");
    std::string sg_level;
    std::int64_t sg_xmax = 100000;
    double sg_tol = 0.02, sg_zero_tol = 0.01;
    CommonOptions sg_opts;
    cmd_signs->add_option("--level", sg_level)->required();
    cmd_signs->add_option("--xmax", sg_xmax)->check(CLI::Range(2, 1000000000));
    cmd_signs->add_option("--tol", sg_tol, "Tolerance around 1/2 for the +/- ratios");
    cmd_signs->add_option("--zero-tol", sg_zero_tol, "Cap on the zero ratio");
    add_common(cmd_signs, sg_opts, false);

    // pair
    auto* cmd_pair = app.add_subcommand("pair", "Product-sign and joint statistics of two forms");
    std::vector<std::string> pr_levels;
    std::int64_t pr_xmax = 100000;
    double pr_tol = 0.03, pr_joint_tol = 0.05;
    CommonOptions pr_opts;
    cmd_pair->add_option("--levels", pr_levels, "Two catalogue levels, comma separated")
        ->required()
        ->delimiter(',')
        ->expected(2);
    cmd_pair->add_option("--xmax", pr_xmax)->check(CLI::Range(2, 1000000000));
    cmd_pair->add_option("--tol", pr_tol, "Tolerance around 1/2 for the product-sign ratios");
    cmd_pair->add_option("--joint-tol", pr_joint_tol, "Tolerance around 1/4 for quadrants");
    add_common(cmd_pair, pr_opts, false);

    // integrality
    auto* cmd_integrality =
        app.add_subcommand("integrality", "Nonzero integral exponents and their bounds");
    std::string in_level;
    std::int64_t in_limit = 10000;
    CommonOptions in_opts;
    cmd_integrality->add_option("--level", in_level)->required();
    cmd_integrality->add_option("--limit", in_limit)->check(CLI::PositiveNumber);
    add_common(cmd_integrality, in_opts, false);

    // firstsign
    auto* cmd_firstsign = app.add_subcommand("firstsign", "First sign changes of c(n)");
    std::string fs_level;
    std::int64_t fs_limit = 0; // 0: pick from the level
    CommonOptions fs_opts;
    cmd_firstsign->add_option("--level", fs_level)->required();
    cmd_firstsign->add_option("--limit", fs_limit, "Search bound (default from (4N)^{3/8})");
    add_common(cmd_firstsign, fs_opts, false);

    // cmscan
    auto* cmd_cmscan = app.add_subcommand("cmscan", "Vanishing primes and c(p) = 1/p on a CM form");
    std::string cm_level;
    std::int64_t cm_xmax = 100000;
    CommonOptions cm_opts;
    cmd_cmscan->add_option("--level", cm_level)->required();
    cmd_cmscan->add_option("--xmax", cm_xmax)->check(CLI::Range(2, 1000000000));
    add_common(cmd_cmscan, cm_opts, false);

    // catalogue
    auto* cmd_catalogue = app.add_subcommand("catalogue", "List the built-in forms");

    CLI11_PARSE(app, argc, argv);

    if (cmd_catalogue->parsed()) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& entry : catalogue()) {
            nlohmann::json factors = nlohmann::json::array();
            for (const auto& f : entry.eta) factors.push_back({f.m, f.r});
            list.push_back(nlohmann::json{{"level", entry.level},
                                          {"cm", entry.cm},
                                          {"eta", factors},
                                          {"conductor", entry.curve.conductor}});
        }
        std::cout << list.dump(2) << '\n';
        return 0;
    }

    if (cmd_exponents->parsed()) {
        PrimeTable table(std::max<std::int64_t>(exp_limit, 2));
        Eigenform form = load_eigenform(exp_level, exp_limit, table, load_options(exp_opts));
        ExponentSeries exponents = exponents_from_eigenform(form, exp_limit, table);
        if (exp_opts.format == "csv") {
            emit(exp_opts, exponents_csv(exponents));
        } else {
            nlohmann::json rows = nlohmann::json::array();
            for (std::int64_t n = 1; n <= exponents.bound(); ++n) {
                const BigRational& cn = exponents.at(n);
                rows.push_back(nlohmann::json{{"n", n},
                                              {"num", cn.get_num().get_str()},
                                              {"den", cn.get_den().get_str()}});
            }
            emit_json(exp_opts, nlohmann::json{{"kind", "exponents"},
                                               {"level", form.level},
                                               {"limit", exp_limit},
                                               {"exponents", rows}});
        }
        return 0;
    }

    if (cmd_satotate->parsed()) {
        PrimeTable table(std::max<std::int64_t>(st_xmax, 2));
        Eigenform form = load_eigenform(st_level, st_xmax, table, load_options(st_opts));
        SatoTateReport report = st_histogram(form, st_xmax, st_bins, table);
        if (st_opts.format == "csv") {
            emit(st_opts, histogram_bins_csv(report));
        } else {
            nlohmann::json doc = to_json(report);
            doc["tolerances"] = {{"discrepancy", st_tol}};
            doc["within_tol"] = report.discrepancy < st_tol;
            emit_json(st_opts, doc);
        }
        return 0;
    }

    if (cmd_signs->parsed()) {
        PrimeTable table(std::max<std::int64_t>(sg_xmax, 2));
        Eigenform form = load_eigenform(sg_level, sg_xmax, table, load_options(sg_opts));
        SignDensityReport report = sign_density(form, sg_xmax, table);
        nlohmann::json doc = to_json(report);
        doc["tolerances"] = {{"half", sg_tol}, {"zero", sg_zero_tol}};
        doc["within_tol"] = std::abs(report.ratio_pos() - 0.5) < sg_tol &&
                            std::abs(report.ratio_neg() - 0.5) < sg_tol &&
                            report.ratio_zero() < sg_zero_tol;
        emit_json(sg_opts, doc);
        return 0;
    }

    if (cmd_pair->parsed()) {
        PrimeTable table(std::max<std::int64_t>(pr_xmax, 2));
        Eigenform f1 = load_eigenform(pr_levels[0], pr_xmax, table, load_options(pr_opts));
        Eigenform f2 = load_eigenform(pr_levels[1], pr_xmax, table, load_options(pr_opts));
        SignDensityReport signs = pair_sign_density(f1, f2, pr_xmax, table);
        std::vector<JointDensity> quadrants;
        for (const auto& [i1, i2] :
             {std::pair{Interval{0, 1}, Interval{0, 1}}, {Interval{0, 1}, Interval{-1, 0}},
              {Interval{-1, 0}, Interval{0, 1}}, {Interval{-1, 0}, Interval{-1, 0}}}) {
            quadrants.push_back(pair_joint_histogram(f1, f2, pr_xmax, i1, i2, table));
        }
        nlohmann::json doc = pair_report_json(signs, quadrants);
        doc["tolerances"] = {{"half", pr_tol}, {"quadrant", pr_joint_tol}};
        bool ok = std::abs(signs.ratio_pos() - 0.5) < pr_tol &&
                  std::abs(signs.ratio_neg() - 0.5) < pr_tol;
        for (const auto& q : quadrants) ok = ok && std::abs(q.empirical - 0.25) < pr_joint_tol;
        doc["within_tol"] = ok;
        emit_json(pr_opts, doc);
        return 0;
    }

    if (cmd_integrality->parsed()) {
        PrimeTable table(std::max<std::int64_t>(in_limit, 2));
        Eigenform form = load_eigenform(in_level, in_limit, table, load_options(in_opts));
        ExponentSeries exponents = exponents_from_eigenform(form, in_limit, table);
        emit_json(in_opts, to_json(integrality_scan(exponents, in_limit, table)));
        return 0;
    }

    if (cmd_firstsign->parsed()) {
        PrimeTable probe(2);
        // Search bound: comfortably past (4N)^{3/8}.
        Eigenform head = load_eigenform(fs_level, 2, probe, load_options(fs_opts));
        std::int64_t limit = fs_limit;
        if (limit <= 0) {
            double b38 = std::pow(4.0 * static_cast<double>(head.level), 0.375);
            limit = std::max<std::int64_t>(64, 4 * static_cast<std::int64_t>(std::ceil(b38)));
        }
        PrimeTable table(std::max<std::int64_t>(limit, 2));
        Eigenform form = load_eigenform(fs_level, limit, table, load_options(fs_opts));
        ExponentSeries exponents = exponents_from_eigenform(form, limit, table);
        emit_json(fs_opts, to_json(first_sign_change(exponents, form.level, table)));
        return 0;
    }

    if (cmd_cmscan->parsed()) {
        PrimeTable table(std::max<std::int64_t>(cm_xmax, 2));
        Eigenform form = load_eigenform(cm_level, cm_xmax, table, load_options(cm_opts));
        auto rows = cm_value_scan(form, cm_xmax, table);
        emit_json(cm_opts, cm_report_json(form.level, cm_xmax, rows));
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gmfq::CatalogueError& e) {
        std::cerr << "catalogue error: " << e.what() << '\n';
        return 3;
    } catch (const gmfq::IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << '\n';
        return 4;
    } catch (const gmfq::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 5;
    } catch (const gmfq::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 1;
    }
}
