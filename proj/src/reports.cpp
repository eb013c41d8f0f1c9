#include "gmfq/reports.hpp"

#include <fstream>
#include <sstream>

#include "gmfq/errors.hpp"

namespace gmfq {

using nlohmann::json;

namespace {

json interval_json(const Interval& interval) {
    return json{{"lo", interval.lo}, {"hi", interval.hi}};
}

} // namespace

json to_json(const SatoTateReport& report) {
    json bins = json::array();
    for (const auto& bin : report.bins) {
        bins.push_back(json{{"lo", bin.lo},
                            {"hi", bin.hi},
                            {"count", bin.count},
                            {"empirical", bin.empirical},
                            {"expected", bin.expected}});
    }
    return json{{"kind", "satotate"},
                {"form", report.form},
                {"level", report.level},
                {"xmax", report.xmax},
                {"nbins", report.nbins},
                {"sample", report.sample},
                {"bins", bins},
                {"discrepancy", report.discrepancy},
                {"excluded_primes", report.excluded},
                {"density_kind", "natural_estimate"}};
}

json to_json(const SignDensityReport& report) {
    json counts{{"pos", report.n_pos}, {"neg", report.n_neg}, {"zero", report.n_zero}};
    json ratios{{"pos", report.ratio_pos()},
                {"neg", report.ratio_neg()},
                {"zero", report.ratio_zero()}};
    if (report.n_geq) {
        counts["geq"] = *report.n_geq;
        counts["leq"] = *report.n_leq;
        counts["disagree"] = *report.n_disagree;
        ratios["geq"] = report.pi_x ? static_cast<double>(*report.n_geq) / report.pi_x : 0.0;
        ratios["leq"] = report.pi_x ? static_cast<double>(*report.n_leq) / report.pi_x : 0.0;
        ratios["disagree"] =
            report.pi_x ? static_cast<double>(*report.n_disagree) / report.pi_x : 0.0;
    }
    return json{{"kind", report.levels.size() > 1 ? "pair_signs" : "signs"},
                {"levels", report.levels},
                {"xmax", report.xmax},
                {"pi_x", report.pi_x},
                {"counts", counts},
                {"ratios", ratios},
                {"excluded_primes", report.excluded},
                {"density_kind", "natural_estimate"}};
}

json to_json(const JointDensity& density) {
    return json{{"i1", interval_json(density.i1)},
                {"i2", interval_json(density.i2)},
                {"count", density.count},
                {"pi_x", density.pi_x},
                {"empirical", density.empirical},
                {"product", density.product}};
}

json to_json(const IntegralityReport& report) {
    json rows = json::array();
    for (const auto& [n, value] : report.integral_exponents) {
        rows.push_back(json{{"n", n}, {"c", value.get_str()}});
    }
    return json{{"kind", "integrality"},
                {"level", report.level},
                {"limit", report.limit},
                {"integral_exponents", rows},
                {"size_bound_violations", report.size_bound_violations},
                {"growth_bound_violations", report.growth_bound_violations}};
}

json to_json(const BoundReport& report) {
    json out{{"kind", "firstsign"},
             {"level", report.level},
             {"search_bound", report.search_bound},
             {"d2", report.d2},
             {"bound_38", report.bound_38},
             {"psi2", report.psi2},
             {"n0", report.n0},
             {"level_squarefree", report.level_squarefree},
             {"conclusive", report.d1.has_value()}};
    if (report.d1) {
        out["d1"] = *report.d1;
    } else {
        out["d1"] = nullptr;
    }
    return out;
}

json pair_report_json(const SignDensityReport& signs, const std::vector<JointDensity>& quadrants) {
    json quads = json::array();
    for (const auto& q : quadrants) quads.push_back(to_json(q));
    json out = to_json(signs);
    out["kind"] = "pair";
    out["quadrants"] = quads;
    return out;
}

json cm_report_json(std::int64_t level, std::int64_t xmax,
                    const std::vector<std::pair<std::int64_t, BigRational>>& rows) {
    json list = json::array();
    for (const auto& [p, cp] : rows) {
        list.push_back(json{{"p", p},
                            {"num", cp.get_num().get_str()},
                            {"den", cp.get_den().get_str()}});
    }
    return json{{"kind", "cmscan"},
                {"level", level},
                {"xmax", xmax},
                {"vanishing", list},
                {"count", rows.size()}};
}

std::string histogram_bins_csv(const SatoTateReport& report) {
    std::ostringstream out;
    out << "lo,hi,count,empirical,expected\n";
    out.precision(17);
    for (const auto& bin : report.bins) {
        out << bin.lo << ',' << bin.hi << ',' << bin.count << ',' << bin.empirical << ','
            << bin.expected << '\n';
    }
    return out.str();
}

std::string exponents_csv(const ExponentSeries& exponents) {
    std::ostringstream out;
    out << "n,num,den\n";
    for (std::int64_t n = 1; n <= exponents.bound(); ++n) {
        const BigRational& cn = exponents.at(n);
        out << n << ',' << cn.get_num().get_str() << ',' << cn.get_den().get_str() << '\n';
    }
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out) throw IoError("failed writing " + path.string());
}

} // namespace gmfq
