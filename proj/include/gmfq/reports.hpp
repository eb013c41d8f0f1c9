#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmfq/analysis.hpp"
#include "gmfq/exponents.hpp"

namespace gmfq {

// JSON field names are part of the external interface; they stay stable
// (xmax, counts, ratios, bins, discrepancy, d1, d2, bound_38, psi2, n0).
// nlohmann keeps object keys sorted, so dumps are byte-reproducible.

nlohmann::json to_json(const SatoTateReport& report);
nlohmann::json to_json(const SignDensityReport& report);
nlohmann::json to_json(const JointDensity& density);
nlohmann::json to_json(const IntegralityReport& report);
nlohmann::json to_json(const BoundReport& report);

/// Pair analysis bundle: product-sign report, the four joint quadrants and
/// the disagreement ratio in one document.
nlohmann::json pair_report_json(const SignDensityReport& signs,
                                const std::vector<JointDensity>& quadrants);

/// CM scan document: level, xmax and the (p, c(p)) rows.
nlohmann::json cm_report_json(std::int64_t level, std::int64_t xmax,
                              const std::vector<std::pair<std::int64_t, BigRational>>& rows);

std::string histogram_bins_csv(const SatoTateReport& report);

/// Exponent rows "n,num,den" for n = 1..bound, lowest terms.
std::string exponents_csv(const ExponentSeries& exponents);

void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace gmfq
