#pragma once

#include <string>

#include <json.hpp>

#include "dcq/coefficients.hpp"
#include "dcq/exponent.hpp"
#include "dcq/montecarlo.hpp"

#include "config.hpp"

namespace dcq::cli {

inline constexpr const char* kToolName = "dcq";
inline constexpr const char* kToolVersion = "0.1.0";

/// Skeleton report: tool stamp plus the config echo every bundle carries.
nlohmann::json report_shell(const AnalysisConfig& config);

nlohmann::json exponent_to_json(const CriticalExponent& exponent);
nlohmann::json regime_to_json(const RegimeReport& regime);
nlohmann::json coefficients_to_json(const CoefficientTable& table);
nlohmann::json limit_to_json(const LimitEstimate& estimate);
nlohmann::json monte_carlo_to_json(const MonteCarloReport& report);

/// Formats one double with 17 significant digits (round-trip exact).
std::string csv_number(double x);

/// Writes `doc` to <out_dir>/report.json when formats include "json".
void write_report(const AnalysisConfig& config, const nlohmann::json& doc);

/// Writes RFC-4180 CSV (CRLF line endings) to <out_dir>/<name>.
void write_csv(const AnalysisConfig& config, const std::string& name,
               const std::string& header, const std::vector<std::vector<double>>& rows,
               const std::vector<std::int64_t>& index_column);

} // namespace dcq::cli
