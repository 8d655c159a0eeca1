#include "report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace dcq::cli {

using nlohmann::json;

json report_shell(const AnalysisConfig& config) {
    return json{
        {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
        {"config", config_to_json(config)},
    };
}

json exponent_to_json(const CriticalExponent& exponent) {
    return json{
        {"s0", exponent.s0},
        {"residual", exponent.residual},
        {"bracket", {exponent.bracket_lo, exponent.bracket_hi}},
        {"iterations", exponent.iterations},
    };
}

json regime_to_json(const RegimeReport& regime) {
    json warnings = json::array();
    for (const auto& w : regime.rationality_warnings) {
        warnings.push_back(json{
            {"j", w.j},
            {"l", w.l},
            {"convergent", std::to_string(w.conv_num) + "/" + std::to_string(w.conv_den)},
            {"error", w.error},
            {"quality", w.quality},
        });
    }
    return json{
        {"weight_sum", regime.weight_sum},
        {"first_moment", regime.first_moment},
        {"second_moment", regime.second_moment},
        {"s0_gt_1", regime.s0_gt_1},
        {"s0_gt_2", regime.s0_gt_2},
        {"rationality_warnings", warnings},
        {"irrationality_suspect", regime.irrationality_suspect},
    };
}

json coefficients_to_json(const CoefficientTable& table) {
    return json{
        {"s0", table.s0},
        {"denominator", table.denominator},
        {"values", table.values},
        {"tail_constant", table.tail_constant},
        {"tail_is_exact", table.tail_is_exact},
    };
}

json limit_to_json(const LimitEstimate& estimate) {
    json out{
        {"value", estimate.value},
        {"truncation", estimate.truncation},
        {"heuristic", estimate.heuristic},
    };
    if (estimate.tail_bound) {
        out["tail_bound"] = *estimate.tail_bound;
    } else {
        out["tail_bound"] = nullptr;
    }
    return out;
}

json monte_carlo_to_json(const MonteCarloReport& report) {
    json summary = json::array();
    for (const auto& s : report.summary) {
        summary.push_back(json{
            {"n", s.n},
            {"mean", s.mean},
            {"median", s.median},
            {"q05", s.q05},
            {"q25", s.q25},
            {"q75", s.q75},
            {"q95", s.q95},
            {"mgf", s.mgf},
            {"mgf_fragile", s.mgf_fragile},
            {"median_gap", s.median_gap},
        });
    }
    return json{
        {"s0", report.s0},
        {"checkpoints", report.checkpoints},
        {"replicas", report.replicas},
        {"mgf_t", report.mgf_t},
        {"ratios", report.ratios},
        {"summary", summary},
        {"final_gaps", report.final_gaps},
    };
}

std::string csv_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

bool wants(const AnalysisConfig& config, const std::string& format) {
    for (const auto& f : config.formats) {
        if (f == format) return true;
    }
    return false;
}

std::filesystem::path prepare_out_dir(const AnalysisConfig& config) {
    std::filesystem::path dir(config.out_dir);
    if (!dir.empty()) std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

void write_report(const AnalysisConfig& config, const json& doc) {
    if (!wants(config, "json")) return;
    auto path = prepare_out_dir(config) / "report.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(errc::domain_error, "cannot write " + path.string());
    }
    out << doc.dump(2) << "\n";
}

void write_csv(const AnalysisConfig& config, const std::string& name, const std::string& header,
               const std::vector<std::vector<double>>& rows,
               const std::vector<std::int64_t>& index_column) {
    if (!wants(config, "csv")) return;
    auto path = prepare_out_dir(config) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(errc::domain_error, "cannot write " + path.string());
    }
    out << header << "\r\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << index_column[i];
        for (double x : rows[i]) {
            out << ',' << csv_number(x);
        }
        out << "\r\n";
    }
}

} // namespace dcq::cli
