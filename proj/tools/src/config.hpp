#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcq/coefficients.hpp"
#include "dcq/driver.hpp"
#include "dcq/recurrence.hpp"
#include "dcq/toll.hpp"

namespace dcq::cli {

struct BranchConfig {
    double b = 0.0;
    std::string p; // exact rational or finite decimal, kept verbatim
    bool operator==(const BranchConfig&) const = default;
};

// toll.kind selects the source: impulse(j) | prefix(n0) | constant(v) |
// file(path) | driver(variant ...).
struct TollConfig {
    std::string kind = "constant";
    std::int64_t j = 0;
    std::int64_t n0 = 0;
    double v = 1.0;
    std::string path;
    std::string variant; // uniform | bernoulli | shifted-exponential | cauchy | geometric-convolution
    double lo = 0.0;
    double hi = 1.0;
    double q = 0.5;
    double rate = 1.0;
    double shift = 0.0;
    bool operator==(const TollConfig&) const = default;
};

struct EnvelopeConfig {
    double c = 0.0;
    double eta = 0.0;
    bool operator==(const EnvelopeConfig&) const = default;
};

/// One run, one JSON document. CLI flags may override the scalar fields.
struct AnalysisConfig {
    std::vector<BranchConfig> branches;
    TollConfig toll;
    std::int64_t horizon = 1'000'000;
    std::int64_t truncation = 64;
    std::int64_t replicas = 100;
    std::uint64_t seed = 1;
    double root_tol = 1e-13;
    double report_tol = 1e-9;
    std::optional<EnvelopeConfig> envelope;
    std::vector<double> mgf_t;
    double checkpoint_factor = 2.0;
    std::string out_dir = ".";
    std::vector<std::string> formats = {"json", "csv"};

    bool operator==(const AnalysisConfig&) const = default;
};

/// Structural JSON -> config. Type and shape problems throw
/// nlohmann::json::exception (CLI exit 1); semantic range checks live in
/// the builders below (exit 2).
AnalysisConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const AnalysisConfig& config);
AnalysisConfig load_config_file(const std::string& path);

/// Semantic builders; throw dcq::Error on violations.
RecurrenceSpec build_spec(const AnalysisConfig& config);
Toll build_toll(const AnalysisConfig& config);              // any kind; drivers realize replica 0
DriverSpec build_driver(const AnalysisConfig& config);      // requires toll.kind == "driver"
std::optional<Envelope> build_envelope(const AnalysisConfig& config);
void validate_config(const AnalysisConfig& config);         // horizon >= 1, formats known, ...

} // namespace dcq::cli
