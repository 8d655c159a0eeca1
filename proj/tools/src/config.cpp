#include "config.hpp"

#include <fstream>

namespace dcq::cli {

using nlohmann::json;

AnalysisConfig config_from_json(const json& doc) {
    AnalysisConfig config;
    for (const auto& entry : doc.at("branches")) {
        config.branches.push_back(
            BranchConfig{entry.at("b").get<double>(), entry.at("p").get<std::string>()});
    }
    if (doc.contains("toll")) {
        const json& toll = doc.at("toll");
        config.toll.kind = toll.at("kind").get<std::string>();
        if (config.toll.kind == "impulse") {
            config.toll.j = toll.at("j").get<std::int64_t>();
        } else if (config.toll.kind == "prefix") {
            config.toll.n0 = toll.at("n0").get<std::int64_t>();
        } else if (config.toll.kind == "constant") {
            config.toll.v = toll.at("v").get<double>();
        } else if (config.toll.kind == "file") {
            config.toll.path = toll.at("path").get<std::string>();
        } else if (config.toll.kind == "driver") {
            config.toll.variant = toll.at("variant").get<std::string>();
            if (config.toll.variant == "uniform") {
                config.toll.lo = toll.at("lo").get<double>();
                config.toll.hi = toll.at("hi").get<double>();
            } else if (config.toll.variant == "bernoulli" ||
                       config.toll.variant == "geometric-convolution") {
                config.toll.q = toll.at("q").get<double>();
            } else if (config.toll.variant == "shifted-exponential") {
                config.toll.rate = toll.at("rate").get<double>();
                config.toll.shift = toll.value("shift", 0.0);
            }
            // "cauchy" carries no parameters
        }
    }
    config.horizon = doc.value("horizon", config.horizon);
    config.truncation = doc.value("truncation", config.truncation);
    config.replicas = doc.value("replicas", config.replicas);
    config.seed = doc.value("seed", config.seed);
    if (doc.contains("tolerances")) {
        config.root_tol = doc.at("tolerances").value("root_tol", config.root_tol);
        config.report_tol = doc.at("tolerances").value("report_tol", config.report_tol);
    }
    if (doc.contains("envelope") && !doc.at("envelope").is_null()) {
        config.envelope = EnvelopeConfig{doc.at("envelope").at("c").get<double>(),
                                         doc.at("envelope").at("eta").get<double>()};
    }
    if (doc.contains("mgf_t")) {
        config.mgf_t = doc.at("mgf_t").get<std::vector<double>>();
    }
    config.checkpoint_factor = doc.value("checkpoint_factor", config.checkpoint_factor);
    if (doc.contains("output")) {
        config.out_dir = doc.at("output").value("dir", config.out_dir);
        if (doc.at("output").contains("formats")) {
            config.formats = doc.at("output").at("formats").get<std::vector<std::string>>();
        }
    }
    return config;
}

json config_to_json(const AnalysisConfig& config) {
    json branches = json::array();
    for (const auto& b : config.branches) {
        branches.push_back(json{{"b", b.b}, {"p", b.p}});
    }
    json toll{{"kind", config.toll.kind}};
    if (config.toll.kind == "impulse") {
        toll["j"] = config.toll.j;
    } else if (config.toll.kind == "prefix") {
        toll["n0"] = config.toll.n0;
    } else if (config.toll.kind == "constant") {
        toll["v"] = config.toll.v;
    } else if (config.toll.kind == "file") {
        toll["path"] = config.toll.path;
    } else if (config.toll.kind == "driver") {
        toll["variant"] = config.toll.variant;
        if (config.toll.variant == "uniform") {
            toll["lo"] = config.toll.lo;
            toll["hi"] = config.toll.hi;
        } else if (config.toll.variant == "bernoulli" ||
                   config.toll.variant == "geometric-convolution") {
            toll["q"] = config.toll.q;
        } else if (config.toll.variant == "shifted-exponential") {
            toll["rate"] = config.toll.rate;
            toll["shift"] = config.toll.shift;
        }
    }
    json doc{
        {"branches", branches},
        {"toll", toll},
        {"horizon", config.horizon},
        {"truncation", config.truncation},
        {"replicas", config.replicas},
        {"seed", config.seed},
        {"tolerances", {{"root_tol", config.root_tol}, {"report_tol", config.report_tol}}},
        {"mgf_t", config.mgf_t},
        {"checkpoint_factor", config.checkpoint_factor},
        {"output", {{"dir", config.out_dir}, {"formats", config.formats}}},
    };
    if (config.envelope) {
        doc["envelope"] = json{{"c", config.envelope->c}, {"eta", config.envelope->eta}};
    }
    return doc;
}

AnalysisConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::parse_error, "cannot open config file '" + path + "'");
    }
    json doc = json::parse(in); // throws json::parse_error on bad JSON
    return config_from_json(doc);
}

RecurrenceSpec build_spec(const AnalysisConfig& config) {
    std::vector<Branch> branches;
    branches.reserve(config.branches.size());
    for (const auto& b : config.branches) {
        branches.push_back(Branch{b.b, Ratio::parse(b.p)});
    }
    return RecurrenceSpec::validate(std::move(branches));
}

namespace {

std::vector<double> read_toll_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::parse_error, "cannot open toll file '" + path + "'");
    }
    std::vector<double> values;
    double x;
    while (in >> x) values.push_back(x);
    if (values.empty()) {
        throw Error(errc::domain_error, "toll file '" + path + "' holds no values");
    }
    return values;
}

} // namespace

Toll build_toll(const AnalysisConfig& config) {
    const TollConfig& t = config.toll;
    if (t.kind == "impulse") return Toll::impulse(t.j);
    if (t.kind == "prefix") return Toll::prefix(t.n0);
    if (t.kind == "constant") return Toll::constant(t.v);
    if (t.kind == "file") return Toll::dense(read_toll_file(t.path));
    if (t.kind == "driver") {
        return Toll::dense(sample_toll(build_driver(config), config.horizon, 0));
    }
    throw Error(errc::domain_error, "unknown toll kind '" + t.kind + "'");
}

DriverSpec build_driver(const AnalysisConfig& config) {
    const TollConfig& t = config.toll;
    if (t.kind != "driver") {
        throw Error(errc::domain_error, "this command needs a driver toll");
    }
    if (t.variant == "uniform") {
        return DriverSpec(UniformDriver{t.lo, t.hi}, config.seed);
    }
    if (t.variant == "bernoulli") {
        return DriverSpec(BernoulliDriver{t.q}, config.seed);
    }
    if (t.variant == "shifted-exponential") {
        return DriverSpec(ShiftedExponentialDriver{t.rate, t.shift}, config.seed);
    }
    if (t.variant == "cauchy") {
        return DriverSpec(CauchyDriver{}, config.seed);
    }
    if (t.variant == "geometric-convolution") {
        return DriverSpec(GeometricConvolutionDriver{t.q}, config.seed);
    }
    throw Error(errc::domain_error, "unknown driver variant '" + t.variant + "'");
}

std::optional<Envelope> build_envelope(const AnalysisConfig& config) {
    if (!config.envelope) return std::nullopt;
    return Envelope{config.envelope->c, config.envelope->eta};
}

void validate_config(const AnalysisConfig& config) {
    if (config.horizon < 1) {
        throw Error(errc::domain_error, "horizon must be >= 1");
    }
    if (config.truncation < 0) {
        throw Error(errc::domain_error, "truncation must be >= 0");
    }
    if (config.replicas < 1) {
        throw Error(errc::domain_error, "replicas must be >= 1");
    }
    if (!(config.root_tol > 0.0)) {
        throw Error(errc::domain_error, "root_tol must be positive");
    }
    if (!(config.checkpoint_factor > 1.0)) {
        throw Error(errc::domain_error, "checkpoint factor must exceed 1");
    }
    for (const auto& f : config.formats) {
        if (f != "json" && f != "csv") {
            throw Error(errc::domain_error, "unknown output format '" + f + "'");
        }
    }
}

} // namespace dcq::cli
