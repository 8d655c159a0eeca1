#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

struct Overrides {
    std::string config_path;
    std::string out_dir;
    std::vector<double> mgf_t;
    std::int64_t horizon = -1;
    std::int64_t replicas = -1;
    std::int64_t truncation = -1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double checkpoint_factor = -1.0;
};

void add_common_options(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config_path, "JSON run configuration")->required();
    cmd->add_option("--out", o.out_dir, "output directory (overrides config)");
    cmd->add_option("--seed", o.seed, "PRNG seed (overrides config)")
        ->each([&o](const std::string&) { o.seed_set = true; });
    cmd->add_option("--horizon", o.horizon, "evaluation horizon N (overrides config)");
    cmd->add_option("--replicas", o.replicas, "Monte Carlo replica count (overrides config)");
    cmd->add_option("--trunc", o.truncation, "coefficient truncation J (overrides config)");
    cmd->add_option("--mgf", o.mgf_t, "MGF evaluation point(s) t (overrides config)");
    cmd->add_option("--checkpoint-factor", o.checkpoint_factor,
                    "geometric checkpoint spacing factor (overrides config)");
}

dcq::cli::AnalysisConfig effective_config(const Overrides& o) {
    dcq::cli::AnalysisConfig config = dcq::cli::load_config_file(o.config_path);
    if (!o.out_dir.empty()) config.out_dir = o.out_dir;
    if (o.horizon >= 0) config.horizon = o.horizon;
    if (o.replicas >= 0) config.replicas = o.replicas;
    if (o.truncation >= 0) config.truncation = o.truncation;
    if (o.seed_set) config.seed = o.seed;
    if (!o.mgf_t.empty()) config.mgf_t = o.mgf_t;
    if (o.checkpoint_factor > 0.0) config.checkpoint_factor = o.checkpoint_factor;
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"divide-and-conquer recurrence analyzer"};
    app.require_subcommand(1);

    Overrides o;
    CLI::App* solve = app.add_subcommand("solve", "critical exponent and regime report");
    CLI::App* trace = app.add_subcommand("trace", "trajectory and ratio trace to trace.csv");
    CLI::App* coeffs = app.add_subcommand("coeffs", "limit coefficient table");
    CLI::App* limit = app.add_subcommand("limit", "truncated limit estimate with tail bound");
    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo ratio experiment to mc.csv");
    for (CLI::App* cmd : {solve, trace, coeffs, limit, mc}) {
        add_common_options(cmd, o);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? dcq::cli::kExitOk : dcq::cli::kExitParse;
    }

    try {
        dcq::cli::AnalysisConfig config = effective_config(o);
        if (solve->parsed()) return dcq::cli::cmd_solve(config);
        if (trace->parsed()) return dcq::cli::cmd_trace(config);
        if (coeffs->parsed()) return dcq::cli::cmd_coeffs(config);
        if (limit->parsed()) return dcq::cli::cmd_limit(config);
        if (mc->parsed()) return dcq::cli::cmd_mc(config);
        return dcq::cli::kExitParse;
    } catch (const dcq::Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", dcq::errc_name(e.code()), e.what());
        return dcq::cli::exit_code_for(e);
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return dcq::cli::kExitParse;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return dcq::cli::kExitInternal;
    }
}
