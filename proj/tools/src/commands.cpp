#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

#include "dcq/domination.hpp"
#include "dcq/mgf.hpp"

#include "report.hpp"

namespace dcq::cli {

using nlohmann::json;

namespace {

struct Analysis {
    RecurrenceSpec spec;
    CriticalExponent exponent;
    RegimeReport regime;
};

Analysis analyze(const AnalysisConfig& config) {
    validate_config(config);
    RecurrenceSpec spec = build_spec(config);
    CriticalExponent exponent = solve_exponent(spec, config.root_tol);
    RegimeReport regime = regime_report(spec, exponent);
    return Analysis{std::move(spec), exponent, std::move(regime)};
}

void print_exponent(const Analysis& a) {
    std::printf("s0        = %.17g  (residual %.3g, %d iterations)\n", a.exponent.s0,
                a.exponent.residual, a.exponent.iterations);
    std::printf("bracket   = [%.17g, %.17g]\n", a.exponent.bracket_lo, a.exponent.bracket_hi);
    std::printf("moments   : sum b = %.17g, sum b p = %.17g, sum b p^2 = %.17g\n",
                a.regime.weight_sum, a.regime.first_moment, a.regime.second_moment);
    std::printf("regime    : s0 > 1? %s   s0 > 2? %s\n", a.regime.s0_gt_1 ? "yes" : "no",
                a.regime.s0_gt_2 ? "yes" : "no");
    for (const auto& w : a.regime.rationality_warnings) {
        std::printf("rational? : log p_%zu / log p_%zu ~ %lld/%lld (quality %.3g)\n", w.j, w.l,
                    static_cast<long long>(w.conv_num), static_cast<long long>(w.conv_den),
                    w.quality);
    }
    if (a.regime.irrationality_suspect) {
        std::printf("warning   : irrationality hypothesis looks unsatisfiable; the ratio "
                    "X_n/n^s0 may oscillate without a limit\n");
    }
}

} // namespace

int exit_code_for(const Error& error) noexcept {
    switch (error.code()) {
        case errc::parse_error:
            return kExitParse;
        case errc::internal_inconsistency:
            return kExitInternal;
        default:
            return kExitValidation;
    }
}

int cmd_solve(const AnalysisConfig& config) {
    Analysis a = analyze(config);
    print_exponent(a);
    json doc = report_shell(config);
    doc["exponent"] = exponent_to_json(a.exponent);
    doc["regime"] = regime_to_json(a.regime);
    write_report(config, doc);
    return kExitOk;
}

int cmd_trace(const AnalysisConfig& config) {
    Analysis a = analyze(config);
    Toll toll = build_toll(config);
    if (auto last = toll.max_index(); last && *last < config.horizon) {
        throw Error(errc::toll_index_out_of_range,
                    "toll provides indices up to " + std::to_string(*last) +
                        " but the horizon is " + std::to_string(config.horizon));
    }
    Trajectory traj = evaluate_dense(a.spec, toll, config.horizon);
    std::vector<std::int64_t> checkpoints =
        geometric_checkpoints(config.horizon, config.checkpoint_factor);

    std::vector<std::vector<double>> rows;
    rows.reserve(checkpoints.size());
    for (std::int64_t n : checkpoints) {
        rows.push_back({traj.at(n), traj.ratio(n, a.exponent.s0)});
    }
    write_csv(config, "trace.csv", "n,x_n,ratio", rows, checkpoints);

    double final_ratio = rows.back()[1];
    std::printf("trace     : %zu checkpoints up to N = %lld\n", checkpoints.size(),
                static_cast<long long>(config.horizon));
    std::printf("ratio(N)  = %.17g\n", final_ratio);

    json doc = report_shell(config);
    doc["exponent"] = exponent_to_json(a.exponent);
    doc["regime"] = regime_to_json(a.regime);
    doc["trace"] = json{{"checkpoints", checkpoints}, {"final_ratio", final_ratio}};
    write_report(config, doc);
    return kExitOk;
}

int cmd_coeffs(const AnalysisConfig& config) {
    Analysis a = analyze(config);
    CoefficientTable table = coefficient_table(a.spec, a.exponent.s0, config.truncation);
    print_exponent(a);
    std::printf("D         = %.17g\n", table.denominator);
    std::size_t shown = std::min<std::size_t>(table.values.size(), 8);
    for (std::size_t j = 0; j < shown; ++j) {
        std::printf("ell_%zu     = %.17g\n", j, table.values[j]);
    }
    if (shown < table.values.size()) {
        std::printf("...       (%zu more)\n", table.values.size() - shown);
    }
    std::printf("tail      = %.17g (%s)\n", table.tail_constant,
                table.tail_is_exact ? "exact" : "upper bound");

    json doc = report_shell(config);
    doc["exponent"] = exponent_to_json(a.exponent);
    doc["regime"] = regime_to_json(a.regime);
    doc["coefficients"] = coefficients_to_json(table);
    write_report(config, doc);
    return kExitOk;
}

int cmd_limit(const AnalysisConfig& config) {
    Analysis a = analyze(config);
    CoefficientTable table = coefficient_table(a.spec, a.exponent.s0, config.truncation);
    Toll toll = build_toll(config);
    LimitEstimate estimate = limit_estimate(a.spec, a.exponent.s0, toll, config.truncation,
                                            build_envelope(config));
    print_exponent(a);
    std::printf("limit     = %.17g  (J = %lld)\n", estimate.value,
                static_cast<long long>(estimate.truncation));
    if (estimate.tail_bound) {
        std::printf("tail bd   = %.17g\n", *estimate.tail_bound);
    } else {
        std::printf("tail bd   : not available (no envelope); estimate is heuristic\n");
    }

    json doc = report_shell(config);
    doc["exponent"] = exponent_to_json(a.exponent);
    doc["regime"] = regime_to_json(a.regime);
    doc["coefficients"] = coefficients_to_json(table);
    doc["limit"] = limit_to_json(estimate);
    write_report(config, doc);
    return kExitOk;
}

int cmd_mc(const AnalysisConfig& config) {
    Analysis a = analyze(config);
    DriverSpec driver = build_driver(config);

    json warnings = json::array();
    if (driver.kind() == "cauchy" && !(a.regime.first_moment > 1.0)) {
        const char* msg = "Cauchy driver with sum b_j p_j <= 1: almost-sure convergence is not "
                          "guaranteed; run proceeds flagged";
        std::fprintf(stderr, "warning: %s\n", msg);
        warnings.push_back(msg);
    }
    if (driver.kind() == "geometric-convolution" && !config.mgf_t.empty() && !a.regime.s0_gt_2) {
        const char* msg = "exponential-moment bound assumes s0 > 2 (sum b_j p_j^2 > 1); "
                          "reported bounds are not backed by the theory";
        std::fprintf(stderr, "warning: %s\n", msg);
        warnings.push_back(msg);
    }

    MonteCarloParams params;
    params.horizon = config.horizon;
    params.replicas = static_cast<std::size_t>(config.replicas);
    params.checkpoint_factor = config.checkpoint_factor;
    params.mgf_t = config.mgf_t;
    MonteCarloReport report = run_monte_carlo(a.spec, a.exponent.s0, driver, params);

    std::vector<std::vector<double>> rows;
    rows.reserve(report.summary.size());
    for (const auto& s : report.summary) {
        rows.push_back({s.q05, s.q25, s.median, s.q75, s.q95, s.mean});
    }
    write_csv(config, "mc.csv", "n,q05,q25,median,q75,q95,mean", rows, report.checkpoints);

    json doc = report_shell(config);
    doc["exponent"] = exponent_to_json(a.exponent);
    doc["regime"] = regime_to_json(a.regime);
    doc["monte_carlo"] = monte_carlo_to_json(report);
    doc["warnings"] = warnings;

    // Summability diagnostic on the replica-0 realization: partial sums of
    // sum |a_n| n^{-(s0+1)}, the quantity that must stay finite for the
    // ratio to converge almost surely.
    std::vector<double> toll0 = sample_toll(driver, config.horizon, 0);
    auto partials = summability_partial(toll0, a.exponent.s0, config.checkpoint_factor);
    json summability = json::array();
    for (const auto& [n, sum] : partials) {
        summability.push_back(json{{"n", n}, {"partial_sum", sum}});
    }
    doc["summability_replica0"] = summability;

    std::printf("mc        : R = %zu replicas to N = %lld, %zu checkpoints\n", report.replicas,
                static_cast<long long>(config.horizon), report.checkpoints.size());
    const CheckpointSummary& last = report.summary.back();
    std::printf("ratio(N)  : median %.17g, IQR [%.17g, %.17g]\n", last.median, last.q25, last.q75);

    // MGF diagnostics: empirical against the computable upper bound,
    // calibrated from one geometric toll variable via the exponential
    // shift. Only the geometric-convolution driver has that calibration.
    if (!config.mgf_t.empty() && driver.kind() == "geometric-convolution") {
        double q = std::get<GeometricConvolutionDriver>(driver.variant()).q;
        double radius = -std::log1p(-q);
        double rate = radius / 2.0;
        double shift = exp_shift(rate, geometric_mgf(q, rate));
        std::int64_t m_horizon = std::max<std::int64_t>(config.horizon, 100'000);
        double kernel_constant = estimate_kernel_constant(a.spec, a.exponent.s0, m_horizon);
        json mgf_section{{"rate", rate},
                         {"shift", shift},
                         {"kernel_constant", kernel_constant},
                         {"kernel_constant_horizon", m_horizon},
                         {"rows", json::array()}};
        for (std::size_t k = 0; k < report.checkpoints.size(); ++k) {
            for (std::size_t ti = 0; ti < config.mgf_t.size(); ++ti) {
                MgfBoundParams bp{kernel_constant, shift, rate, a.exponent.s0,
                                  report.checkpoints[k], config.mgf_t[ti]};
                double log_bound = mgf_upper_bound_log(bp);
                json row{{"n", report.checkpoints[k]},
                         {"t", config.mgf_t[ti]},
                         {"empirical", report.summary[k].mgf[ti]},
                         {"fragile", static_cast<bool>(report.summary[k].mgf_fragile[ti])},
                         {"log_bound", log_bound}};
                row["bound"] = log_bound < 700.0 ? json(std::exp(log_bound)) : json(nullptr);
                mgf_section["rows"].push_back(row);
                std::printf("mgf t=%-8g n=%-10lld empirical %.6g  bound %s (log %.6g)\n",
                            config.mgf_t[ti], static_cast<long long>(report.checkpoints[k]),
                            report.summary[k].mgf[ti],
                            log_bound < 700.0 ? csv_number(std::exp(log_bound)).c_str() : "inf",
                            log_bound);
            }
        }
        doc["mgf_bound"] = mgf_section;
    }

    write_report(config, doc);
    return kExitOk;
}

} // namespace dcq::cli
