#include "dcq/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "dcq/parallel.hpp"

namespace dcq {

std::vector<std::int64_t> geometric_checkpoints(std::int64_t horizon, double factor) {
    if (horizon < 1) {
        throw Error(errc::domain_error, "checkpoints need horizon >= 1");
    }
    if (!(factor > 1.0)) {
        throw Error(errc::domain_error, "checkpoint factor must exceed 1");
    }
    std::vector<std::int64_t> points;
    double x = static_cast<double>(horizon);
    while (x >= 1.0) {
        points.push_back(static_cast<std::int64_t>(x));
        x /= factor;
    }
    std::reverse(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

double quantile(std::vector<double> values, double level) {
    if (values.empty()) {
        throw Error(errc::empty_sample, "quantile of an empty sample");
    }
    std::sort(values.begin(), values.end());
    double pos = level * static_cast<double>(values.size() - 1);
    std::size_t idx = static_cast<std::size_t>(pos);
    if (idx + 1 >= values.size()) return values.back();
    double frac = pos - static_cast<double>(idx);
    return values[idx] * (1.0 - frac) + values[idx + 1] * frac;
}

MonteCarloReport run_monte_carlo(const RecurrenceSpec& spec, double s0, const DriverSpec& driver,
                                 const MonteCarloParams& params) {
    if (params.replicas < 1) {
        throw Error(errc::domain_error, "at least one replica required");
    }
    MonteCarloReport report;
    report.s0 = s0;
    report.checkpoints = geometric_checkpoints(params.horizon, params.checkpoint_factor);
    report.replicas = params.replicas;
    report.mgf_t = params.mgf_t;
    report.ratios.assign(params.replicas, {});

    const auto& checkpoints = report.checkpoints;
    parallel_for(0, static_cast<std::int64_t>(params.replicas), worker_count(params.threads),
                 [&](std::int64_t r) {
                     std::vector<double> toll_values =
                         sample_toll(driver, params.horizon, static_cast<std::uint64_t>(r));
                     Trajectory traj =
                         evaluate_dense(spec, Toll::dense(std::move(toll_values)), params.horizon);
                     std::vector<double>& row = report.ratios[static_cast<std::size_t>(r)];
                     row.reserve(checkpoints.size());
                     for (std::int64_t n : checkpoints) {
                         double ratio = traj.ratio(n, s0);
                         if (!std::isfinite(ratio)) {
                             throw Error(errc::internal_inconsistency,
                                         "non-finite ratio sample at n = " + std::to_string(n));
                         }
                         row.push_back(ratio);
                     }
                 });

    // Summaries are a pure reduction over the finished ratio matrix, single
    // threaded on purpose: the merge order is part of the determinism
    // contract.
    std::size_t k_count = checkpoints.size();
    report.summary.resize(k_count);
    std::vector<double> column(params.replicas);
    std::vector<double> gaps(params.replicas);
    for (std::size_t k = 0; k < k_count; ++k) {
        CheckpointSummary& s = report.summary[k];
        s.n = checkpoints[k];
        double sum = 0.0;
        for (std::size_t r = 0; r < params.replicas; ++r) {
            column[r] = report.ratios[r][k];
            sum += column[r];
        }
        s.mean = sum / static_cast<double>(params.replicas);
        s.median = quantile(column, 0.50);
        s.q05 = quantile(column, 0.05);
        s.q25 = quantile(column, 0.25);
        s.q75 = quantile(column, 0.75);
        s.q95 = quantile(column, 0.95);
        for (double t : params.mgf_t) {
            double total = 0.0;
            double largest = 0.0;
            for (std::size_t r = 0; r < params.replicas; ++r) {
                double term = std::exp(t * column[r]);
                total += term;
                largest = std::max(largest, term);
            }
            s.mgf.push_back(total / static_cast<double>(params.replicas));
            s.mgf_fragile.push_back(largest > 0.5 * total);
        }
        if (k > 0) {
            for (std::size_t r = 0; r < params.replicas; ++r) {
                gaps[r] = std::abs(report.ratios[r][k] - report.ratios[r][k - 1]);
            }
            s.median_gap = quantile(gaps, 0.50);
        }
    }
    if (k_count >= 2) {
        report.final_gaps.resize(params.replicas);
        for (std::size_t r = 0; r < params.replicas; ++r) {
            report.final_gaps[r] =
                std::abs(report.ratios[r][k_count - 1] - report.ratios[r][k_count - 2]);
        }
    }
    return report;
}

std::vector<std::pair<std::int64_t, double>> summability_partial(std::span<const double> toll,
                                                                 double s0, double factor) {
    if (toll.size() < 2) {
        throw Error(errc::domain_error, "summability needs indices up to N >= 1");
    }
    std::int64_t horizon = static_cast<std::int64_t>(toll.size()) - 1;
    std::vector<std::int64_t> checkpoints = geometric_checkpoints(horizon, factor);
    std::vector<std::pair<std::int64_t, double>> out;
    out.reserve(checkpoints.size());
    double acc = 0.0;
    std::int64_t n = 1;
    for (std::int64_t stop : checkpoints) {
        for (; n <= stop; ++n) {
            acc += std::abs(toll[static_cast<std::size_t>(n)]) /
                   std::pow(static_cast<double>(n), s0 + 1.0);
        }
        out.emplace_back(stop, acc);
    }
    return out;
}

} // namespace dcq
