#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dcq/driver.hpp"
#include "dcq/recurrence.hpp"

namespace dcq {

/// Ascending geometric checkpoint grid ending exactly at N: N, N/f, N/f^2,
/// ... truncated below 1, deduplicated.
std::vector<std::int64_t> geometric_checkpoints(std::int64_t horizon, double factor = 2.0);

struct CheckpointSummary {
    std::int64_t n = 0;
    double mean = 0.0;
    double median = 0.0;
    double q05 = 0.0, q25 = 0.0, q75 = 0.0, q95 = 0.0;
    // Empirical MGF mean(exp(t * ratio)) per configured t, with a fragility
    // flag raised when a single replica contributes more than half the mean
    // (heavy-tail MGF estimates die exactly that way).
    std::vector<double> mgf;
    std::vector<bool> mgf_fragile;
    double median_gap = 0.0; // median over replicas of |ratio_k - ratio_{k-1}|; 0 at the first checkpoint
};

struct MonteCarloParams {
    std::int64_t horizon = 0;
    std::size_t replicas = 1;
    double checkpoint_factor = 2.0;
    std::vector<double> mgf_t; // evaluation points for the empirical MGF
    unsigned threads = 0;      // 0: auto (still capped by DCQ_THREADS)
};

struct MonteCarloReport {
    double s0 = 0.0;
    std::vector<std::int64_t> checkpoints;
    std::size_t replicas = 0;
    std::vector<double> mgf_t;
    std::vector<std::vector<double>> ratios; // [replica][checkpoint]: X_n / n^{s0}
    std::vector<CheckpointSummary> summary;  // one per checkpoint
    std::vector<double> final_gaps;          // per replica |ratio(n_K) - ratio(n_{K-1})|
};

/// Evaluates one trajectory per replica and records X_n/n^{s0} at the
/// checkpoints. Replica r draws all randomness from substreams keyed by
/// (seed, r, index): reports are bit-identical for any thread count.
MonteCarloReport run_monte_carlo(const RecurrenceSpec& spec, double s0, const DriverSpec& driver,
                                 const MonteCarloParams& params);

/// Partial sums of sum_{n=1}^{N} |a_n| / n^{s0+1} at geometric checkpoints;
/// almost-sure finiteness of the full series is exactly what the ratio
/// X_n/n^{s0} needs in order to converge.
std::vector<std::pair<std::int64_t, double>> summability_partial(std::span<const double> toll,
                                                                 double s0,
                                                                 double factor = 2.0);

/// Deterministic quantile (linear interpolation between order statistics).
double quantile(std::vector<double> sorted_values, double level);

} // namespace dcq
