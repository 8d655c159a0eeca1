#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dcq/recurrence.hpp"

namespace dcq {

/// ell_0..ell_J plus the closed-form tail constant. tail_is_exact marks the
/// all-p <= 1/2 case where the tail telescopes exactly; otherwise
/// tail_constant is an upper bound on the true tail sum.
struct CoefficientTable {
    double s0 = 0.0;
    double denominator = 0.0; // D = sum b_j p_j^{s0} ln(1/p_j)
    std::vector<double> values;
    double tail_constant = 0.0;
    bool tail_is_exact = false;
};

/// User-certified decay guarantee |a_j| <= c * j^eta for j >= 1.
struct Envelope {
    double c = 0.0;
    double eta = 0.0;
};

struct LimitEstimate {
    double value = 0.0;          // sum_{j<=J} ell_j a_j
    std::int64_t truncation = 0; // J
    std::optional<double> tail_bound;
    bool heuristic = false; // no envelope supplied: truncation error unquantified
};

/// D = sum_j b_j p_j^{s0} ln(1/p_j). Positive for any valid spec.
double weighted_log_denominator(const RecurrenceSpec& spec, double s0);

/// ell_0 = (1/D) sum_j b_j p_j^{s0} (p_j^{-s0} - 1)/s0, cross-evaluated
/// against the reduction (sum b_j - 1)/(s0 D); the two must agree to 1e-12
/// relative or the solved s0 is inconsistent with the spec.
double ell_zero(const RecurrenceSpec& spec, double s0);

/// ell_{n0} for n0 >= 1: the closed form of
/// (1/D) sum_j b_j p_j^{s0} int_{max(n0,(n0+1)p_j)}^{n0+1} t^{-(s0+1)} dt.
/// When every p_j <= 1/2 the lower bound is always n0 and the sum collapses
/// to (1/(s0 D)) (n0^{-s0} - (n0+1)^{-s0}).
double ell(const RecurrenceSpec& spec, double s0, std::int64_t n0);

CoefficientTable coefficient_table(const RecurrenceSpec& spec, double s0, std::int64_t truncation);

/// Truncated limit sum_{j<=J} ell_j a_j with a tail bound derived from the
/// envelope via ell_j <= (1/D) j^{-(s0+1)} and integral comparison. Throws
/// errc::envelope_too_weak when eta >= s0 (the summability hypothesis cannot
/// be certified). Without an envelope the estimate is flagged heuristic.
LimitEstimate limit_estimate(const RecurrenceSpec& spec, double s0, const Toll& toll,
                             std::int64_t truncation, std::optional<Envelope> envelope = {});

/// Brute-force estimate of ell_j: the average of K^j_n / n^{s0} over a
/// geometric sample of n in [N/10, N]. Window averaging damps the residual
/// oscillation of the pointwise ratio; no convergence rate is guaranteed,
/// so this is a diagnostic, not a substitute for the closed form.
double empirical_ell(const RecurrenceSpec& spec, double s0, std::int64_t j, std::int64_t horizon);

} // namespace dcq
