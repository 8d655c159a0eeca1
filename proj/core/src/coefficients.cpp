#include "dcq/coefficients.hpp"

#include <cmath>

namespace dcq {

namespace {

// The solved exponent must satisfy sum_j b_j p_j^{s0} = 1; every coefficient
// formula divides through by that identity, so enforce it up front.
void require_solved(const RecurrenceSpec& spec, double s0) {
    double unit = 0.0;
    for (const Branch& b : spec.branches()) {
        unit += b.weight * std::exp(s0 * b.ratio.log());
    }
    if (std::abs(unit - 1.0) > 1e-12) {
        throw Error(errc::internal_inconsistency,
                    "s0 does not satisfy sum b_j p_j^s0 = 1 to 1e-12; solve it first");
    }
}

bool all_ratios_at_most_half(const RecurrenceSpec& spec) {
    for (const Branch& b : spec.branches()) {
        if (2 * b.ratio.num() > b.ratio.den()) return false;
    }
    return true;
}

} // namespace

double weighted_log_denominator(const RecurrenceSpec& spec, double s0) {
    double d = 0.0;
    for (const Branch& b : spec.branches()) {
        d += b.weight * std::exp(s0 * b.ratio.log()) * b.ratio.log_inverse();
    }
    return d;
}

double ell_zero(const RecurrenceSpec& spec, double s0) {
    require_solved(spec, s0);
    double d = weighted_log_denominator(spec, s0);
    double sum = 0.0;
    for (const Branch& b : spec.branches()) {
        double p_s0 = std::exp(s0 * b.ratio.log());
        sum += b.weight * p_s0 * (1.0 / p_s0 - 1.0) / s0;
    }
    double general = sum / d;
    double reduced = (spec.weight_sum() - 1.0) / (s0 * d);
    if (std::abs(general - reduced) > 1e-12 * std::max(std::abs(general), std::abs(reduced))) {
        throw Error(errc::internal_inconsistency,
                    "ell_0 evaluations disagree beyond 1e-12 relative");
    }
    return reduced;
}

double ell(const RecurrenceSpec& spec, double s0, std::int64_t n0) {
    if (n0 < 1) {
        throw Error(errc::domain_error, "ell(n0) requires n0 >= 1; use ell_zero for n0 = 0");
    }
    require_solved(spec, s0);
    double d = weighted_log_denominator(spec, s0);
    double upper = std::pow(static_cast<double>(n0) + 1.0, -s0);
    double sum = 0.0;
    for (const Branch& b : spec.branches()) {
        // Lower integration bound max(n0, (n0+1) p_j), compared exactly:
        // (n0+1) num > n0 den decides which side wins.
        double lower_pow; // L^{-s0}
        __int128 lhs = static_cast<__int128>(n0 + 1) * b.ratio.num();
        __int128 rhs = static_cast<__int128>(n0) * b.ratio.den();
        if (lhs > rhs) {
            double lower = (static_cast<double>(n0) + 1.0) * b.ratio.value();
            lower_pow = std::pow(lower, -s0);
        } else {
            lower_pow = std::pow(static_cast<double>(n0), -s0);
        }
        double p_s0 = std::exp(s0 * b.ratio.log());
        sum += b.weight * p_s0 * (lower_pow - upper) / s0;
    }
    return sum / d;
}

CoefficientTable coefficient_table(const RecurrenceSpec& spec, double s0, std::int64_t truncation) {
    if (truncation < 0) {
        throw Error(errc::domain_error, "truncation index must be non-negative");
    }
    CoefficientTable table;
    table.s0 = s0;
    table.denominator = weighted_log_denominator(spec, s0);
    table.values.reserve(static_cast<std::size_t>(truncation) + 1);
    table.values.push_back(ell_zero(spec, s0));
    for (std::int64_t n0 = 1; n0 <= truncation; ++n0) {
        table.values.push_back(ell(spec, s0, n0));
    }
    // Telescoped tail of the simplified form; exact when every p <= 1/2 and
    // an upper bound otherwise (the general lower bound max(n0,(n0+1)p_j)
    // only shrinks each term).
    table.tail_constant =
        std::pow(static_cast<double>(truncation) + 1.0, -s0) / (s0 * table.denominator);
    table.tail_is_exact = all_ratios_at_most_half(spec);
    return table;
}

LimitEstimate limit_estimate(const RecurrenceSpec& spec, double s0, const Toll& toll,
                             std::int64_t truncation, std::optional<Envelope> envelope) {
    if (envelope && !(envelope->eta < s0)) {
        throw Error(errc::envelope_too_weak,
                    "envelope exponent eta >= s0: sum |a_n| n^{-(s0+1)} cannot be certified finite");
    }
    CoefficientTable table = coefficient_table(spec, s0, truncation);
    LimitEstimate estimate;
    estimate.truncation = truncation;
    for (std::int64_t j = 0; j <= truncation; ++j) {
        estimate.value += table.values[static_cast<std::size_t>(j)] * toll(j);
    }
    if (envelope) {
        // ell_j <= (1/(s0 D))(j^{-s0} - (j+1)^{-s0}) <= (1/D) j^{-(s0+1)}, so
        // sum_{j>J} c j^eta ell_j <= (c/D) sum_{j>J} j^{eta-s0-1}, bounded by
        // the integral of t^{eta-s0-1} from J.
        double d = table.denominator;
        double gap = s0 - envelope->eta;
        double tail;
        if (truncation >= 1) {
            tail = envelope->c * std::pow(static_cast<double>(truncation), -gap) / (d * gap);
        } else {
            tail = envelope->c * (1.0 + 1.0 / gap) / d; // j = 1 term plus integral from 1
        }
        estimate.tail_bound = tail;
    } else {
        estimate.heuristic = true;
    }
    return estimate;
}

double empirical_ell(const RecurrenceSpec& spec, double s0, std::int64_t j, std::int64_t horizon) {
    if (horizon < 20 || j >= horizon / 10) {
        throw Error(errc::domain_error, "empirical_ell needs horizon well beyond the impulse index");
    }
    KernelColumn column = kernel_column(spec, j, horizon);
    // Geometric sample of the decade window [N/10, N]. A half-decade window
    // is narrower than the dominant oscillation quasi-period of K^j_n/n^{s0}
    // (for (1/2,1/3) the near-relation 2^19 ~ 3^12 puts it around 13 in
    // ln n), which leaves the window mean wobbling instead of settling; one
    // full decade damps it enough for the estimate to improve with N.
    constexpr int kSamples = 128;
    double lo = static_cast<double>(horizon) / 10.0;
    double ratio_step = std::pow(10.0, 1.0 / (kSamples - 1.0));
    double acc = 0.0;
    std::int64_t taken = 0;
    std::int64_t prev = -1;
    double point = lo;
    for (int i = 0; i < kSamples; ++i, point *= ratio_step) {
        std::int64_t n = std::min(horizon, static_cast<std::int64_t>(std::llround(point)));
        if (n <= prev) continue;
        prev = n;
        acc += column.at(n) / std::pow(static_cast<double>(n), s0);
        ++taken;
    }
    return acc / static_cast<double>(taken);
}

} // namespace dcq
