#pragma once

#include <cstdint>
#include <vector>

#include "dcq/recurrence.hpp"

namespace dcq {

/// The solved critical exponent together with its certificate: a bracket
/// (lo, hi) with f(lo) > 1 > f(hi) that the solver never abandoned.
struct CriticalExponent {
    double s0 = 0.0;
    double residual = 0.0; // |f(s0) - 1|
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
};

/// One suspiciously good rational approximation of log(p_j)/log(p_l).
/// quality = |x - u/v| * v^2; a generic convergent of an irrational sits at
/// quality ~ 1, while a genuinely rational ratio measured in double
/// precision collapses to ~1e-16.
struct RationalityWarning {
    std::size_t j = 0;
    std::size_t l = 0;
    std::int64_t conv_num = 0;
    std::int64_t conv_den = 1;
    double error = 0.0;
    double quality = 0.0;
};

struct RegimeReport {
    double weight_sum = 0.0;    // sum b_j = f(0)
    double first_moment = 0.0;  // sum b_j p_j = f(1)
    double second_moment = 0.0; // sum b_j p_j^2 = f(2)
    bool s0_gt_1 = false;
    bool s0_gt_2 = false;
    std::vector<RationalityWarning> rationality_warnings;
    bool irrationality_suspect = false; // m == 1, or every pair looked rational
};

/// f(s) = sum_j b_j p_j^s, evaluated via exp(s ln p_j). Strictly decreasing,
/// f(0) = sum b_j, f -> 0 as s -> +inf.
double characteristic(const RecurrenceSpec& spec, double s);

/// f'(s) = sum_j b_j p_j^s ln p_j (always negative).
double characteristic_derivative(const RecurrenceSpec& spec, double s);

/// Solves f(s0) = 1 by bisection with Newton acceleration, never leaving the
/// bracket. On return |f(s0) - 1| <= tol and bracket_hi - bracket_lo <=
/// 64*tol. Throws errc::tolerance_unreachable for tol below ~1e-15, the
/// floating-point resolution of the residual.
CriticalExponent solve_exponent(const RecurrenceSpec& spec, double tol = 1e-13);

/// Moment sums, regime flags cross-checked against s0, and the
/// irrationality-hypothesis heuristic (continued fractions of all pairwise
/// log ratios). The heuristic only ever warns; irrationality is undecidable
/// from finite data.
RegimeReport regime_report(const RecurrenceSpec& spec, const CriticalExponent& exponent);

} // namespace dcq
