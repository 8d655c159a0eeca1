#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dcq {

/// The shift that makes X stochastically dominated by Exp(alpha) + a:
/// a = ln(E e^{alpha X}) / alpha. Requires a positive finite MGF value.
double exp_shift(double alpha, double mgf_value);

struct DominationCheck {
    std::size_t sample_size = 0;
    std::size_t grid_size = 0;
    std::size_t violations = 0; // grid points with excess above the slack
    double max_excess = 0.0;    // max over grid of P_hat(X >= t) - P(Y + a >= t)
    double dkw_slack = 0.0;     // sqrt(ln(2/delta) / (2 n))
    bool pass = false;
};

/// Tests the empirical survival of X against the exact survival of
/// Exp(alpha) + a on the grid: pass iff the worst excess stays within the
/// DKW band at the given confidence. A sound domination passes with
/// probability >= confidence; a false one fails once the sample resolves
/// the gap.
DominationCheck check_domination(std::span<const double> samples_x, double alpha, double a,
                                 std::span<const double> grid, double confidence = 0.99);

/// Evenly spaced sample quantiles, the natural test grid: it concentrates
/// points where the sample actually has mass.
std::vector<double> default_domination_grid(std::span<const double> samples,
                                            std::size_t points = 256);

} // namespace dcq
