#pragma once

#include <cstdint>

#include "dcq/recurrence.hpp"

namespace dcq {

/// Inputs of the exponential-moment bound for the ratio |X_n|/n^{s0} under
/// an n-fold-convolution toll: a kernel-ratio constant M, the
/// exponential-shift pair (a, rate) that dominates one toll summand, the
/// solved exponent, the horizon, and the evaluation point t. Gamma laws are
/// parametrized by RATE throughout, so Exp(rate)^{*n} = Gamma(n, rate) and
/// each product factor is the Gamma MGF at t scaled by (j+1)^{-s0};
/// validity is t < rate.
struct MgfBoundParams {
    double kernel_constant = 1.0; // M
    double shift = 0.0;           // a >= 0
    double rate = 1.0;            // alpha > 0
    double s0 = 1.0;
    std::int64_t horizon = 0; // n
    double t = 0.0;
};

/// log of mgf_upper_bound; the natural working form, since the bound
/// overflows double range long before it stops being informative.
double mgf_upper_bound_log(const MgfBoundParams& params);

/// exp(M a sum_{j=1}^{n+1} j^{-s0}) * prod_{j=0}^{n} (1 - (t/rate)/(j+1)^{s0})^{-j}.
/// Throws errc::out_of_validity_region when any product factor's base is
/// not positive (t >= rate).
double mgf_upper_bound(const MgfBoundParams& params);

/// Empirical stand-in for the kernel-ratio constant:
/// M = max_{1<=n<=N} K0_n/n^{s0} * max_{0<=j<=N} (j+1)^{s0}/K0_j,
/// from a single kernel column. Bounds only indices up to N.
double estimate_kernel_constant(const RecurrenceSpec& spec, double s0, std::int64_t horizon);

} // namespace dcq
