#include "dcq/mgf.hpp"

#include <cmath>

namespace dcq {

double mgf_upper_bound_log(const MgfBoundParams& params) {
    if (!(params.kernel_constant > 0.0) || !(params.shift >= 0.0) || !(params.rate > 0.0) ||
        !(params.s0 > 0.0) || params.horizon < 0) {
        throw Error(errc::domain_error, "invalid MGF bound parameters");
    }
    double log_bound = 0.0;
    for (std::int64_t j = 1; j <= params.horizon + 1; ++j) {
        log_bound += std::pow(static_cast<double>(j), -params.s0);
    }
    log_bound *= params.kernel_constant * params.shift;

    double scaled_t = params.t / params.rate;
    for (std::int64_t j = 0; j <= params.horizon; ++j) {
        double base = 1.0 - scaled_t / std::pow(static_cast<double>(j) + 1.0, params.s0);
        if (!(base > 0.0)) {
            throw Error(errc::out_of_validity_region,
                        "t is outside the bound's validity region (t < rate)");
        }
        log_bound -= static_cast<double>(j) * std::log(base);
    }
    return log_bound;
}

double mgf_upper_bound(const MgfBoundParams& params) {
    return std::exp(mgf_upper_bound_log(params));
}

double estimate_kernel_constant(const RecurrenceSpec& spec, double s0, std::int64_t horizon) {
    if (horizon < 1) {
        throw Error(errc::domain_error, "kernel constant estimation needs horizon >= 1");
    }
    KernelColumn column = kernel_column(spec, 0, horizon);
    double max_ratio = 0.0; // max K0_n / n^{s0} over n >= 1
    double max_inverse = 1.0; // max (j+1)^{s0} / K0_j over j >= 0; j = 0 gives 1
    for (std::int64_t n = 1; n <= horizon; ++n) {
        double pow_n = std::pow(static_cast<double>(n), s0);
        double k = column.at(n);
        max_ratio = std::max(max_ratio, k / pow_n);
        max_inverse = std::max(max_inverse, std::pow(static_cast<double>(n) + 1.0, s0) / k);
    }
    return max_ratio * max_inverse;
}

} // namespace dcq
