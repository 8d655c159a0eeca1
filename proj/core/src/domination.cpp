#include "dcq/domination.hpp"

#include <algorithm>
#include <cmath>

#include "dcq/error.hpp"

namespace dcq {

double exp_shift(double alpha, double mgf_value) {
    if (!(alpha > 0.0)) {
        throw Error(errc::domain_error, "exp_shift needs alpha > 0");
    }
    if (!(mgf_value > 0.0) || !std::isfinite(mgf_value)) {
        throw Error(errc::domain_error, "exp_shift needs a positive finite MGF value");
    }
    return std::log(mgf_value) / alpha;
}

DominationCheck check_domination(std::span<const double> samples_x, double alpha, double a,
                                 std::span<const double> grid, double confidence) {
    if (samples_x.empty()) {
        throw Error(errc::empty_sample, "domination check needs samples");
    }
    if (grid.empty()) {
        throw Error(errc::empty_sample, "domination check needs a test grid");
    }
    if (!(confidence > 0.0) || !(confidence < 1.0)) {
        throw Error(errc::domain_error, "confidence must lie in (0,1)");
    }
    std::vector<double> sorted(samples_x.begin(), samples_x.end());
    std::sort(sorted.begin(), sorted.end());
    double n = static_cast<double>(sorted.size());
    double delta = 1.0 - confidence;
    double slack = std::sqrt(std::log(2.0 / delta) / (2.0 * n));

    DominationCheck check;
    check.sample_size = sorted.size();
    check.grid_size = grid.size();
    check.dkw_slack = slack;
    for (double t : grid) {
        // P_hat(X >= t): fraction of samples at or above t.
        auto it = std::lower_bound(sorted.begin(), sorted.end(), t);
        double survival_x = static_cast<double>(sorted.end() - it) / n;
        double survival_y = t <= a ? 1.0 : std::exp(-alpha * (t - a));
        double excess = survival_x - survival_y;
        if (excess > check.max_excess) check.max_excess = excess;
        if (excess > slack) ++check.violations;
    }
    check.pass = check.violations == 0;
    return check;
}

std::vector<double> default_domination_grid(std::span<const double> samples, std::size_t points) {
    if (samples.empty()) {
        throw Error(errc::empty_sample, "grid construction needs samples");
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    points = std::max<std::size_t>(2, points);
    std::vector<double> grid;
    grid.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        double pos = static_cast<double>(i) * static_cast<double>(sorted.size() - 1) /
                     static_cast<double>(points - 1);
        grid.push_back(sorted[static_cast<std::size_t>(pos)]);
    }
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

} // namespace dcq
