#include "dcq/driver.hpp"

#include <cmath>

#include "dcq/samplers.hpp"

namespace dcq {

DriverSpec::DriverSpec(Variant variant, std::uint64_t seed)
    : variant_(std::move(variant)), seed_(seed) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, UniformDriver>) {
                if (!(v.lo <= v.hi)) {
                    throw Error(errc::domain_error, "uniform driver needs lo <= hi");
                }
            } else if constexpr (std::is_same_v<T, BernoulliDriver>) {
                if (!(v.q >= 0.0) || !(v.q <= 1.0)) {
                    throw Error(errc::domain_error, "bernoulli q must lie in [0,1]");
                }
            } else if constexpr (std::is_same_v<T, ShiftedExponentialDriver>) {
                if (!(v.rate > 0.0)) {
                    throw Error(errc::domain_error, "shifted-exponential rate must be positive");
                }
            } else if constexpr (std::is_same_v<T, GeometricConvolutionDriver>) {
                if (!(v.q > 0.0) || !(v.q < 1.0)) {
                    throw Error(errc::domain_error,
                                "geometric-convolution q must lie strictly in (0,1)");
                }
            }
        },
        variant_);
}

bool DriverSpec::bounded_mean() const noexcept {
    return std::holds_alternative<UniformDriver>(variant_) ||
           std::holds_alternative<BernoulliDriver>(variant_) ||
           std::holds_alternative<ShiftedExponentialDriver>(variant_);
}

std::string DriverSpec::kind() const {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, UniformDriver>) return "uniform";
            if constexpr (std::is_same_v<T, BernoulliDriver>) return "bernoulli";
            if constexpr (std::is_same_v<T, ShiftedExponentialDriver>) return "shifted-exponential";
            if constexpr (std::is_same_v<T, CauchyDriver>) return "cauchy";
            if constexpr (std::is_same_v<T, GeometricConvolutionDriver>)
                return "geometric-convolution";
        },
        variant_);
}

std::vector<double> sample_toll(const DriverSpec& driver, std::int64_t horizon,
                                std::uint64_t replica) {
    if (horizon < 0) {
        throw Error(errc::domain_error, "horizon must be non-negative");
    }
    std::vector<double> values(static_cast<std::size_t>(horizon) + 1);
    for (std::int64_t n = 0; n <= horizon; ++n) {
        SubstreamRng rng(driver.seed(), replica, static_cast<std::uint64_t>(n));
        values[static_cast<std::size_t>(n)] = std::visit(
            [&](const auto& v) -> double {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, UniformDriver>) {
                    return v.lo + (v.hi - v.lo) * rng.next_unit();
                } else if constexpr (std::is_same_v<T, BernoulliDriver>) {
                    return rng.next_unit() < v.q ? 1.0 : 0.0;
                } else if constexpr (std::is_same_v<T, ShiftedExponentialDriver>) {
                    return v.shift + sample_exponential(rng, v.rate);
                } else if constexpr (std::is_same_v<T, CauchyDriver>) {
                    return sample_cauchy(rng);
                } else {
                    return static_cast<double>(sample_geometric_convolution(rng, n, v.q));
                }
            },
            driver.variant());
    }
    return values;
}

double geometric_mean_value(double q) {
    return (1.0 - q) / q;
}

double geometric_mgf(double q, double t) {
    double radius = -std::log1p(-q); // ln(1/(1-q))
    if (!(t < radius)) {
        throw Error(errc::out_of_validity_region,
                    "geometric MGF diverges at t >= ln(1/(1-q))");
    }
    return q / (1.0 - (1.0 - q) * std::exp(t));
}

} // namespace dcq
