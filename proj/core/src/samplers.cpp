#include "dcq/samplers.hpp"

#include <cmath>

#include "dcq/error.hpp"

namespace dcq {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double sample_normal(SubstreamRng& rng) {
    for (;;) {
        double u = 2.0 * rng.next_unit_open() - 1.0;
        double v = 2.0 * rng.next_unit_open() - 1.0;
        double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
}

double sample_exponential(SubstreamRng& rng, double rate) {
    if (!(rate > 0.0)) {
        throw Error(errc::domain_error, "exponential rate must be positive");
    }
    return -std::log(rng.next_unit_open()) / rate;
}

double sample_cauchy(SubstreamRng& rng) {
    return std::tan(kPi * (rng.next_unit_open() - 0.5));
}

std::int64_t sample_geometric(SubstreamRng& rng, double q) {
    if (!(q > 0.0) || !(q < 1.0)) {
        throw Error(errc::domain_error, "geometric success probability must lie in (0,1)");
    }
    // Inversion: floor(log(u)/log(1-q)) has P(k) = q (1-q)^k on {0,1,...}.
    return static_cast<std::int64_t>(std::floor(std::log(rng.next_unit_open()) / std::log1p(-q)));
}

double sample_gamma(SubstreamRng& rng, double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0)) {
        throw Error(errc::domain_error, "gamma shape and rate must be positive");
    }
    if (shape < 1.0) {
        // Boost: Gamma(shape) = Gamma(shape+1) * U^{1/shape}.
        double g = sample_gamma(rng, shape + 1.0, 1.0);
        return g * std::pow(rng.next_unit_open(), 1.0 / shape) / rate;
    }
    // Marsaglia & Tsang (2000) squeeze.
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = sample_normal(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        double u = rng.next_unit_open();
        if (u < 1.0 - 0.0331 * (x * x) * (x * x)) {
            return d * v / rate;
        }
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
            return d * v / rate;
        }
    }
}

namespace {

std::int64_t poisson_inversion(SubstreamRng& rng, double mean) {
    double u = rng.next_unit_open();
    double p = std::exp(-mean);
    double cdf = p;
    std::int64_t k = 0;
    while (u > cdf) {
        ++k;
        p *= mean / static_cast<double>(k);
        cdf += p;
        if (k > 2000) break; // cdf numerically saturated
    }
    return k;
}

// Hormann (1993), "The transformed rejection method for generating Poisson
// random variables", algorithm PTRS. Valid for mean >= 10.
std::int64_t poisson_ptrs(SubstreamRng& rng, double mean) {
    double b = 0.931 + 2.53 * std::sqrt(mean);
    double a = -0.059 + 0.02483 * b;
    double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    double v_r = 0.9277 - 3.6224 / (b - 2.0);
    double log_mean = std::log(mean);
    for (;;) {
        double u = rng.next_unit_open() - 0.5;
        double v = rng.next_unit_open();
        double us = 0.5 - std::abs(u);
        double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) {
            return static_cast<std::int64_t>(kf);
        }
        if (kf < 0.0 || (us < 0.013 && v > us)) {
            continue;
        }
        double k = kf;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            k * log_mean - mean - std::lgamma(k + 1.0)) {
            return static_cast<std::int64_t>(kf);
        }
    }
}

} // namespace

std::int64_t sample_poisson(SubstreamRng& rng, double mean) {
    if (!(mean >= 0.0)) {
        throw Error(errc::domain_error, "poisson mean must be non-negative");
    }
    if (mean == 0.0) return 0;
    return mean < 10.0 ? poisson_inversion(rng, mean) : poisson_ptrs(rng, mean);
}

std::int64_t sample_geometric_convolution(SubstreamRng& rng, std::int64_t count, double q) {
    if (count < 0) {
        throw Error(errc::domain_error, "convolution power must be non-negative");
    }
    if (count == 0) return 0;
    if (count <= 64) {
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i < count; ++i) sum += sample_geometric(rng, q);
        return sum;
    }
    // NB(count, q) == Poisson(Gamma(count, rate q/(1-q))): identical law,
    // constant cost.
    double lambda = sample_gamma(rng, static_cast<double>(count), q / (1.0 - q));
    return sample_poisson(rng, lambda);
}

} // namespace dcq
