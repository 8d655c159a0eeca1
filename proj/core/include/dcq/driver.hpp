#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dcq/error.hpp"

namespace dcq {

// Random toll drivers. The three bounded-mean families satisfy
// sup_n E|a_n| < infinity by construction; Cauchy has no mean at all; the
// geometric convolution draws a_n as an n-fold convolution power, one
// independent sample per index.
struct UniformDriver {
    double lo = 0.0;
    double hi = 1.0;
};
struct BernoulliDriver {
    double q = 0.5;
};
struct ShiftedExponentialDriver {
    double rate = 1.0;
    double shift = 0.0;
};
struct CauchyDriver {};
struct GeometricConvolutionDriver {
    double q = 0.5;
};

class DriverSpec {
  public:
    using Variant = std::variant<UniformDriver, BernoulliDriver, ShiftedExponentialDriver,
                                 CauchyDriver, GeometricConvolutionDriver>;

    /// Validates parameter ranges; throws errc::domain_error.
    DriverSpec(Variant variant, std::uint64_t seed);

    const Variant& variant() const noexcept { return variant_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// True for the families with sup_n E|a_n| < infinity.
    bool bounded_mean() const noexcept;

    /// Machine-readable variant name, e.g. "uniform", "cauchy".
    std::string kind() const;

  private:
    Variant variant_;
    std::uint64_t seed_ = 0;
};

/// Realizes a_0..a_N for one replica. Deterministic in (driver.seed(),
/// replica, index): every index owns a hashed substream, so results do not
/// depend on evaluation order.
std::vector<double> sample_toll(const DriverSpec& driver, std::int64_t horizon,
                                std::uint64_t replica = 0);

/// Analytic mean of a single geometric({0,1,...}, q) draw: (1-q)/q.
double geometric_mean_value(double q);

/// Analytic MGF of one geometric(q) draw at t; finite for t < ln(1/(1-q)).
double geometric_mgf(double q, double t);

} // namespace dcq
