#pragma once

#include <cstdint>

#include "dcq/rng.hpp"

namespace dcq {

/// Standard normal via the Marsaglia polar method.
double sample_normal(SubstreamRng& rng);

/// Exponential with the given rate, by inversion.
double sample_exponential(SubstreamRng& rng, double rate);

/// Standard Cauchy C(0,1) via the inverse CDF tan(pi (u - 1/2)).
double sample_cauchy(SubstreamRng& rng);

/// Geometric on {0, 1, 2, ...} with success probability q (mean (1-q)/q),
/// by inversion.
std::int64_t sample_geometric(SubstreamRng& rng, double q);

/// Gamma with the given shape and rate, via Marsaglia-Tsang squeeze
/// (boosted through shape+1 for shape < 1).
double sample_gamma(SubstreamRng& rng, double shape, double rate);

/// Poisson with the given mean: sequential inversion below mean 10,
/// Hormann's PTRS transformed rejection above.
std::int64_t sample_poisson(SubstreamRng& rng, double mean);

/// Sum of `count` independent geometric(q) variables on {0,1,...}, i.e. a
/// negative binomial. Small counts are summed directly; large counts go
/// through the exact gamma-Poisson mixture NB(r,q) = Poisson(Gamma(r,
/// q/(1-q))), which keeps the cost O(1) per draw instead of O(count).
std::int64_t sample_geometric_convolution(SubstreamRng& rng, std::int64_t count, double q);

} // namespace dcq
