#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dcq/ratio.hpp"

namespace dcq::exact {

/// Arbitrary-precision rational. Exact trajectory evaluation exists so the
/// superposition and kernel identities can be checked with zero tolerance;
/// it is not meant for horizons much past ~10^3, where the double-precision
/// path is the workhorse.
using BigRat = boost::multiprecision::cpp_rational;

using RatToll = std::function<BigRat(std::int64_t)>;

/// Exact counterpart of evaluate_dense. Weights are taken as exact
/// rationals so nothing in the recursion rounds.
std::vector<BigRat> evaluate_dense(const std::vector<BigRat>& weights,
                                   const std::vector<Ratio>& ratios,
                                   const RatToll& toll,
                                   std::int64_t horizon);

/// Exact kernel column K^j over 0..horizon.
std::vector<BigRat> kernel_column(const std::vector<BigRat>& weights,
                                  const std::vector<Ratio>& ratios,
                                  std::int64_t impulse_index,
                                  std::int64_t horizon);

} // namespace dcq::exact
