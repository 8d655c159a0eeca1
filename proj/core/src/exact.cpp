#include "dcq/exact.hpp"

namespace dcq::exact {

namespace {

std::vector<BigRat> run(const std::vector<BigRat>& weights,
                        const std::vector<Ratio>& ratios,
                        const RatToll& toll,
                        std::int64_t horizon) {
    if (weights.size() != ratios.size()) {
        throw Error(errc::domain_error, "weights and ratios must pair up");
    }
    if (horizon < 0) {
        throw Error(errc::domain_error, "horizon must be non-negative");
    }
    std::vector<BigRat> values(static_cast<std::size_t>(horizon) + 1);
    values[0] = toll(0);
    std::vector<FloorWalker> walkers;
    walkers.reserve(ratios.size());
    for (const Ratio& p : ratios) walkers.emplace_back(p);

    for (std::int64_t n = 1; n <= horizon; ++n) {
        BigRat x = toll(n);
        for (std::size_t j = 0; j < weights.size(); ++j) {
            walkers[j].advance();
            x += weights[j] * values[static_cast<std::size_t>(walkers[j].index())];
        }
        values[static_cast<std::size_t>(n)] = std::move(x);
    }
    return values;
}

} // namespace

std::vector<BigRat> evaluate_dense(const std::vector<BigRat>& weights,
                                   const std::vector<Ratio>& ratios,
                                   const RatToll& toll,
                                   std::int64_t horizon) {
    return run(weights, ratios, toll, horizon);
}

std::vector<BigRat> kernel_column(const std::vector<BigRat>& weights,
                                  const std::vector<Ratio>& ratios,
                                  std::int64_t impulse_index,
                                  std::int64_t horizon) {
    return run(weights, ratios,
               [impulse_index](std::int64_t n) { return BigRat(n == impulse_index ? 1 : 0); },
               horizon);
}

} // namespace dcq::exact
