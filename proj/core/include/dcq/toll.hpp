#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "dcq/error.hpp"

namespace dcq {

/// A deterministic per-index cost source a_0, a_1, ...
///
/// An instance always returns the same value for the same index. Stored
/// tolls know their last defined index and reject queries beyond it;
/// generated tolls are defined everywhere.
class Toll {
  public:
    using Fn = std::function<double(std::int64_t)>;

    Toll(Fn fn, std::optional<std::int64_t> max_index = std::nullopt)
        : fn_(std::move(fn)), max_index_(max_index) {}

    double operator()(std::int64_t n) const {
        if (max_index_ && n > *max_index_) {
            throw Error(errc::toll_index_out_of_range,
                        "toll value requested at index " + std::to_string(n) +
                            " but the sequence ends at " + std::to_string(*max_index_));
        }
        return fn_(n);
    }

    std::optional<std::int64_t> max_index() const noexcept { return max_index_; }

    /// Unit impulse at j: a_n = 1 when n == j, else 0.
    static Toll impulse(std::int64_t j) {
        return Toll([j](std::int64_t n) { return n == j ? 1.0 : 0.0; });
    }

    /// Prefix indicator: a_n = 1 for n <= n0, else 0.
    static Toll prefix(std::int64_t n0) {
        return Toll([n0](std::int64_t n) { return n <= n0 ? 1.0 : 0.0; });
    }

    static Toll constant(double v) {
        return Toll([v](std::int64_t) { return v; });
    }

    /// Realized toll backed by a stored array; defined for 0..values.size()-1.
    static Toll dense(std::vector<double> values) {
        auto store = std::make_shared<std::vector<double>>(std::move(values));
        std::int64_t last = static_cast<std::int64_t>(store->size()) - 1;
        return Toll([store](std::int64_t n) { return (*store)[static_cast<std::size_t>(n)]; }, last);
    }

  private:
    Fn fn_;
    std::optional<std::int64_t> max_index_;
};

} // namespace dcq
